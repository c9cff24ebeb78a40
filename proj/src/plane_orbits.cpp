#include "veronese/orbits.hpp"

#include <algorithm>
#include <sstream>

namespace vrn {

namespace {

bool all_collinear(const Gf2e& F, const std::vector<Pt3>& pts) {
  if (pts.size() <= 2) return true;
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (!collinear(F, pts[0], pts[1], pts[i])) return false;
  return true;
}

std::string od_str(const PointOd& od) {
  std::ostringstream os;
  os << "[" << od.r1 << "," << od.r2n << "," << od.r2s << "," << od.r3 << "]";
  return os.str();
}

[[noreturn]] void tree_panic(const char* where, const PointOd& od) {
  throw internal_error(std::string("classify_plane: unreachable branch at ") + where +
                       " with point-OD " + od_str(od));
}

// Point-OD of the parameter line through a and b inside the plane.
PointOd param_line_od(const Gf2e& F, const Plane5& pl, const Pt3& a, const Pt3& b) {
  Ln3 l = line_through(F, a, b);
  PointOd od;
  for (const Pt3& x : points_on_line(F, l)) {
    Pt6 p;
    for (int i = 0; i < 6; ++i)
      p.c[i] = F.add(F.add(F.mul(x.c[0], pl.m[0][i]), F.mul(x.c[1], pl.m[1][i])),
                     F.mul(x.c[2], pl.m[2][i]));
    switch (classify_point(F, p)) {
      case PointClass::Rank1: ++od.r1; break;
      case PointClass::Rank2Nucleus: ++od.r2n; break;
      case PointClass::Rank2Secant: ++od.r2s; break;
      case PointClass::Rank3: ++od.r3; break;
    }
  }
  return od;
}

// Non-singular rational points of C lying on its Hessian, restricted to the
// given points (which must exhaust the rational locus of C).
int count_inflexions_on(const Gf2e& F, const Cubic& C, const std::vector<Pt3>& locus) {
  Cubic H = hessian(F, C);
  int n = 0;
  for (const Pt3& p : locus) {
    if (eval(F, H, p) != 0) continue;
    auto g = gradient(F, C, p);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) continue;
    ++n;
  }
  return n;
}

}  // namespace

void scan_plane(const Gf2e& F, const Plane5& pl, PlaneScan& s) {
  s.clear();
  const std::uint32_t n = pg2_size(F);
  const std::size_t cap = 4 * static_cast<std::size_t>(F.q()) + 6;
  for (std::uint32_t i = 0; i < n; ++i) {
    Pt3 par = pg2_point(F, i);
    std::array<fe, 6> p;
    for (int j = 0; j < 6; ++j)
      p[j] = F.add(F.add(F.mul(par.c[0], pl.m[0][j]), F.mul(par.c[1], pl.m[1][j])),
                   F.mul(par.c[2], pl.m[2][j]));
    // rank and nucleus test on the raw vector; both are scale-invariant
    const fe a = p[0], b = p[1], c = p[2], d = p[3], e = p[4], f = p[5];
    fe det = F.add(F.add(F.mul(a, F.mul(d, f)), F.mul(a, F.sq(e))),
                   F.add(F.mul(f, F.sq(b)), F.mul(d, F.sq(c))));
    if (det != 0) {
      ++s.od.r3;
      continue;
    }
    const bool rank2 = F.add(F.mul(a, d), F.sq(b)) != 0 || F.add(F.mul(a, f), F.sq(c)) != 0 ||
                       F.add(F.mul(d, f), F.sq(e)) != 0 ||
                       F.add(F.mul(a, e), F.mul(b, c)) != 0 ||
                       F.add(F.mul(b, e), F.mul(c, d)) != 0 ||
                       F.add(F.mul(b, f), F.mul(c, e)) != 0;
    if (rank2) {
      if ((a | d | f) == 0) {
        ++s.od.r2n;
        if (s.r2n.size() < cap) s.r2n.push_back(par);
      } else {
        ++s.od.r2s;
      }
    } else {
      ++s.od.r1;
      if (s.rank1.size() < cap) s.rank1.push_back(par);
    }
    if (s.rank_le2.size() < cap)
      s.rank_le2.push_back(par);
    else
      s.le2_overflow = true;
  }
}

const char* plane_orbit_name(PlaneOrbit s) {
  switch (s) {
    case PlaneOrbit::S1: return "Sigma1";
    case PlaneOrbit::S2: return "Sigma2";
    case PlaneOrbit::S3: return "Sigma3";
    case PlaneOrbit::S4: return "Sigma4";
    case PlaneOrbit::S5: return "Sigma5";
    case PlaneOrbit::S6: return "Sigma6";
    case PlaneOrbit::S7: return "Sigma7";
    case PlaneOrbit::S8: return "Sigma8";
    case PlaneOrbit::S9: return "Sigma9";
    case PlaneOrbit::S10: return "Sigma10";
    case PlaneOrbit::S11: return "Sigma11";
    case PlaneOrbit::S12: return "Sigma12";
    case PlaneOrbit::S13: return "Sigma13";
    case PlaneOrbit::S14: return "Sigma14";
    case PlaneOrbit::S14p: return "Sigma14p";
    case PlaneOrbit::S15: return "Sigma15";
    case PlaneOrbit::S15p: return "Sigma15p";
  }
  return "?";
}

const char* plane_orbit_display(PlaneOrbit s) {
  switch (s) {
    case PlaneOrbit::S1: return "Σ1";
    case PlaneOrbit::S2: return "Σ2";
    case PlaneOrbit::S3: return "Σ3";
    case PlaneOrbit::S4: return "Σ4";
    case PlaneOrbit::S5: return "Σ5";
    case PlaneOrbit::S6: return "Σ6";
    case PlaneOrbit::S7: return "Σ7";
    case PlaneOrbit::S8: return "Σ8";
    case PlaneOrbit::S9: return "Σ9";
    case PlaneOrbit::S10: return "Σ10";
    case PlaneOrbit::S11: return "Σ11";
    case PlaneOrbit::S12: return "Σ12";
    case PlaneOrbit::S13: return "Σ13";
    case PlaneOrbit::S14: return "Σ14";
    case PlaneOrbit::S14p: return "Σ14'";
    case PlaneOrbit::S15: return "Σ15";
    case PlaneOrbit::S15p: return "Σ15'";
  }
  return "?";
}

std::optional<PlaneOrbit> plane_orbit_from_name(const std::string& s) {
  static const PlaneOrbit all[] = {
      PlaneOrbit::S1,  PlaneOrbit::S2,   PlaneOrbit::S3,   PlaneOrbit::S4,
      PlaneOrbit::S5,  PlaneOrbit::S6,   PlaneOrbit::S7,   PlaneOrbit::S8,
      PlaneOrbit::S9,  PlaneOrbit::S10,  PlaneOrbit::S11,  PlaneOrbit::S12,
      PlaneOrbit::S13, PlaneOrbit::S14,  PlaneOrbit::S14p, PlaneOrbit::S15,
      PlaneOrbit::S15p};
  for (PlaneOrbit o : all)
    if (s == plane_orbit_name(o) || s == plane_orbit_display(o)) return o;
  return std::nullopt;
}

std::vector<PlaneOrbit> valid_plane_orbits(std::uint32_t q) {
  std::vector<PlaneOrbit> out = {PlaneOrbit::S1, PlaneOrbit::S2,  PlaneOrbit::S3,
                                 PlaneOrbit::S4, PlaneOrbit::S5,  PlaneOrbit::S6,
                                 PlaneOrbit::S7, PlaneOrbit::S8,  PlaneOrbit::S9,
                                 PlaneOrbit::S10, PlaneOrbit::S11, PlaneOrbit::S12};
  if (q == 2) {
    out.insert(out.end(), {PlaneOrbit::S14p, PlaneOrbit::S15, PlaneOrbit::S15p});
  } else if (q == 4) {
    out.insert(out.end(), {PlaneOrbit::S13, PlaneOrbit::S14p, PlaneOrbit::S15});
  } else {
    out.insert(out.end(), {PlaneOrbit::S13, PlaneOrbit::S14, PlaneOrbit::S15});
  }
  return out;
}

PlaneClassifier::PlaneClassifier(const FieldTower& T) : tower_(&T) {
  if (T.base().q() == 2) {
    // Ground truth for the degenerate field: expand every representative's
    // orbit under PGL(3,2).
    const Gf2e& F = T.base();
    for (PlaneOrbit s : valid_plane_orbits(2)) {
      Plane5 rep = representative(s);
      for_each_pgl3(F, [&](const Collineation& g) {
        Plane5 img = apply(F, g, rep);
        auto [it, inserted] = q2_table_.emplace(img, s);
        if (!inserted && it->second != s)
          throw internal_error("q=2 orbits are not disjoint");
      });
    }
  }
}

const std::unordered_map<Plane5, PlaneOrbit>& PlaneClassifier::q2_orbit_table() const {
  return q2_table_;
}

PlaneOrbit PlaneClassifier::classify(const Plane5& pl) const {
  PlaneScan s;
  scan_plane(tower_->base(), pl, s);
  return classify(pl, s);
}

PlaneOrbit PlaneClassifier::classify(const Plane5& pl, const PlaneScan& s) const {
  const Gf2e& F = tower_->base();
  const std::uint32_t q = F.q();
  const unsigned h = F.h();
  const PointOd& od = s.od;

  if (od.r1 == 0) throw out_of_scope_error("classify_plane: no rank-1 point");

  if (q == 2) {
    auto it = q2_table_.find(pl);
    if (it != q2_table_.end()) return it->second;
    throw internal_error("classify_plane: q=2 plane missing from orbit table");
  }

  if (od.r1 == q + 1) {
    if (od == PointOd{q + 1, 1, q * q - 1, 0}) return PlaneOrbit::S1;
    tree_panic("r1=q+1", od);
  }
  if (od.r1 == 3) {
    if (od == PointOd{3, 0, 3 * q - 3, q * q - 2 * q + 1}) return PlaneOrbit::S2;
    tree_panic("r1=3", od);
  }
  if (od.r1 == 2) {
    if (od == PointOd{2, 0, 2 * q - 2, q * q - q + 1}) return PlaneOrbit::S5;
    if (od == PointOd{2, 1, 2 * q - 2, q * q - q}) {
      // Sigma3 carries a tangent (o6) line joining a rank-1 point to the
      // nucleus-plane point; in Sigma4 both joins are of type o8_2.
      const Pt3& n0 = s.r2n.at(0);
      for (const Pt3& p1 : s.rank1) {
        PointOd lod = param_line_od(F, pl, p1, n0);
        if (lod == PointOd{1, 1, q - 1, 0}) return PlaneOrbit::S3;
        if (!(lod == PointOd{1, 1, 0, q - 1})) tree_panic("r1=2 join", lod);
      }
      return PlaneOrbit::S4;
    }
    tree_panic("r1=2", od);
  }
  if (od.r1 != 1) tree_panic("r1", od);

  if (od == PointOd{1, q + 1, q * q - 1, 0}) {
    if (!cubic_of_plane(F, pl).is_zero()) tree_panic("S7 cubic", od);
    return PlaneOrbit::S7;
  }
  if (od == PointOd{1, q + 1, q - 1, q * q - q}) return PlaneOrbit::S8;

  if (od == PointOd{1, 1, 2 * q - 1, q * q - q}) {
    // The rank<=2 locus is two full lines (Sigma9) or a line plus a conic
    // (Sigma10): split off a full line through the nucleus point, then test
    // what is left for collinearity.
    if (s.le2_overflow) tree_panic("S9/S10 overflow", od);
    const Pt3 n0 = s.r2n.at(0);
    Ln3 heavy{};
    bool found = false;
    for (const Pt3& p : s.rank_le2) {
      if (p == n0) continue;
      Ln3 l = line_through(F, n0, p);
      std::uint32_t cnt = 0;
      for (const Pt3& r : s.rank_le2)
        if (on_line(F, l, r)) ++cnt;
      if (cnt == q + 1) {
        heavy = l;
        found = true;
        break;
      }
    }
    if (!found) tree_panic("S9/S10 no full line", od);
    std::vector<Pt3> rest;
    for (const Pt3& p : s.rank_le2)
      if (!on_line(F, heavy, p)) rest.push_back(p);
    if (rest.size() != q) tree_panic("S9/S10 rest", od);
    return all_collinear(F, rest) ? PlaneOrbit::S9 : PlaneOrbit::S10;
  }

  if (od == PointOd{1, 1, q - 1, q * q}) {
    if (s.le2_overflow) tree_panic("S11/S15 overflow", od);
    return all_collinear(F, s.rank_le2) ? PlaneOrbit::S15 : PlaneOrbit::S11;
  }

  if (od == PointOd{1, 0, q + 1, q * q - 1}) {
    if (s.le2_overflow) tree_panic("S6 overflow", od);
    std::vector<Pt3> rank2;
    for (const Pt3& p : s.rank_le2)
      if (!(p == s.rank1.at(0))) rank2.push_back(p);
    if (all_collinear(F, rank2)) return PlaneOrbit::S6;
    Cubic C = cubic_of_plane(F, pl);
    if (C.a012 == 0) tree_panic("S12/S14 a012", od);
    int n = count_inflexions_on(F, C, s.rank_le2);
    if (h % 2 == 0) {
      if (n == 1) return PlaneOrbit::S12;
    } else {
      if (n == 0) return PlaneOrbit::S12;
      if (n == 3) return PlaneOrbit::S14;
    }
    tree_panic("S12/S14 inflexions", od);
  }

  if (od == PointOd{1, 0, q - 1, q * q + 1}) {
    if (s.le2_overflow) tree_panic("S13/S14 overflow", od);
    Cubic C = cubic_of_plane(F, pl);
    if (C.a012 == 0) tree_panic("S13/S14 a012", od);
    int n = count_inflexions_on(F, C, s.rank_le2);
    if (h % 2 == 1) {
      if (n == 1) return PlaneOrbit::S13;
    } else {
      if (n == 0) return PlaneOrbit::S13;
      if (n == 3) return q == 4 ? PlaneOrbit::S14p : PlaneOrbit::S14;
    }
    tree_panic("S13/S14 inflexions", od);
  }

  tree_panic("r1=1", od);
}

PlaneInvariants PlaneClassifier::invariants(const Plane5& pl) const {
  const Gf2e& F = tower_->base();
  PlaneScan s;
  scan_plane(F, pl, s);
  if (s.od.r1 == 0) throw out_of_scope_error("invariants_of: no rank-1 point");
  PlaneInvariants inv;
  inv.od = s.od;
  const std::uint32_t n = pg2_size(F);
  if (s.od.r2n == 0)
    inv.nucleus_meet_dim = -1;
  else if (s.od.r2n == 1)
    inv.nucleus_meet_dim = 0;
  else if (s.od.r2n == F.q() + 1)
    inv.nucleus_meet_dim = 1;
  else if (s.od.r2n == n)
    inv.nucleus_meet_dim = 2;
  else
    throw internal_error("invariants_of: nucleus meet is not a subspace");
  inv.cubic = cubic_of_plane(F, pl);
  inv.cubic_type = factorization_type(F, inv.cubic, tower_).type;
  inv.rank_le2_collinear = s.le2_overflow ? false : all_collinear(F, s.rank_le2);
  if (inv.cubic.a012 != 0 && !s.le2_overflow)
    inv.inflexion_count = count_inflexions_on(F, inv.cubic, s.rank_le2);
  return inv;
}

Plane5 PlaneClassifier::representative(PlaneOrbit s) const {
  const Gf2e& F = tower_->base();
  const std::uint32_t q = F.q();
  const unsigned h = F.h();
  auto valid = valid_plane_orbits(q);
  if (std::find(valid.begin(), valid.end(), s) == valid.end())
    throw invalid_label_error(std::string(plane_orbit_name(s)) + " does not exist at q = " +
                              std::to_string(q));
  auto mk = [&](std::array<fe, 6> gx, std::array<fe, 6> gy, std::array<fe, 6> gz) {
    return span_plane(F, Pt6{gx}, Pt6{gy}, Pt6{gz});
  };
  auto pick_c = [&](auto&& pred) -> fe {
    for (std::uint32_t c = 1; c < q; ++c)
      if (pred(static_cast<fe>(c))) return static_cast<fe>(c);
    throw internal_error("representative: no valid scalar in the field");
  };
  switch (s) {
    case PlaneOrbit::S1:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0});
    case PlaneOrbit::S2:
      return mk({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1});
    case PlaneOrbit::S3:
      return mk({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0});
    case PlaneOrbit::S4:
      return mk({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0});
    case PlaneOrbit::S5:
      return mk({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 1});
    case PlaneOrbit::S6: {
      fe c = pick_c([&](fe v) { return F.trace(F.inv(v)) == 1; });
      return mk({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, c, 1, 0});
    }
    case PlaneOrbit::S7:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0});
    case PlaneOrbit::S8:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0});
    case PlaneOrbit::S9:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0});
    case PlaneOrbit::S10:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1});
    case PlaneOrbit::S11:
      return mk({1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1});
    case PlaneOrbit::S12: {
      fe c = pick_c([&](fe v) {
        if (F.trace(v) != 1) return false;
        if (q > 2 && h % 2 == 1) return !F.is_admissible(F.inv(v));
        return true;
      });
      return mk({1, 0, c, 0, 0, F.sq(c)}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 1});
    }
    case PlaneOrbit::S13: {
      fe c = pick_c([&](fe v) {
        if (F.trace(v) != 0) return false;
        if (h % 2 == 0) return !F.is_admissible(F.inv(v));
        return true;
      });
      return mk({1, 0, c, 0, 0, F.sq(c)}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 1});
    }
    case PlaneOrbit::S14: {
      fe c = pick_c(
          [&](fe v) { return F.trace(v) == F.trace(1) && F.is_admissible(F.inv(v)); });
      return mk({1, 0, c, 0, 0, F.sq(c)}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 1});
    }
    case PlaneOrbit::S14p:
      return mk({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1}, {1, 1, 1, 1, 1, 0});
    case PlaneOrbit::S15:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0});
    case PlaneOrbit::S15p:
      return mk({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 0});
  }
  throw invalid_label_error("representative: unknown label");
}

const char* hyperplane_orbit_name(HyperplaneOrbit h) {
  switch (h) {
    case HyperplaneOrbit::H1: return "H1";
    case HyperplaneOrbit::H2r: return "H2r";
    case HyperplaneOrbit::H2i: return "H2i";
    case HyperplaneOrbit::H3: return "H3";
  }
  return "?";
}

HyperplaneOrbit hyperplane_orbit(const Gf2e& F, const std::array<fe, 6>& dual) {
  // A hyperplane section of the Veronese surface is the conic with the same
  // six coefficients in the parameter plane.
  switch (classify_conic(F, dual)) {
    case ConicClass::DoubleLine: return HyperplaneOrbit::H1;
    case ConicClass::TwoLines: return HyperplaneOrbit::H2r;
    case ConicClass::ConjugatePair: return HyperplaneOrbit::H2i;
    case ConicClass::NonSingular: return HyperplaneOrbit::H3;
  }
  throw internal_error("hyperplane_orbit: unreachable");
}

std::array<std::uint32_t, 4> hyperplane_od(const Gf2e& F, const Plane5& pl) {
  std::array<std::uint32_t, 4> out{};
  for (const auto& h : hyperplanes_through(F, pl))
    ++out[static_cast<int>(hyperplane_orbit(F, h))];
  return out;
}

void for_each_pgl3(const Gf2e& F, const std::function<void(const Collineation&)>& fn) {
  const std::uint32_t q = F.q();
  // One matrix per scalar class: the first nonzero entry (row-major) is 1.
  for (int lead = 0; lead < 9; ++lead) {
    std::array<fe, 9> e{};
    e[lead] = 1;
    std::uint64_t total = 1;
    for (int i = lead + 1; i < 9; ++i) total *= q;
    for (std::uint64_t a = 0; a < total; ++a) {
      std::uint64_t aa = a;
      for (int i = lead + 1; i < 9; ++i) {
        e[i] = static_cast<fe>(aa % q);
        aa /= q;
      }
      Collineation g{{{{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}}}};
      if (det3(F, g.a) != 0) fn(g);
    }
  }
}

std::uint64_t pgl3_order(std::uint32_t q) {
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  return q3 * (q3 - 1) * (static_cast<std::uint64_t>(q) * q - 1);
}

}  // namespace vrn
