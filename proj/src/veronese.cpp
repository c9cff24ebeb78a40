#include "veronese/veronese.hpp"

#include <algorithm>

namespace vrn {

Pt6 veronese(const Gf2e& F, const Pt3& p) {
  const fe u0 = p.c[0], u1 = p.c[1], u2 = p.c[2];
  Pt6 out{{F.sq(u0), F.mul(u0, u1), F.mul(u0, u2), F.sq(u1), F.mul(u1, u2), F.sq(u2)}};
  return normalize(F, out);
}

int sym_rank(const Gf2e& F, const SymMat3& m) {
  const fe a = m.y[0], b = m.y[1], c = m.y[2], d = m.y[3], e = m.y[4], f = m.y[5];
  // det of a symmetric matrix in characteristic 2: the mixed term cancels.
  fe det = F.add(F.add(F.mul(a, F.mul(d, f)), F.mul(a, F.sq(e))),
                 F.add(F.mul(f, F.sq(b)), F.mul(d, F.sq(c))));
  if (det != 0) return 3;
  const bool any2 = F.add(F.mul(a, d), F.sq(b)) != 0 || F.add(F.mul(a, f), F.sq(c)) != 0 ||
                    F.add(F.mul(d, f), F.sq(e)) != 0 || F.add(F.mul(a, e), F.mul(b, c)) != 0 ||
                    F.add(F.mul(b, e), F.mul(c, d)) != 0 || F.add(F.mul(b, f), F.mul(c, e)) != 0;
  if (any2) return 2;
  if (a | b | c | d | e | f) return 1;
  throw domain_error("sym_rank: zero matrix");
}

PointClass classify_point(const Gf2e& F, const Pt6& p) {
  int r = sym_rank(F, as_sym(p));
  if (r == 1) return PointClass::Rank1;
  if (r == 3) return PointClass::Rank3;
  return (p.c[0] == 0 && p.c[3] == 0 && p.c[5] == 0) ? PointClass::Rank2Nucleus
                                                     : PointClass::Rank2Secant;
}

std::vector<Pt6> veronese_points(const Gf2e& F) {
  std::vector<Pt6> out;
  out.reserve(pg2_size(F));
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) out.push_back(veronese(F, pg2_point(F, i)));
  return out;
}

fe det3(const Gf2e& F, const std::array<std::array<fe, 3>, 3>& a) {
  fe d = 0;
  d = F.add(d, F.mul(a[0][0], F.add(F.mul(a[1][1], a[2][2]), F.mul(a[1][2], a[2][1]))));
  d = F.add(d, F.mul(a[0][1], F.add(F.mul(a[1][0], a[2][2]), F.mul(a[1][2], a[2][0]))));
  d = F.add(d, F.mul(a[0][2], F.add(F.mul(a[1][0], a[2][1]), F.mul(a[1][1], a[2][0]))));
  return d;
}

Collineation random_collineation(const Gf2e& F, std::mt19937_64& rng) {
  Collineation g;
  do {
    for (auto& row : g.a)
      for (auto& v : row) v = static_cast<fe>(rng() % F.q());
  } while (det3(F, g.a) == 0);
  return g;
}

Collineation compose(const Gf2e& F, const Collineation& g, const Collineation& h) {
  Collineation r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      fe s = 0;
      for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(g.a[i][k], h.a[k][j]));
      r.a[i][j] = s;
    }
  return r;
}

Pt6 apply(const Gf2e& F, const Collineation& g, const Pt6& p) {
  if (det3(F, g.a) == 0) throw domain_error("apply: singular matrix");
  SymMat3 m = as_sym(p);
  // A M A^T
  fe t[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      fe s = 0;
      for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(g.a[i][k], m.at(k, j)));
      t[i][j] = s;
    }
  SymMat3 out;
  auto entry = [&](int i, int j) {
    fe s = 0;
    for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(t[i][k], g.a[j][k]));
    return s;
  };
  out.y[0] = entry(0, 0);
  out.y[1] = entry(0, 1);
  out.y[2] = entry(0, 2);
  out.y[3] = entry(1, 1);
  out.y[4] = entry(1, 2);
  out.y[5] = entry(2, 2);
  return normalize(F, as_point(out));
}

Pt3 apply(const Gf2e& F, const Collineation& g, const Pt3& p) {
  Pt3 out;
  for (int i = 0; i < 3; ++i) {
    fe s = 0;
    for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(g.a[i][k], p.c[k]));
    out.c[i] = s;
  }
  return normalize(F, out);
}

Line5 apply(const Gf2e& F, const Collineation& g, const Line5& l) {
  Pt6 a = apply(F, g, Pt6{l.m[0]});
  Pt6 b = apply(F, g, Pt6{l.m[1]});
  return span_line(F, a, b);
}

Plane5 apply(const Gf2e& F, const Collineation& g, const Plane5& pl) {
  Pt6 a = apply(F, g, Pt6{pl.m[0]});
  Pt6 b = apply(F, g, Pt6{pl.m[1]});
  Pt6 c = apply(F, g, Pt6{pl.m[2]});
  return span_plane(F, a, b, c);
}

VConic conic_of_line(const Gf2e& F, const Ln3& l) {
  VConic out;
  out.preimage = normalize(F, l);
  for (const Pt3& p : points_on_line(F, l)) out.points.push_back(veronese(F, p));
  return out;
}

Pt6 nucleus_of_conic(const Gf2e& F, const Ln3& l) {
  // Tangent lines of nu(l) inside the conic plane are concurrent at the nucleus.
  VConic c = conic_of_line(F, l);
  Plane5 cp = span_plane(F, c.points[0], c.points[1], c.points[2]);
  auto tangent_at = [&](const Pt6& X) {
    // The unique line of the conic plane through X meeting the conic only at X.
    for (const Pt6& other : points_of(F, cp)) {
      if (other == X) continue;
      Line5 cand = span_line(F, X, other);
      int hits = 0;
      for (const Pt6& cpnt : c.points)
        if (contains(F, cand, cpnt)) ++hits;
      if (hits == 1) return cand;
    }
    throw internal_error("nucleus_of_conic: no tangent found");
  };
  Line5 t1 = tangent_at(c.points[0]);
  Line5 t2 = tangent_at(c.points[1]);
  for (const Pt6& p : points_of(F, t1))
    if (contains(F, t2, p)) return p;
  throw internal_error("nucleus_of_conic: tangents do not meet");
}

VConic conic_of(const Gf2e& F, const Pt6& rank2_point) {
  PointClass cls = classify_point(F, rank2_point);
  if (cls != PointClass::Rank2Nucleus && cls != PointClass::Rank2Secant)
    throw domain_error("conic_of: point is not of rank 2");
  const std::uint32_t n = pg2_size(F);
  if (cls == PointClass::Rank2Secant) {
    // Brute force: find rank-1 points P, Q with the point on <P,Q>.
    for (std::uint32_t i = 0; i < n; ++i) {
      Pt3 pi = pg2_point(F, i);
      Pt6 P = veronese(F, pi);
      if (P == rank2_point) continue;
      Line5 sec;
      try {
        sec = span_line(F, P, rank2_point);
      } catch (const dependence_error&) {
        continue;
      }
      for (std::uint32_t j = i + 1; j < n; ++j) {
        Pt3 qj = pg2_point(F, j);
        Pt6 Q = veronese(F, qj);
        if (contains(F, sec, Q)) return conic_of_line(F, line_through(F, pi, qj));
      }
    }
    throw internal_error("conic_of: no secant through rank-2 point");
  }
  // Nucleus case: sweep all conics and compare nuclei.
  for (const Ln3& l : all_pg2_lines(F)) {
    if (nucleus_of_conic(F, l) == rank2_point) return conic_of_line(F, l);
  }
  throw internal_error("conic_of: no conic with the given nucleus");
}

}  // namespace vrn
