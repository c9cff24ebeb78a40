#include "veronese/orbits.hpp"

namespace vrn {

namespace {

void tally(const Gf2e& F, const Pt6& p, PointOd& od) {
  switch (classify_point(F, p)) {
    case PointClass::Rank1: ++od.r1; break;
    case PointClass::Rank2Nucleus: ++od.r2n; break;
    case PointClass::Rank2Secant: ++od.r2s; break;
    case PointClass::Rank3: ++od.r3; break;
  }
}

}  // namespace

PointOd point_od(const Gf2e& F, const Line5& l) {
  PointOd od;
  for_each_point(F, l, [&](const Pt3&, const Pt6& p) { tally(F, p, od); });
  return od;
}

PointOd point_od(const Gf2e& F, const Plane5& pl) {
  PointOd od;
  for_each_point(F, pl, [&](const Pt3&, const Pt6& p) { tally(F, p, od); });
  return od;
}

const char* line_orbit_name(LineOrbit o) {
  switch (o) {
    case LineOrbit::o5: return "o5";
    case LineOrbit::o6: return "o6";
    case LineOrbit::o8_1: return "o8_1";
    case LineOrbit::o8_2: return "o8_2";
    case LineOrbit::o9: return "o9";
    case LineOrbit::o10: return "o10";
    case LineOrbit::o12_1: return "o12_1";
    case LineOrbit::o12_2: return "o12_2";
    case LineOrbit::o13_1: return "o13_1";
    case LineOrbit::o13_2: return "o13_2";
    case LineOrbit::o14: return "o14";
    case LineOrbit::o15: return "o15";
    case LineOrbit::o16_1: return "o16_1";
    case LineOrbit::o16_2: return "o16_2";
    case LineOrbit::o17: return "o17";
  }
  return "?";
}

PointOd line_orbit_od(LineOrbit o, std::uint32_t q) {
  switch (o) {
    case LineOrbit::o5: return {2, 0, q - 1, 0};
    case LineOrbit::o6: return {1, 1, q - 1, 0};
    case LineOrbit::o8_1: return {1, 0, 1, q - 1};
    case LineOrbit::o8_2: return {1, 1, 0, q - 1};
    case LineOrbit::o9: return {1, 0, 0, q};
    case LineOrbit::o10: return {0, 0, q + 1, 0};
    case LineOrbit::o12_1: return {0, q + 1, 0, 0};
    case LineOrbit::o12_2: return {0, 1, q, 0};
    case LineOrbit::o13_1: return {0, 1, 1, q - 1};
    case LineOrbit::o13_2: return {0, 0, 2, q - 1};
    case LineOrbit::o14: return {0, 0, 3, q - 2};
    case LineOrbit::o15: return {0, 0, 1, q};
    case LineOrbit::o16_1: return {0, 1, 0, q};
    case LineOrbit::o16_2: return {0, 0, 1, q};
    case LineOrbit::o17: return {0, 0, 0, q + 1};
  }
  return {};
}

LineOrbit classify_line(const FieldTower& T, const Line5& l) {
  const Gf2e& F = T.base();
  const std::uint32_t q = F.q();
  if (q <= 2)
    throw unsupported_error("classify_line: q = 2 goes through exhaustive orbits");
  PointOd od = point_od(F, l);
  if (od == PointOd{2, 0, q - 1, 0}) return LineOrbit::o5;
  if (od == PointOd{1, 1, q - 1, 0}) return LineOrbit::o6;
  if (od == PointOd{1, 0, 1, q - 1}) return LineOrbit::o8_1;
  if (od == PointOd{1, 1, 0, q - 1}) return LineOrbit::o8_2;
  if (od == PointOd{1, 0, 0, q}) return LineOrbit::o9;
  if (od == PointOd{0, 0, q + 1, 0}) return LineOrbit::o10;
  if (od == PointOd{0, q + 1, 0, 0}) return LineOrbit::o12_1;
  if (od == PointOd{0, 1, q, 0}) return LineOrbit::o12_2;
  if (od == PointOd{0, 1, 1, q - 1}) return LineOrbit::o13_1;
  if (od == PointOd{0, 0, 2, q - 1}) return LineOrbit::o13_2;
  if (od == PointOd{0, 0, 3, q - 2}) return LineOrbit::o14;
  if (od == PointOd{0, 1, 0, q}) return LineOrbit::o16_1;
  if (od == PointOd{0, 0, 0, q + 1}) return LineOrbit::o17;
  if (od == PointOd{0, 0, 1, q}) {
    // o15 vs o16_2: recount rank <= 2 points on the GF(q^2) extension of the
    // line. The restricted determinant is a binary cubic with one rational
    // root; for o15 its quadratic factor splits over GF(q^2) (two new rank-2
    // points), for o16_2 the root is triple and nothing new appears.
    const Gf2e& E = T.quad();
    const Embedding& em = T.embed_quad();
    std::array<fe, 6> a{}, b{};
    for (int i = 0; i < 6; ++i) {
      a[i] = em(l.m[0][i]);
      b[i] = em(l.m[1][i]);
    }
    std::uint32_t low = 0;
    for (std::uint32_t t = 0; t <= E.q(); ++t) {
      Pt6 p;
      if (t < E.q()) {
        for (int i = 0; i < 6; ++i) p.c[i] = E.add(a[i], E.mul(static_cast<fe>(t), b[i]));
      } else {
        p.c = b;
      }
      if (sym_rank(E, as_sym(p)) <= 2) ++low;
    }
    if (low == 3) return LineOrbit::o15;
    if (low == 1) return LineOrbit::o16_2;
    throw internal_error("classify_line: extension rank<=2 count is " + std::to_string(low));
  }
  throw internal_error("classify_line: point-OD not in the table");
}

std::map<LineOrbit, std::uint32_t> line_od(const FieldTower& T, const Plane5& pl) {
  const Gf2e& F = T.base();
  std::map<LineOrbit, std::uint32_t> out;
  // Lines of the plane = lines of the parameter PG(2,q).
  for (const Ln3& d : all_pg2_lines(F)) {
    auto pts = points_on_line(F, d);
    auto lift = [&](const Pt3& x) {
      Pt6 p;
      for (int i = 0; i < 6; ++i)
        p.c[i] = F.add(F.add(F.mul(x.c[0], pl.m[0][i]), F.mul(x.c[1], pl.m[1][i])),
                       F.mul(x.c[2], pl.m[2][i]));
      return p;
    };
    Line5 l = span_line(F, lift(pts[0]), lift(pts[1]));
    ++out[classify_line(T, l)];
  }
  return out;
}

}  // namespace vrn
