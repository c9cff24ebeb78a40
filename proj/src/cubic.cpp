#include "veronese/cubic.hpp"

#include <algorithm>
#include <map>

namespace vrn {

namespace {

// Dense trivariate polynomial with exponents <= 3 per variable; enough for all
// division and re-multiplication work on cubics.
struct TriPoly {
  fe c[4][4][4] = {};

  bool zero() const {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          if (c[i][j][k]) return false;
    return true;
  }
  int degree() const {
    int d = -1;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          if (c[i][j][k]) d = std::max(d, i + j + k);
    return d;
  }
};

TriPoly mul(const Gf2e& F, const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (!a.c[i][j][k]) continue;
        for (int p = 0; p + i < 4; ++p)
          for (int q = 0; q + j < 4; ++q)
            for (int s = 0; s + k < 4; ++s) {
              if (!b.c[p][q][s]) continue;
              r.c[i + p][j + q][k + s] =
                  F.add(r.c[i + p][j + q][k + s], F.mul(a.c[i][j][k], b.c[p][q][s]));
            }
      }
  return r;
}

TriPoly from_cubic(const Cubic& C) {
  TriPoly f;
  const int e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // X_i * X_j^2
      int ex = e[i][0] + 2 * e[j][0], ey = e[i][1] + 2 * e[j][1], ez = e[i][2] + 2 * e[j][2];
      f.c[ex][ey][ez] ^= C.A[i][j];
    }
  f.c[1][1][1] ^= C.a012;
  return f;
}

Cubic to_cubic(const Gf2e& F, const TriPoly& f) {
  Cubic C;
  const int e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int ex = e[i][0] + 2 * e[j][0], ey = e[i][1] + 2 * e[j][1], ez = e[i][2] + 2 * e[j][2];
      C.A[i][j] = f.c[ex][ey][ez];
    }
  C.A[0][0] = f.c[3][0][0];
  C.A[1][1] = f.c[0][3][0];
  C.A[2][2] = f.c[0][0][3];
  C.a012 = f.c[1][1][1];
  (void)F;
  return C;
}

TriPoly linear_poly(const Ln3& l) {
  TriPoly f;
  f.c[1][0][0] = l.d[0];
  f.c[0][1][0] = l.d[1];
  f.c[0][0][1] = l.d[2];
  return f;
}

// Exact division by a linear form; nullopt if it does not divide.
std::optional<TriPoly> divide_linear(const Gf2e& F, const TriPoly& f, const Ln3& l) {
  int v = 0;
  while (v < 3 && l.d[v] == 0) ++v;
  if (v == 3) throw domain_error("divide_linear: zero form");
  fe lv = l.d[v];
  // l = lv * (x_v + r) with r a linear form in the other variables.
  fe r[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    if (i != v) r[i] = F.div(l.d[i], lv);
  TriPoly work = f, quot;
  // Synthetic division in the variable x_v.
  for (int dv = 3; dv >= 1; --dv) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          int ev[3] = {i, j, k};
          if (ev[v] != dv) continue;
          fe coef = work.c[i][j][k];
          if (!coef) continue;
          // x_v^dv * m  ->  quotient gains x_v^(dv-1) * m, work gains r * x_v^(dv-1) * m.
          int eq[3] = {i, j, k};
          eq[v] -= 1;
          quot.c[eq[0]][eq[1]][eq[2]] = F.add(quot.c[eq[0]][eq[1]][eq[2]], coef);
          work.c[i][j][k] = 0;
          for (int t = 0; t < 3; ++t) {
            if (t == v || r[t] == 0) continue;
            int er[3] = {eq[0], eq[1], eq[2]};
            er[t] += 1;
            work.c[er[0]][er[1]][er[2]] =
                F.add(work.c[er[0]][er[1]][er[2]], F.mul(coef, r[t]));
          }
        }
  }
  if (!work.zero()) return std::nullopt;  // remainder is x_v-free; must vanish
  // f = quot * lv * (x_v + r) => true quotient is quot / lv.
  fe ilv = F.inv(lv);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) quot.c[i][j][k] = F.mul(quot.c[i][j][k], ilv);
  return quot;
}

std::array<fe, 6> quad_coeffs(const TriPoly& f) {
  // (a00, a01, a02, a11, a12, a22)
  return {f.c[2][0][0], f.c[1][1][0], f.c[1][0][1], f.c[0][2][0], f.c[0][1][1], f.c[0][0][2]};
}

}  // namespace

Cubic cubic_of_plane(const Gf2e& F, const Plane5& pl) {
  return cubic_of_gens(F, {Pt6{pl.m[0]}, Pt6{pl.m[1]}, Pt6{pl.m[2]}});
}

Cubic cubic_of_gens(const Gf2e& F, const std::array<Pt6, 3>& gens) {
  // Entries of the symmetric pencil x M1 + y M2 + z M3 as linear forms.
  // lf[e][t]: coefficient of parameter t in entry e, entries ordered y0..y5.
  fe lf[6][3];
  for (int e = 0; e < 6; ++e)
    for (int t = 0; t < 3; ++t) lf[e][t] = gens[t].c[e];

  Cubic C;
  auto add_lin_times_squares = [&](const fe* L, const fe* S) {
    // L linear form, S squares form (s0 x^2 + s1 y^2 + s2 z^2): only A entries.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) C.A[i][j] = F.add(C.A[i][j], F.mul(L[i], S[j]));
  };
  // det = m00 m11 m22 + m00 m12^2 + m22 m01^2 + m11 m02^2 (symmetric, char 2).
  const fe* m00 = lf[0];
  const fe* m01 = lf[1];
  const fe* m02 = lf[2];
  const fe* m11 = lf[3];
  const fe* m12 = lf[4];
  const fe* m22 = lf[5];
  fe sq01[3], sq02[3], sq12[3];
  for (int t = 0; t < 3; ++t) {
    sq01[t] = F.sq(m01[t]);
    sq02[t] = F.sq(m02[t]);
    sq12[t] = F.sq(m12[t]);
  }
  add_lin_times_squares(m00, sq12);
  add_lin_times_squares(m22, sq01);
  add_lin_times_squares(m11, sq02);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      fe ab = F.mul(m00[i], m11[j]);
      if (ab == 0) continue;
      for (int k = 0; k < 3; ++k) {
        fe v = F.mul(ab, m22[k]);
        if (v == 0) continue;
        if (i == j)
          C.A[k][i] = F.add(C.A[k][i], v);
        else if (i == k)
          C.A[j][i] = F.add(C.A[j][i], v);
        else if (j == k)
          C.A[i][j] = F.add(C.A[i][j], v);
        else
          C.a012 = F.add(C.a012, v);
      }
    }
  return C;
}

fe eval(const Gf2e& F, const Cubic& C, const Pt3& p) {
  fe s2[3] = {F.sq(p.c[0]), F.sq(p.c[1]), F.sq(p.c[2])};
  fe acc = 0;
  for (int i = 0; i < 3; ++i) {
    fe row = 0;
    for (int j = 0; j < 3; ++j) row = F.add(row, F.mul(C.A[i][j], s2[j]));
    acc = F.add(acc, F.mul(p.c[i], row));
  }
  return F.add(acc, F.mul(C.a012, F.mul(p.c[0], F.mul(p.c[1], p.c[2]))));
}

std::array<fe, 3> gradient(const Gf2e& F, const Cubic& C, const Pt3& p) {
  // d/dX_i of X_i X_j^2 is X_j^2, of X_j X_i^2 is 0, of XYZ the complementary product.
  fe s2[3] = {F.sq(p.c[0]), F.sq(p.c[1]), F.sq(p.c[2])};
  std::array<fe, 3> g{};
  for (int i = 0; i < 3; ++i) {
    fe v = 0;
    for (int j = 0; j < 3; ++j) v = F.add(v, F.mul(C.A[i][j], s2[j]));
    int a = (i + 1) % 3, b = (i + 2) % 3;
    g[i] = F.add(v, F.mul(C.a012, F.mul(p.c[a], p.c[b])));
  }
  return g;
}

RationalPoints rational_points(const Gf2e& F, const Cubic& C) {
  RationalPoints out;
  if (C.is_zero()) {
    out.whole_plane = true;
    return out;
  }
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 p = pg2_point(F, i);
    if (eval(F, C, p) == 0) out.pts.push_back(p);
  }
  return out;
}

Cubic phi(const Gf2e& F, const Cubic& C) {
  Cubic out;
  // Adj(A)^T is the cofactor matrix: entry (i,j) = minor deleting row i, col j.
  const auto& A = C.A;
  auto minor = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    return F.add(F.mul(A[r0][c0], A[r1][c1]), F.mul(A[r0][c1], A[r1][c0]));
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      fe v = minor(i, j);
      if (i != j) v = F.add(v, F.mul(C.a012, A[i][3 - i - j]));
      out.A[i][j] = v;
    }
  out.a012 = F.sq(C.a012);
  return out;
}

Cubic hessian(const Gf2e& F, const Cubic& C) {
  if (C.a012 == 0)
    throw unsupported_error("hessian: a012 = 0 is outside the supported characterisation");
  return phi(F, phi(F, C));
}

std::vector<Pt3> singular_points(const Gf2e& F, const Cubic& C) {
  if (C.is_zero()) throw domain_error("singular_points: identically zero cubic");
  std::vector<Pt3> out;
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 p = pg2_point(F, i);
    if (eval(F, C, p) != 0) continue;
    auto g = gradient(F, C, p);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) out.push_back(p);
  }
  return out;
}

std::vector<Pt3> inflexion_points(const Gf2e& F, const Cubic& C) {
  Cubic H = hessian(F, C);
  std::vector<Pt3> out;
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 p = pg2_point(F, i);
    if (eval(F, C, p) != 0) continue;
    if (eval(F, H, p) != 0) continue;
    auto g = gradient(F, C, p);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) continue;
    out.push_back(p);
  }
  return out;
}

Cubic substitute(const Gf2e& F, const Cubic& C, const std::array<std::array<fe, 3>, 3>& B) {
  TriPoly rows[3];
  for (int i = 0; i < 3; ++i) {
    rows[i].c[1][0][0] = B[i][0];
    rows[i].c[0][1][0] = B[i][1];
    rows[i].c[0][0][1] = B[i][2];
  }
  TriPoly acc;
  const TriPoly f = from_cubic(C);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        fe coef = f.c[i][j][k];
        if (!coef) continue;
        TriPoly term;
        term.c[0][0][0] = coef;
        for (int t = 0; t < i; ++t) term = mul(F, term, rows[0]);
        for (int t = 0; t < j; ++t) term = mul(F, term, rows[1]);
        for (int t = 0; t < k; ++t) term = mul(F, term, rows[2]);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) acc.c[a][b][c] = F.add(acc.c[a][b][c], term.c[a][b][c]);
      }
  return to_cubic(F, acc);
}

bool proportional(const Gf2e& F, const Cubic& a, const Cubic& b) {
  fe ratio = 0;
  auto consider = [&](fe x, fe y) {
    if (x == 0 && y == 0) return true;
    if (x == 0 || y == 0) return false;
    fe r = F.div(y, x);
    if (ratio == 0) ratio = r;
    return ratio == r;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!consider(a.A[i][j], b.A[i][j])) return false;
  return consider(a.a012, b.a012);
}

ConicClass classify_conic(const Gf2e& F, const std::array<fe, 6>& h) {
  const fe a00 = h[0], a01 = h[1], a02 = h[2], a11 = h[3], a12 = h[4], a22 = h[5];
  if ((a00 | a01 | a02 | a11 | a12 | a22) == 0)
    throw domain_error("classify_conic: zero form");
  if (a01 == 0 && a02 == 0 && a12 == 0) return ConicClass::DoubleLine;
  fe inv = F.add(F.add(F.mul(a00, F.sq(a12)), F.mul(a11, F.sq(a02))),
                 F.add(F.mul(a22, F.sq(a01)), F.mul(a01, F.mul(a02, a12))));
  if (inv != 0) return ConicClass::NonSingular;
  // Singular with an off-diagonal entry: two distinct lines (rational or a
  // conjugate pair) through the radical point (a12, a02, a01). Restrict to a
  // line avoiding the radical and count projective roots: 2 or 0.
  Pt3 s = normalize(F, Pt3{{a12, a02, a01}});
  auto evalq = [&](const Pt3& p) {
    fe v = 0;
    v = F.add(v, F.mul(a00, F.sq(p.c[0])));
    v = F.add(v, F.mul(a01, F.mul(p.c[0], p.c[1])));
    v = F.add(v, F.mul(a02, F.mul(p.c[0], p.c[2])));
    v = F.add(v, F.mul(a11, F.sq(p.c[1])));
    v = F.add(v, F.mul(a12, F.mul(p.c[1], p.c[2])));
    v = F.add(v, F.mul(a22, F.sq(p.c[2])));
    return v;
  };
  Pt3 A{}, Bp{};
  if (s.c[0] == 1) {
    A = Pt3{{0, 1, 0}};
    Bp = Pt3{{0, 0, 1}};
  } else if (s.c[1] == 1) {
    A = Pt3{{1, 0, 0}};
    Bp = Pt3{{0, 0, 1}};
  } else {
    A = Pt3{{1, 0, 0}};
    Bp = Pt3{{0, 1, 0}};
  }
  // Q(A + tB) = alpha t^2 + beta t + gamma; the point B sits at t = infinity.
  fe gamma = evalq(A);
  fe alpha = evalq(Bp);
  Pt3 AB{{F.add(A.c[0], Bp.c[0]), F.add(A.c[1], Bp.c[1]), F.add(A.c[2], Bp.c[2])}};
  fe beta = F.add(F.add(evalq(AB), gamma), alpha);
  int roots = 0;
  if (alpha == 0) {
    ++roots;  // B itself
    if (beta != 0) ++roots;
  } else {
    roots = static_cast<int>(F.quadratic_roots(alpha, beta, gamma).size());
  }
  if (roots != 0 && roots != 2)
    throw internal_error("classify_conic: singular restriction with odd root count");
  return roots == 2 ? ConicClass::TwoLines : ConicClass::ConjugatePair;
}

const char* cubic_type_name(CubicType t) {
  switch (t) {
    case CubicType::IdenticallyZero: return "IdenticallyZero";
    case CubicType::TripleLine: return "TripleLine";
    case CubicType::DoubleLinePlusLine: return "DoubleLinePlusLine";
    case CubicType::ThreeConcurrentLines: return "ThreeConcurrentLines";
    case CubicType::ThreeNonConcurrentLines: return "ThreeNonConcurrentLines";
    case CubicType::LineTimesConic: return "LineTimesConic";
    case CubicType::LinePlusConjugatePair: return "LinePlusConjugatePair";
    case CubicType::ThreeConjugateLines: return "ThreeConjugateLines";
    case CubicType::IrreducibleCubic: return "IrreducibleCubic";
  }
  return "?";
}

namespace {

// Does the embedded cubic acquire a linear factor over GF(q^3)? Candidate
// lines are spanned by roots of the restrictions to two rational lines.
bool splits_over_cubic_extension(const Gf2e& F, const TriPoly& f, const FieldTower& tower) {
  if (3 * F.h() > 16) return false;  // extension out of range; treated as irreducible
  const Gf2e& E = tower.cube();
  const Embedding& em = tower.embed_cube();
  TriPoly g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) g.c[i][j][k] = em(f.c[i][j][k]);
  // Roots of g on the lines Z(Y) (parametrized (1,0,t),(0,0,1)) and Z(Z).
  auto roots_on = [&](int which) {
    std::vector<Pt3> out;
    for (std::uint32_t t = 0; t <= E.q(); ++t) {
      Pt3 p{};
      if (which == 0)
        p = t < E.q() ? Pt3{{1, 0, static_cast<fe>(t)}} : Pt3{{0, 0, 1}};
      else
        p = t < E.q() ? Pt3{{1, static_cast<fe>(t), 0}} : Pt3{{0, 1, 0}};
      // evaluate g at p
      fe acc = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k) {
            if (!g.c[i][j][k]) continue;
            fe m = g.c[i][j][k];
            for (int u = 0; u < i; ++u) m = E.mul(m, p.c[0]);
            for (int u = 0; u < j; ++u) m = E.mul(m, p.c[1]);
            for (int u = 0; u < k; ++u) m = E.mul(m, p.c[2]);
            acc = E.add(acc, m);
          }
      if (acc == 0) out.push_back(p);
    }
    return out;
  };
  auto ra = roots_on(0), rb = roots_on(1);
  for (const Pt3& a : ra)
    for (const Pt3& b : rb) {
      if (a == b) continue;
      Ln3 l;
      try {
        l = line_through(E, a, b);
      } catch (const domain_error&) {
        continue;
      }
      if (divide_linear(E, g, l)) return true;
    }
  return false;
}

}  // namespace

Factorization factorization_type(const Gf2e& F, const Cubic& C, const FieldTower* tower) {
  Factorization out;
  if (C.is_zero()) {
    out.type = CubicType::IdenticallyZero;
    return out;
  }
  TriPoly rem = from_cubic(C);
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Ln3 l{pg2_point(F, i).c};
    while (true) {
      auto q = divide_linear(F, rem, l);
      if (!q) break;
      rem = *q;
      bool found = false;
      for (auto& [ln, mult] : out.linear)
        if (ln == l) {
          ++mult;
          found = true;
        }
      if (!found) out.linear.emplace_back(l, 1);
      if (rem.degree() <= 0) break;
    }
    if (rem.degree() <= 0) break;
  }
  int extracted = 0;
  for (auto& [ln, mult] : out.linear) extracted += mult;

  if (extracted == 3) {
    if (out.linear.size() == 1) {
      out.type = CubicType::TripleLine;
    } else if (out.linear.size() == 2) {
      out.type = CubicType::DoubleLinePlusLine;
    } else {
      // Concurrency: common point of the three lines.
      fe rows[9];
      for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 3; ++j) rows[r * 3 + j] = out.linear[r].first.d[j];
      out.type = rref(F, rows, 3, 3) < 3 ? CubicType::ThreeConcurrentLines
                                         : CubicType::ThreeNonConcurrentLines;
    }
    return out;
  }
  if (extracted == 1) {
    out.residual_conic = quad_coeffs(rem);
    out.has_residual_conic = true;
    ConicClass cc = classify_conic(F, out.residual_conic);
    if (cc == ConicClass::NonSingular) {
      out.type = CubicType::LineTimesConic;
    } else if (cc == ConicClass::ConjugatePair) {
      out.type = CubicType::LinePlusConjugatePair;
    } else {
      throw internal_error("factorization_type: rational conic factors survived extraction");
    }
    return out;
  }
  if (extracted != 0) throw internal_error("factorization_type: impossible residual degree");
  out.type = (tower && splits_over_cubic_extension(F, rem, *tower))
                 ? CubicType::ThreeConjugateLines
                 : CubicType::IrreducibleCubic;
  return out;
}

}  // namespace vrn
