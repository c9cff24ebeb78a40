#ifndef VERONESE_CUBIC_HPP
#define VERONESE_CUBIC_HPP

#include <optional>
#include <vector>

#include "veronese/veronese.hpp"

namespace vrn {

/// Ternary cubic in the (A, a012) representation: A[i][j] is the coefficient
/// of X_i * X_j^2 (so row i lists [a_i00, a_i11, a_i22]) and a012 multiplies XYZ.
struct Cubic {
  std::array<std::array<fe, 3>, 3> A{};
  fe a012 = 0;

  bool is_zero() const {
    if (a012 != 0) return false;
    for (const auto& r : A)
      for (auto v : r)
        if (v != 0) return false;
    return true;
  }
  friend bool operator==(const Cubic&, const Cubic&) = default;
};

Cubic cubic_of_plane(const Gf2e& F, const Plane5& pl);
/// Same determinant expansion for an explicit (not necessarily canonical)
/// generator triple; the result depends on the chosen frame.
Cubic cubic_of_gens(const Gf2e& F, const std::array<Pt6, 3>& gens);

fe eval(const Gf2e& F, const Cubic& C, const Pt3& p);
std::array<fe, 3> gradient(const Gf2e& F, const Cubic& C, const Pt3& p);

struct RationalPoints {
  bool whole_plane = false;  // identically-zero cubic: every point vanishes
  std::vector<Pt3> pts;
};
RationalPoints rational_points(const Gf2e& F, const Cubic& C);

/// The envelope operator: (A, a012) -> (Adj(A)^T + a012 * pattern(A), a012^2).
Cubic phi(const Gf2e& F, const Cubic& C);
/// Phi applied twice: (Phi^2(A), a012^4). Requires a012 != 0.
Cubic hessian(const Gf2e& F, const Cubic& C);

std::vector<Pt3> singular_points(const Gf2e& F, const Cubic& C);
/// Non-singular rational points of C lying on its Hessian. Requires a012 != 0.
std::vector<Pt3> inflexion_points(const Gf2e& F, const Cubic& C);

/// f'(v) = f(B v): coordinate substitution by an invertible matrix.
Cubic substitute(const Gf2e& F, const Cubic& C, const std::array<std::array<fe, 3>, 3>& B);
/// The cubic attached to the image plane equals the substituted cubic up to
/// scalar; comparison helper for equivariance checks.
bool proportional(const Gf2e& F, const Cubic& a, const Cubic& b);

enum class ConicClass : std::uint8_t { DoubleLine, TwoLines, ConjugatePair, NonSingular };
/// Coefficients (a00, a01, a02, a11, a12, a22) of a nonzero ternary quadratic.
ConicClass classify_conic(const Gf2e& F, const std::array<fe, 6>& h);

enum class CubicType : std::uint8_t {
  IdenticallyZero,
  TripleLine,
  DoubleLinePlusLine,
  ThreeConcurrentLines,
  ThreeNonConcurrentLines,
  LineTimesConic,          // line times a non-singular conic
  LinePlusConjugatePair,   // line times a pair of conjugate lines
  ThreeConjugateLines,     // q <= 32 only (needs the cubic extension field)
  IrreducibleCubic,
};
const char* cubic_type_name(CubicType t);

struct Factorization {
  CubicType type = CubicType::IdenticallyZero;
  std::vector<std::pair<Ln3, int>> linear;   // factors with multiplicities
  std::array<fe, 6> residual_conic{};        // set when a conic remains
  bool has_residual_conic = false;
};

/// Exact linear-factor extraction by trivariate division, residual conic
/// classified per the non-singularity criterion. The tower is used only to
/// split ThreeConjugateLines from IrreducibleCubic; pass nullptr to skip that
/// (the residual-3 case then reports IrreducibleCubic).
Factorization factorization_type(const Gf2e& F, const Cubic& C, const FieldTower* tower);

}  // namespace vrn

#endif
