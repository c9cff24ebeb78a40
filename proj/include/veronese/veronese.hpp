#ifndef VERONESE_VERONESE_HPP
#define VERONESE_VERONESE_HPP

#include <random>
#include <vector>

#include "veronese/projgeom.hpp"

namespace vrn {

/// Symmetric 3x3 view of a PG(5,q) point: [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]].
struct SymMat3 {
  std::array<fe, 6> y{};  // y0..y5
  fe at(int i, int j) const {
    static constexpr int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return y[idx[i][j]];
  }
};

inline SymMat3 as_sym(const Pt6& p) { return SymMat3{p.c}; }
inline Pt6 as_point(const SymMat3& m) { return Pt6{m.y}; }

enum class PointClass : std::uint8_t { Rank1 = 0, Rank2Nucleus = 1, Rank2Secant = 2, Rank3 = 3 };

Pt6 veronese(const Gf2e& F, const Pt3& p);
int sym_rank(const Gf2e& F, const SymMat3& m);  // 1..3; zero matrix throws
PointClass classify_point(const Gf2e& F, const Pt6& p);

std::vector<Pt6> veronese_points(const Gf2e& F);  // all q^2+q+1, in pg2 order

/// Representative of an element of PGL(3,q) acting by M -> A M A^T.
struct Collineation {
  std::array<std::array<fe, 3>, 3> a{};
};

fe det3(const Gf2e& F, const std::array<std::array<fe, 3>, 3>& a);
Collineation random_collineation(const Gf2e& F, std::mt19937_64& rng);
Collineation compose(const Gf2e& F, const Collineation& g, const Collineation& h);  // g after h

Pt6 apply(const Gf2e& F, const Collineation& g, const Pt6& p);
Pt3 apply(const Gf2e& F, const Collineation& g, const Pt3& p);  // natural PG(2,q) action
Line5 apply(const Gf2e& F, const Collineation& g, const Line5& l);
Plane5 apply(const Gf2e& F, const Collineation& g, const Plane5& pl);

/// A conic on the Veronese surface together with its PG(2,q) preimage line.
struct VConic {
  Ln3 preimage;
  std::vector<Pt6> points;  // q+1 rank-1 points
};

VConic conic_of_line(const Gf2e& F, const Ln3& l);  // nu(l)
Pt6 nucleus_of_conic(const Gf2e& F, const Ln3& l);

/// The unique conic attached to a rank-2 point (secant or nucleus case).
VConic conic_of(const Gf2e& F, const Pt6& rank2_point);

}  // namespace vrn

#endif
