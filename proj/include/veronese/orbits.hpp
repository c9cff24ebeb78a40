#ifndef VERONESE_ORBITS_HPP
#define VERONESE_ORBITS_HPP

#include <map>
#include <optional>
#include <unordered_map>

#include "veronese/cubic.hpp"

namespace vrn {

struct PointOd {
  std::uint32_t r1 = 0, r2n = 0, r2s = 0, r3 = 0;
  std::uint32_t sum() const { return r1 + r2n + r2s + r3; }
  friend bool operator==(const PointOd&, const PointOd&) = default;
};

PointOd point_od(const Gf2e& F, const Line5& l);
PointOd point_od(const Gf2e& F, const Plane5& pl);

enum class LineOrbit : std::uint8_t {
  o5, o6, o8_1, o8_2, o9, o10, o12_1, o12_2, o13_1, o13_2, o14, o15, o16_1, o16_2, o17
};
const char* line_orbit_name(LineOrbit o);
PointOd line_orbit_od(LineOrbit o, std::uint32_t q);  // Table entries

/// K-orbit of a line; q > 2. The single ambiguous point-OD pair [0,0,1,q]
/// (o15 vs o16_2) is split by recounting rank-2 points on the GF(q^2)
/// extension of the line: the o15 extension gains two, the o16_2 extension
/// none. Certified against the exhaustive orbit decomposition at q = 4.
LineOrbit classify_line(const FieldTower& T, const Line5& l);

std::map<LineOrbit, std::uint32_t> line_od(const FieldTower& T, const Plane5& pl);

enum class PlaneOrbit : std::uint8_t {
  S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13, S14, S14p, S15, S15p
};
const char* plane_orbit_name(PlaneOrbit s);     // "Sigma1" .. "Sigma15p"
const char* plane_orbit_display(PlaneOrbit s);  // UTF-8 sigma glyphs
std::optional<PlaneOrbit> plane_orbit_from_name(const std::string& s);
std::vector<PlaneOrbit> valid_plane_orbits(std::uint32_t q);

struct PlaneInvariants {
  PointOd od;
  int nucleus_meet_dim = -1;  // -1 empty, 0 point, 1 line, 2 plane
  Cubic cubic;
  CubicType cubic_type = CubicType::IdenticallyZero;
  bool rank_le2_collinear = false;
  std::optional<int> inflexion_count;  // only on the branches that use it
};

/// One pass over the points of a plane: the point-OD plus the parameter points
/// the decision tree consumes. Reusable scratch; vectors keep their capacity.
struct PlaneScan {
  PointOd od;
  std::vector<Pt3> rank1;     // parameters of rank-1 points (capped)
  std::vector<Pt3> r2n;       // parameters of nucleus-plane points (capped)
  std::vector<Pt3> rank_le2;  // parameters of rank <= 2 points (capped)
  bool le2_overflow = false;

  void clear() {
    od = {};
    rank1.clear();
    r2n.clear();
    rank_le2.clear();
    le2_overflow = false;
  }
};

void scan_plane(const Gf2e& F, const Plane5& pl, PlaneScan& s);

/// Classification context: base field plus extensions, and the exhaustive
/// PGL(3,2)-orbit table when q = 2 (where the invariant tree degenerates).
class PlaneClassifier {
 public:
  explicit PlaneClassifier(const FieldTower& T);

  const FieldTower& tower() const { return *tower_; }
  const Gf2e& field() const { return tower_->base(); }

  PlaneOrbit classify(const Plane5& pl) const;
  /// Same, with a scan already taken for pl.
  PlaneOrbit classify(const Plane5& pl, const PlaneScan& s) const;
  PlaneInvariants invariants(const Plane5& pl) const;

  /// Table-1 representative; parameter rows pick the first valid scalar in
  /// field enumeration order. Throws invalid_label_error when the label does
  /// not exist at this q.
  Plane5 representative(PlaneOrbit s) const;

  const std::unordered_map<Plane5, PlaneOrbit>& q2_orbit_table() const;

 private:
  const FieldTower* tower_;
  std::unordered_map<Plane5, PlaneOrbit> q2_table_;
};

enum class HyperplaneOrbit : std::uint8_t { H1, H2r, H2i, H3 };
const char* hyperplane_orbit_name(HyperplaneOrbit h);

/// Orbit of a hyperplane given by its dual 6-vector, via the conic it cuts on
/// the Veronese surface.
HyperplaneOrbit hyperplane_orbit(const Gf2e& F, const std::array<fe, 6>& dual);

/// Counts [H1, H2r, H2i, H3] over the q^2+q+1 hyperplanes through the plane.
std::array<std::uint32_t, 4> hyperplane_od(const Gf2e& F, const Plane5& pl);

/// Enumerates coset representatives of PGL(3,q): all invertible matrices whose
/// first nonzero entry in row-major order is 1.
void for_each_pgl3(const Gf2e& F, const std::function<void(const Collineation&)>& fn);
std::uint64_t pgl3_order(std::uint32_t q);

}  // namespace vrn

#endif
