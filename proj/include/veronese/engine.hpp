#ifndef VERONESE_ENGINE_HPP
#define VERONESE_ENGINE_HPP

#include <map>
#include <string>

#include "veronese/orbits.hpp"

namespace vrn {

enum class CensusGroup : std::uint8_t { Pgl3, Sym7 };

struct CensusOptions {
  CensusGroup group = CensusGroup::Pgl3;
  unsigned shards = 1;
  bool full = true;  // q = 8 census defaults to sampled verification unless set
  std::uint64_t random_samples = 1000000;
  std::uint64_t seed = 20240901;
};

struct LabelCount {
  std::uint64_t count = 0;
  bool has_rep = false;
  Plane5 representative{};  // lexicographically least canonical matrix seen
};

struct CensusResult {
  std::uint32_t q = 0;
  std::uint32_t modulus = 0;
  CensusGroup group = CensusGroup::Pgl3;
  bool sampled = false;
  std::uint64_t total = 0;  // distinct planes meeting the surface (processed)
  std::map<std::string, LabelCount> labels;
  std::uint64_t forbidden_rank_dist_1 = 0;  // [1, 0, q^2+q]
  std::uint64_t forbidden_rank_dist_2 = 0;  // [2, r2 < q, r3]
  double seconds = 0;
};

/// Enumerates every plane with at least one rank-1 point exactly once (per
/// Veronese point, owned by its least rank-1 point), classifies it and counts
/// per label. Deterministic: shard count does not change the result.
CensusResult census(const PlaneClassifier& C, const CensusOptions& opt);

/// Number of group elements fixing the plane (canonical-form equality).
std::uint64_t stabilizer_order(const PlaneClassifier& C, const Plane5& pl);

// The two forbidden rank distributions; exposed for negative-control tests.
bool forbidden_rank_dist_1(const PointOd& od, std::uint32_t q);
bool forbidden_rank_dist_2(const PointOd& od, std::uint32_t q);

/// q = 2 only: the seven rank-1 points form a frame of PG(5,2); permuting them
/// realizes the full Sym7 stabilizer of the surface. Returns matrices for a
/// transposition and a 7-cycle.
using Mat6 = std::array<std::array<fe, 6>, 6>;
std::vector<Mat6> sym7_generators(const Gf2e& F);
Pt6 apply_mat6(const Gf2e& F, const Mat6& T, const Pt6& p);
Plane5 apply_mat6(const Gf2e& F, const Mat6& T, const Plane5& pl);

std::map<LineOrbit, std::uint64_t> line_census(const FieldTower& T);

Line5 embed_line(const Gf2e& E, const Embedding& em, const Line5& l);
Plane5 embed_plane(const Gf2e& E, const Embedding& em, const Plane5& pl);

struct BijectionReport {
  std::uint64_t lines = 0;  // lines of the requested orbit
  std::uint64_t good = 0;   // lying in exactly one plane with the property
  std::uint64_t bad = 0;
  std::string first_bad;
  std::map<std::string, std::uint64_t> winner_labels;  // orbit of the witness plane
};

/// Exhaustive scan of all lines of PG(5,q) of the given orbit (o14, o15 or
/// o17). For each line, counts the planes through it that meet the surface in
/// exactly one point and whose cubic has three inflexion points on the line
/// over the stated field (GF(q) for o14, GF(q^2) for o15, GF(q^3) for o17;
/// decided by restricting the cubic and its Hessian to the line), and records
/// the K-orbit of the unique witness plane.
BijectionReport bijection_scan(const PlaneClassifier& C, LineOrbit type);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> check_table1(const PlaneClassifier& C);
std::vector<CheckResult> check_census_labels(const PlaneClassifier& C, const CensusResult& r);
std::vector<CheckResult> check_nonexistence(const CensusResult& r);
std::vector<CheckResult> check_orbit_stabilizer(const PlaneClassifier& C, const CensusResult& r,
                                                const std::vector<PlaneOrbit>& labels);
std::vector<CheckResult> check_sym7_fusion(const PlaneClassifier& C);
std::vector<CheckResult> check_sigma6_hyperplanes(const PlaneClassifier& C);
std::vector<CheckResult> check_inflexion_sweep(unsigned h);
std::vector<CheckResult> check_solvers(unsigned h);
std::vector<CheckResult> check_equivariance(const PlaneClassifier& C, int samples,
                                            std::uint64_t seed);
std::vector<CheckResult> check_line_orbits_q4(std::uint32_t modulus = 0);
std::vector<CheckResult> check_extension_inflexions(const PlaneClassifier& C);
std::vector<CheckResult> check_bijections(const PlaneClassifier& C, bool include_o14);
std::vector<CheckResult> check_census_determinism(const PlaneClassifier& C);

}  // namespace vrn

#endif
