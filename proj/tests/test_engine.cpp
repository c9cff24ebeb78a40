#include <set>

#include "doctest.h"
#include "veronese/engine.hpp"

using namespace vrn;

TEST_CASE("q=2 census: 15 classes, orbit-stabilizer, Sym7 fusion") {
  FieldTower T(1);
  PlaneClassifier C(T);
  CensusOptions opt;
  CensusResult r = census(C, opt);
  CHECK(r.labels.size() == 15);
  for (auto& cr : check_census_labels(C, r)) {
    INFO(cr.detail);
    CHECK(cr.pass);
  }
  for (auto& cr : check_nonexistence(r)) CHECK(cr.pass);
  // orbit-stabilizer over every label: count * stabilizer = 168
  for (auto& cr : check_orbit_stabilizer(C, r, valid_plane_orbits(2))) {
    INFO(cr.name, " ", cr.detail);
    CHECK(cr.pass);
  }
  // the Sym7 fusion has the documented pattern
  for (auto& cr : check_sym7_fusion(C)) {
    INFO(cr.detail);
    CHECK(cr.pass);
  }
  // census totals agree with a direct filter over all 1395 planes
  std::uint64_t direct = 0;
  all_planes(T.base(), [&](const Plane5& pl) {
    if (point_od(T.base(), pl).r1 > 0) ++direct;
  });
  CHECK(direct == r.total);
}

TEST_CASE("q=4 census: 15 labels, Sigma14 absent, Sigma14p present") {
  FieldTower T(2);
  PlaneClassifier C(T);
  CensusOptions opt;
  CensusResult r = census(C, opt);
  CHECK(r.labels.size() == 15);
  CHECK(r.labels.count("Sigma14") == 0);
  CHECK(r.labels.count("Sigma14p") == 1);
  for (auto& cr : check_census_labels(C, r)) {
    INFO(cr.detail);
    CHECK(cr.pass);
  }
  for (auto& cr : check_nonexistence(r)) CHECK(cr.pass);
  // orbit-stabilizer for every label at q = 4
  for (auto& cr : check_orbit_stabilizer(C, r, valid_plane_orbits(4))) {
    INFO(cr.name, " ", cr.detail);
    CHECK(cr.pass);
  }
  // bijection partner sizes: at q = 4 (h even) the one-rational-inflexion
  // class is Sigma12
  CHECK(r.labels.at("Sigma12").count == pgl3_order(4) / 2);
  CHECK(r.labels.at("Sigma13").count == pgl3_order(4) / 3);
  // determinism across shard counts
  for (auto& cr : check_census_determinism(C)) {
    INFO(cr.detail);
    CHECK(cr.pass);
  }
}

TEST_CASE("forbidden rank distributions: negative control") {
  PointOd bad1{1, 0, 0, 20};  // q = 4: [1, 0, q^2+q]
  CHECK(forbidden_rank_dist_1(bad1, 4));
  PointOd bad2{2, 1, 2, 16};  // q = 4: r2 = 3 < q
  CHECK(forbidden_rank_dist_2(bad2, 4));
  PointOd good{1, 0, 5, 15};
  CHECK(!forbidden_rank_dist_1(good, 4));
  CHECK(!forbidden_rank_dist_2(good, 4));
}

TEST_CASE("stabilizer orders at q=4 for the parametrized classes") {
  FieldTower T(2);
  PlaneClassifier C(T);
  CHECK(stabilizer_order(C, C.representative(PlaneOrbit::S12)) == 2);
  CHECK(stabilizer_order(C, C.representative(PlaneOrbit::S13)) == 3);
}

TEST_CASE("sigma6 hyperplane distribution and inflexion sweeps") {
  for (unsigned h : {2u, 3u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    for (auto& cr : check_sigma6_hyperplanes(C)) {
      INFO(cr.detail);
      CHECK(cr.pass);
    }
  }
  for (unsigned h : {3u, 4u, 5u}) {
    for (auto& cr : check_inflexion_sweep(h)) {
      INFO(cr.detail);
      CHECK(cr.pass);
    }
  }
}

TEST_CASE("bijections at q=4: o15 and o17 lines") {
  FieldTower T(2);
  PlaneClassifier C(T);
  for (auto& cr : check_bijections(C, false)) {
    INFO(cr.name, " ", cr.detail);
    CHECK(cr.pass);
  }
  for (auto& cr : check_extension_inflexions(C)) {
    INFO(cr.name, " ", cr.detail);
    CHECK(cr.pass);
  }
}

TEST_CASE("census totals are stable regression baselines") {
  FieldTower T2(1), T4(2);
  PlaneClassifier C2(T2), C4(T4);
  CensusOptions opt;
  CHECK(census(C2, opt).total == 805);
  CHECK(census(C4, opt).total == 105133);
}

TEST_CASE("cubic locus size equals r1+r2n+r2s over the whole q=4 census") {
  FieldTower T(2);
  const Gf2e& F = T.base();
  auto vp = veronese_points(F);
  PlaneScan s;
  std::uint64_t planes = 0;
  for (std::uint32_t v = 0; v < vp.size(); ++v) {
    planes_through(F, vp[v], [&](const Plane5& pl) {
      scan_plane(F, pl, s);
      // ownership: least rank-1 point, as in the census
      if (s.od.r1 != 1) {
        std::uint32_t best = 0xFFFFFFFF;
        for (const Pt3& par : s.rank1) {
          Pt6 pt;
          for (int j = 0; j < 6; ++j)
            pt.c[j] = F.add(F.add(F.mul(par.c[0], pl.m[0][j]), F.mul(par.c[1], pl.m[1][j])),
                            F.mul(par.c[2], pl.m[2][j]));
          Pt6 nn = normalize(F, pt);
          Pt3 pre{{F.sqrt(nn.c[0]), F.sqrt(nn.c[3]), F.sqrt(nn.c[5])}};
          best = std::min(best, pg2_index(F, normalize(F, pre)));
        }
        if (best != v) return;
      }
      ++planes;
      Cubic c = cubic_of_plane(F, pl);
      auto rp = rational_points(F, c);
      std::uint64_t locus = rp.whole_plane ? pg2_size(F) : rp.pts.size();
      REQUIRE(locus == s.od.r1 + s.od.r2n + s.od.r2s);
    });
  }
  CHECK(planes == 105133);
}

TEST_CASE("sampled census mode classifies cleanly at q=8") {
  FieldTower T(3);
  PlaneClassifier C(T);
  CensusOptions opt;
  opt.full = false;
  opt.random_samples = 2000;
  CensusResult r = census(C, opt);
  CHECK(r.sampled);
  CHECK(r.forbidden_rank_dist_1 == 0);
  CHECK(r.forbidden_rank_dist_2 == 0);
  CHECK(r.total > 0);
  // every label seen must be valid at q = 8
  std::set<std::string> valid;
  for (PlaneOrbit s : valid_plane_orbits(8)) valid.insert(plane_orbit_name(s));
  for (auto& [name, lc] : r.labels) CHECK(valid.count(name) == 1);
}
