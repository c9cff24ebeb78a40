#include <random>
#include <set>

#include "doctest.h"
#include "veronese/engine.hpp"

using namespace vrn;

TEST_CASE("table roundtrips and point-ODs at q in {2,4,8}") {
  for (unsigned h : {1u, 2u, 3u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    for (auto& cr : check_table1(C)) {
      INFO(cr.name, ": ", cr.detail);
      CHECK(cr.pass);
    }
  }
}

TEST_CASE("table roundtrips at q=16 and q=32") {
  for (unsigned h : {4u, 5u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    for (auto& cr : check_table1(C)) {
      INFO(cr.name, ": ", cr.detail);
      CHECK(cr.pass);
    }
  }
}

TEST_CASE("invalid labels throw") {
  FieldTower T4(2);
  PlaneClassifier C4(T4);
  CHECK_THROWS_AS(C4.representative(PlaneOrbit::S14), invalid_label_error);
  CHECK_THROWS_AS(C4.representative(PlaneOrbit::S15p), invalid_label_error);
  FieldTower T2(1);
  PlaneClassifier C2(T2);
  CHECK_THROWS_AS(C2.representative(PlaneOrbit::S13), invalid_label_error);
  CHECK_THROWS_AS(C2.representative(PlaneOrbit::S14), invalid_label_error);
  FieldTower T8(3);
  PlaneClassifier C8(T8);
  CHECK_THROWS_AS(C8.representative(PlaneOrbit::S14p), invalid_label_error);
}

TEST_CASE("out-of-scope planes are rejected") {
  for (unsigned h : {1u, 2u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    const Gf2e& F = T.base();
    // the nucleus plane meets the surface in no point
    Plane5 nuc = span_plane(F, Pt6{{0, 1, 0, 0, 0, 0}}, Pt6{{0, 0, 1, 0, 0, 0}},
                            Pt6{{0, 0, 0, 0, 1, 0}});
    CHECK(point_od(F, nuc).r1 == 0);
    CHECK_THROWS_AS(C.classify(nuc), out_of_scope_error);
    CHECK_THROWS_AS(C.invariants(nuc), out_of_scope_error);
  }
}

TEST_CASE("separating pairs with equal point-ODs") {
  for (unsigned h : {2u, 3u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    auto check_pair = [&](PlaneOrbit a, PlaneOrbit b) {
      CHECK(point_od(T.base(), C.representative(a)) == point_od(T.base(), C.representative(b)));
      CHECK(C.classify(C.representative(a)) == a);
      CHECK(C.classify(C.representative(b)) == b);
    };
    check_pair(PlaneOrbit::S3, PlaneOrbit::S4);
    check_pair(PlaneOrbit::S9, PlaneOrbit::S10);
    check_pair(PlaneOrbit::S11, PlaneOrbit::S15);
    check_pair(PlaneOrbit::S6, PlaneOrbit::S12);
    if (h == 2) check_pair(PlaneOrbit::S13, PlaneOrbit::S14p);
    if (h == 3) {
      check_pair(PlaneOrbit::S6, PlaneOrbit::S14);
      check_pair(PlaneOrbit::S12, PlaneOrbit::S14);
    }
  }
}

TEST_CASE("pi_{1,1} lies in Sigma14 for q = 8") {
  FieldTower T(3);
  PlaneClassifier C(T);
  const Gf2e& F = T.base();
  Plane5 pi11 = span_plane(F, Pt6{{1, 1, 1, 1, 1, 1}}, Pt6{{1, 0, 0, 1, 0, 0}},
                           Pt6{{0, 0, 0, 1, 0, 1}});
  CHECK(C.classify(pi11) == PlaneOrbit::S14);
}

TEST_CASE("invariants records") {
  FieldTower T(2);
  PlaneClassifier C(T);
  const Gf2e& F = T.base();
  const std::uint32_t q = F.q();

  auto i5 = C.invariants(C.representative(PlaneOrbit::S5));
  CHECK(i5.od == PointOd{2, 0, 2 * q - 2, q * q - q + 1});
  CHECK(i5.nucleus_meet_dim == -1);

  auto i8 = C.invariants(C.representative(PlaneOrbit::S8));
  CHECK(i8.nucleus_meet_dim == 1);
  CHECK(i8.cubic_type == CubicType::DoubleLinePlusLine);

  auto i15 = C.invariants(C.representative(PlaneOrbit::S15));
  CHECK(i15.rank_le2_collinear);
  CHECK(i15.cubic_type == CubicType::TripleLine);

  auto i10 = C.invariants(C.representative(PlaneOrbit::S10));
  CHECK(i10.cubic_type == CubicType::LineTimesConic);

  auto i7 = C.invariants(C.representative(PlaneOrbit::S7));
  CHECK(i7.cubic_type == CubicType::IdenticallyZero);
  CHECK(i7.nucleus_meet_dim == 1);

  auto i12 = C.invariants(C.representative(PlaneOrbit::S12));
  CHECK(i12.nucleus_meet_dim == -1);
  REQUIRE(i12.inflexion_count.has_value());
  CHECK(*i12.inflexion_count == 1);  // h even

  auto i14p = C.invariants(C.representative(PlaneOrbit::S14p));
  REQUIRE(i14p.inflexion_count.has_value());
  CHECK(*i14p.inflexion_count == 3);
}

TEST_CASE("every invariant-record field is K-invariant") {
  for (unsigned h : {2u, 3u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    const Gf2e& F = T.base();
    std::mt19937_64 rng(555 * h);
    for (PlaneOrbit s : valid_plane_orbits(F.q())) {
      Plane5 rep = C.representative(s);
      PlaneInvariants a = C.invariants(rep);
      for (int it = 0; it < 10; ++it) {
        Collineation g = random_collineation(F, rng);
        PlaneInvariants b = C.invariants(apply(F, g, rep));
        CHECK(a.od == b.od);
        CHECK(a.nucleus_meet_dim == b.nucleus_meet_dim);
        CHECK(a.cubic_type == b.cubic_type);
        CHECK(a.rank_le2_collinear == b.rank_le2_collinear);
        CHECK(a.inflexion_count == b.inflexion_count);
      }
    }
  }
}

TEST_CASE("K-invariance of classification on random planes") {
  for (unsigned h : {2u, 3u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    auto res = check_equivariance(C, h == 2 ? 300 : 100, 991 * h);
    REQUIRE(res.size() == 1);
    INFO(res[0].detail);
    CHECK(res[0].pass);
  }
}

TEST_CASE("hyperplane orbits") {
  for (unsigned h : {2u, 3u}) {
    FieldTower T(h);
    PlaneClassifier C(T);
    const Gf2e& F = T.base();
    const std::uint32_t q = F.q();
    // Y5 = 0 cuts the conic Z^2 = 0: a double line
    CHECK(hyperplane_orbit(F, {0, 0, 0, 0, 0, 1}) == HyperplaneOrbit::H1);
    // Y1 = 0 cuts XY = 0: two rational lines
    CHECK(hyperplane_orbit(F, {0, 1, 0, 0, 0, 0}) == HyperplaneOrbit::H2r);
    // Sigma6 hyperplane OD is [0, q+1, 1, q^2-1]
    auto od = hyperplane_od(F, C.representative(PlaneOrbit::S6));
    CHECK(od == std::array<std::uint32_t, 4>{0, q + 1, 1, q * q - 1});
    // hyperplane orbit sizes across all of PG(5,q): H1 dual to the conics of
    // rank 1 (q^2+q+1 of them), H2r/H2i split the rank-2 duals, H3 the rest
    std::array<std::uint64_t, 4> sizes{};
    std::function<void(int, std::array<fe, 6>&, bool)> rec = [&](int i, std::array<fe, 6>& d,
                                                                 bool leading) {
      if (i == 6) {
        if (leading) ++sizes[static_cast<int>(hyperplane_orbit(F, d))];
        return;
      }
      for (std::uint32_t v = 0; v < q; ++v) {
        if (!leading && v != 0 && v != 1) continue;
        d[i] = static_cast<fe>(v);
        rec(i + 1, d, leading || v != 0);
      }
      d[i] = 0;
    };
    std::array<fe, 6> dual{};
    rec(0, dual, false);
    const std::uint64_t s = q * q + q + 1;
    CHECK(sizes[0] == s);                                  // double lines
    CHECK(sizes[1] == s * q * (q + 1) / 2);                // pairs of real lines
    CHECK(sizes[2] == s * q * (q - 1) / 2);                // conjugate pairs
    CHECK(sizes[0] + sizes[1] + sizes[2] + sizes[3] ==
          (static_cast<std::uint64_t>(q) * q * q * q * q * q - 1) / (q - 1));
    CHECK(sizes[3] == q * q * q * q * q - q * q);          // non-singular conics
  }
}

TEST_CASE("q=2 classification table is a partition with the valid label set") {
  FieldTower T(1);
  PlaneClassifier C(T);
  const Gf2e& F = T.base();
  const auto& table = C.q2_orbit_table();
  // every plane meeting the surface appears exactly once
  std::size_t meeting = 0;
  all_planes(F, [&](const Plane5& pl) {
    if (point_od(F, pl).r1 > 0) {
      ++meeting;
      CHECK(table.count(pl) == 1);
    } else {
      CHECK(table.count(pl) == 0);
    }
  });
  CHECK(table.size() == meeting);
  std::set<PlaneOrbit> labels;
  for (auto& [pl, s] : table) labels.insert(s);
  CHECK(labels.size() == 15);
}
