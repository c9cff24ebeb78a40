#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "veronese/veronese.hpp"

using namespace vrn;

TEST_CASE("veronese map images") {
  Gf2e F(2);
  CHECK(veronese(F, Pt3{{1, 0, 0}}) == Pt6{{1, 0, 0, 0, 0, 0}});
  CHECK(veronese(F, Pt3{{1, 1, 1}}) == Pt6{{1, 1, 1, 1, 1, 1}});
  // GF(4), (0,1,w) -> (0,0,0,1,w,w^2); w = 2, w^2 = 3
  CHECK(veronese(F, Pt3{{0, 1, 2}}) == Pt6{{0, 0, 0, 1, 2, 3}});
  // injectivity
  std::set<Pt6> img;
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) img.insert(veronese(F, pg2_point(F, i)));
  CHECK(img.size() == pg2_size(F));
}

TEST_CASE("rank and point classes") {
  Gf2e F(2);
  CHECK(sym_rank(F, as_sym(Pt6{{1, 0, 0, 0, 0, 0}})) == 1);
  CHECK(sym_rank(F, as_sym(Pt6{{0, 1, 0, 0, 0, 0}})) == 2);
  CHECK(sym_rank(F, as_sym(Pt6{{1, 0, 0, 1, 0, 1}})) == 3);
  CHECK_THROWS_AS(sym_rank(F, as_sym(Pt6{{0, 0, 0, 0, 0, 0}})), domain_error);
  CHECK(classify_point(F, Pt6{{0, 1, 0, 0, 0, 0}}) == PointClass::Rank2Nucleus);
  CHECK(classify_point(F, Pt6{{1, 0, 0, 1, 0, 0}}) == PointClass::Rank2Secant);
  CHECK(classify_point(F, Pt6{{1, 0, 0, 0, 0, 1}}) == PointClass::Rank2Secant);

  // rank agrees with the minor-based oracle everywhere at q = 4
  for (std::uint32_t v = 1; v < (1u << 12); ++v) {
    Pt6 p{{static_cast<fe>(v & 3), static_cast<fe>((v >> 2) & 3), static_cast<fe>((v >> 4) & 3),
           static_cast<fe>((v >> 6) & 3), static_cast<fe>((v >> 8) & 3),
           static_cast<fe>((v >> 10) & 3)}};
    CHECK(sym_rank(F, as_sym(p)) ==
          oracle::sym_rank_minors(F, p.c[0], p.c[1], p.c[2], p.c[3], p.c[4], p.c[5]));
  }
}

TEST_CASE("point class census over PG(5,q)") {
  for (unsigned h : {1u, 2u, 3u}) {
    Gf2e F(h);
    const std::uint64_t q = F.q();
    std::map<PointClass, std::uint64_t> counts;
    // All normalized points of PG(5,q): walk every nonzero vector and keep the
    // normalized ones (first nonzero coordinate = 1).
    std::uint64_t total = 0;
    std::function<void(int, Pt6&, bool)> rec = [&](int i, Pt6& p, bool leading) {
      if (i == 6) {
        if (!leading) return;
        ++total;
        ++counts[classify_point(F, p)];
        return;
      }
      for (std::uint32_t v = 0; v < q; ++v) {
        if (!leading && v != 0 && v != 1) continue;  // first nonzero must be 1
        p.c[i] = static_cast<fe>(v);
        rec(i + 1, p, leading || v != 0);
      }
      p.c[i] = 0;
    };
    Pt6 p{};
    rec(0, p, false);
    const std::uint64_t s = q * q + q + 1;
    CHECK(total == (q * q * q * q * q * q - 1) / (q - 1));
    CHECK(counts[PointClass::Rank1] == s);
    CHECK(counts[PointClass::Rank2Nucleus] == s);
    CHECK(counts[PointClass::Rank2Secant] == (q * q - 1) * s);
    CHECK(counts[PointClass::Rank3] == q * q * q * q * q - q * q);
  }
}

TEST_CASE("cap property: no three collinear rank-1 points") {
  for (unsigned h : {1u, 2u}) {
    Gf2e F(h);
    auto vp = veronese_points(F);
    for (std::size_t i = 0; i < vp.size(); ++i)
      for (std::size_t j = i + 1; j < vp.size(); ++j) {
        Line5 l = span_line(F, vp[i], vp[j]);
        int cnt = 0;
        for (const Pt6& p : points_of(F, l))
          if (classify_point(F, p) == PointClass::Rank1) ++cnt;
        CHECK(cnt == 2);
      }
  }
}

TEST_CASE("collineation action: identity, swap, class preservation") {
  Gf2e F(2);
  Collineation id{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  Collineation swap12{{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  Pt6 v1 = veronese(F, Pt3{{1, 0, 0}});
  Pt6 v2 = veronese(F, Pt3{{0, 1, 0}});
  CHECK(apply(F, id, v1) == v1);
  CHECK(apply(F, swap12, v1) == v2);
  CHECK(apply(F, swap12, v2) == v1);
  CHECK_THROWS_AS(apply(F, Collineation{}, v1), domain_error);

  std::mt19937_64 rng(2024);
  for (unsigned h : {2u, 3u}) {
    Gf2e Fq(h);
    for (int it = 0; it < 100; ++it) {
      Collineation g = random_collineation(Fq, rng);
      Pt6 p;
      bool nz;
      do {
        nz = false;
        for (auto& v : p.c) {
          v = static_cast<fe>(rng() % Fq.q());
          nz |= v != 0;
        }
      } while (!nz);
      CHECK(classify_point(Fq, apply(Fq, g, p)) == classify_point(Fq, p));
    }
  }
}

TEST_CASE("action is compatible with composition") {
  Gf2e F(2);
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 50; ++it) {
    Collineation g = random_collineation(F, rng), k = random_collineation(F, rng);
    Collineation gk = compose(F, g, k);
    Pt6 p;
    bool nz;
    do {
      nz = false;
      for (auto& v : p.c) {
        v = static_cast<fe>(rng() % F.q());
        nz |= v != 0;
      }
    } while (!nz);
    CHECK(apply(F, gk, p) == apply(F, g, apply(F, k, p)));
  }
}

TEST_CASE("conic of a rank-2 point") {
  Gf2e F(2);
  // R on the secant <nu(e1), nu(e2)>
  Pt6 R{{1, 0, 0, 1, 0, 0}};
  VConic c = conic_of(F, R);
  CHECK(c.preimage == Ln3{{0, 0, 1}});  // the line <e1,e2> is Z(z-coordinate)
  CHECK(c.points.size() == F.q() + 1);
  // R lies in the span of its conic
  Plane5 cp = span_plane(F, c.points[0], c.points[1], c.points[2]);
  CHECK(contains(F, cp, R));

  // Nucleus point (0,1,0,0,0,0): its conic is nu(<e1,e2>) again
  Pt6 N{{0, 1, 0, 0, 0, 0}};
  VConic cn = conic_of(F, N);
  CHECK(cn.preimage == Ln3{{0, 0, 1}});
  CHECK(nucleus_of_conic(F, cn.preimage) == N);

  CHECK_THROWS_AS(conic_of(F, Pt6{{1, 0, 0, 0, 0, 0}}), domain_error);

  // equivariance on a few random collineations
  std::mt19937_64 rng(99);
  for (int it = 0; it < 10; ++it) {
    Collineation g = random_collineation(F, rng);
    VConic c1 = conic_of(F, apply(F, g, R));
    std::set<Pt6> lhs(c1.points.begin(), c1.points.end());
    std::set<Pt6> rhs;
    for (const Pt6& p : c.points) rhs.insert(apply(F, g, p));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("nucleus of a conic and nuclei of pencils") {
  Gf2e F(2);
  // l = <e1,e2> = Z(z): nucleus computed by tangent intersection lies in N
  Pt6 n = nucleus_of_conic(F, Ln3{{0, 0, 1}});
  CHECK(classify_point(F, n) == PointClass::Rank2Nucleus);
  // every tangent of the 5 conic points passes through it: recheck membership
  VConic c = conic_of_line(F, Ln3{{0, 0, 1}});
  Plane5 cp = span_plane(F, c.points[0], c.points[1], c.points[2]);
  for (const Pt6& X : c.points) {
    Line5 t = span_line(F, X, n);
    int hits = 0;
    for (const Pt6& p : c.points)
      if (contains(F, t, p)) ++hits;
    CHECK(hits == 1);
    (void)cp;
  }

  // Nuclei of the pencil of lines through (1,0,0) fill the line Z(Y0,Y3,Y4,Y5).
  for (unsigned h : {1u, 2u, 3u}) {
    Gf2e Fq(h);
    Pt3 center{{1, 0, 0}};
    std::set<Pt6> nuclei;
    for (const Ln3& l : all_pg2_lines(Fq)) {
      if (!on_line(Fq, l, center)) continue;
      nuclei.insert(nucleus_of_conic(Fq, l));
    }
    CHECK(nuclei.size() == Fq.q() + 1);
    for (const Pt6& p : nuclei) {
      CHECK(p.c[0] == 0);
      CHECK(p.c[3] == 0);
      CHECK(p.c[4] == 0);
      CHECK(p.c[5] == 0);
    }
  }

  // Every pencil of lines yields q+1 collinear nuclei (all pencils, q in {2,4,8}).
  for (unsigned h : {1u, 2u, 3u}) {
    Gf2e Fq(h);
    for (std::uint32_t ci = 0; ci < pg2_size(Fq); ++ci) {
      Pt3 center = pg2_point(Fq, ci);
      std::vector<Pt6> nuclei;
      for (const Ln3& l : all_pg2_lines(Fq))
        if (on_line(Fq, l, center)) nuclei.push_back(nucleus_of_conic(Fq, l));
      REQUIRE(nuclei.size() == Fq.q() + 1);
      Line5 L = span_line(Fq, nuclei[0], nuclei[1]);
      for (const Pt6& p : nuclei) CHECK(contains(Fq, L, p));
    }
  }
}
