#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "veronese/gf2e.hpp"

using namespace vrn;

TEST_CASE("default moduli are irreducible for every supported h") {
  for (unsigned h = 1; h <= 16; ++h) {
    Gf2e F(h);
    CHECK(F.q() == (1u << h));
    CHECK(F.mul(1, 1) == 1);
  }
  CHECK_THROWS_AS(Gf2e(3, 0b1001), domain_error);   // t^3+1 = (t+1)(t^2+t+1)
  CHECK_THROWS_AS(Gf2e(4, 0b10001), domain_error);  // t^4+1 = (t+1)^4
  CHECK(Gf2e(4, 0b11111).q() == 16);                // t^4+t^3+t^2+t+1 is fine
}

TEST_CASE("field axioms, Frobenius additivity, x + x = 0") {
  for (unsigned h : {2u, 3u, 4u, 5u, 8u}) {
    Gf2e F(h);
    std::mt19937 rng(7 + h);
    for (int it = 0; it < 300; ++it) {
      fe x = static_cast<fe>(rng() % F.q());
      fe y = static_cast<fe>(rng() % F.q());
      fe z = static_cast<fe>(rng() % F.q());
      CHECK(F.add(x, x) == 0);
      CHECK(F.mul(x, F.mul(y, z)) == F.mul(F.mul(x, y), z));
      CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      CHECK(F.sq(F.add(x, y)) == F.add(F.sq(x), F.sq(y)));
      if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
      CHECK(F.sqrt(F.sq(x)) == x);
      CHECK(F.sq(F.sqrt(x)) == x);
    }
  }
}

TEST_CASE("trace values and balance") {
  Gf2e F4(2), F8(3);
  CHECK(F4.trace(0) == 0);
  CHECK(F4.trace(1) == 0);  // 1 + 1^2 = 0
  CHECK(F8.trace(1) == 1);  // 1 + 1 + 1
  for (unsigned h : {2u, 3u, 4u, 5u, 6u}) {
    Gf2e F(h);
    std::uint32_t zeros = 0;
    for (std::uint32_t x = 0; x < F.q(); ++x)
      if (F.trace(static_cast<fe>(x)) == 0) ++zeros;
    CHECK(zeros == F.q() / 2);
    // GF(2)-linearity
    std::mt19937 rng(h);
    for (int it = 0; it < 200; ++it) {
      fe x = static_cast<fe>(rng() % F.q()), y = static_cast<fe>(rng() % F.q());
      CHECK(F.trace(F.add(x, y)) == (F.trace(x) ^ F.trace(y)));
    }
  }
}

TEST_CASE("quadratic solver matches the trace trichotomy exhaustively") {
  for (unsigned h : {1u, 2u, 3u}) {  // q = 2, 4, 8
    Gf2e F(h);
    for (std::uint32_t a = 1; a < F.q(); ++a)
      for (std::uint32_t b = 0; b < F.q(); ++b)
        for (std::uint32_t c = 0; c < F.q(); ++c) {
          auto got = F.quadratic_roots(static_cast<fe>(a), static_cast<fe>(b), static_cast<fe>(c));
          auto want = oracle::quadratic_roots_sweep(F, static_cast<fe>(a), static_cast<fe>(b),
                                                    static_cast<fe>(c));
          if (b == 0) {
            REQUIRE(got.size() == 1);  // squaring bijective: always exactly one
            CHECK(want.size() == 1);
          } else {
            fe d = F.mul(F.mul(static_cast<fe>(a), static_cast<fe>(c)),
                         F.inv(F.sq(static_cast<fe>(b))));
            CHECK(got.size() == (F.trace(d) == 0 ? 2u : 0u));
          }
          std::sort(got.begin(), got.end());
          CHECK(got == want);
        }
  }
  Gf2e F4(2), F8(3);
  CHECK_THROWS_AS(F4.quadratic_roots(0, 1, 1), domain_error);
  // sqrt(omega) = omega^2 in GF(4); omega = 0b10, omega^2 = 0b11
  auto r = F4.quadratic_roots(1, 0, 2);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == 3);
  // t^2+t+1: two roots {omega, omega+1} over GF(4), none over GF(8)
  auto r4 = F4.quadratic_roots(1, 1, 1);
  REQUIRE(r4.size() == 2);
  CHECK(r4[0] == 2);
  CHECK(r4[1] == 3);
  CHECK(F8.quadratic_roots(1, 1, 1).empty());
}

TEST_CASE("admissible element counts follow floor((q-2)/6)") {
  CHECK(Gf2e(2).admissible_elements().size() == 0);   // q = 4
  CHECK(Gf2e(3).admissible_elements().size() == 1);   // q = 8
  CHECK(Gf2e(4).admissible_elements().size() == 2);   // q = 16
  CHECK(Gf2e(5).admissible_elements().size() == 5);   // q = 32
  CHECK(Gf2e(6).admissible_elements().size() == 10);  // q = 64
  Gf2e F2(1);
  CHECK_THROWS_AS(F2.is_admissible(1), unsupported_error);
  Gf2e F8(3);
  CHECK_THROWS_AS(F8.is_admissible(0), domain_error);
}

TEST_CASE("depressed cubic root counts match brute force for q in {4..64}") {
  for (unsigned h : {2u, 3u, 4u, 5u, 6u}) {
    Gf2e F(h);
    std::size_t three = 0;
    for (std::uint32_t a = 1; a < F.q(); ++a) {
      auto got = F.depressed_cubic_roots(static_cast<fe>(a));
      auto want = oracle::depressed_cubic_roots_sweep(F, static_cast<fe>(a));
      REQUIRE(static_cast<std::size_t>(got.count) == want.size());
      CHECK(got.count != 2);  // irreducible, fully split, or one root
      if (got.count == 3) {
        ++three;
        // product of the roots is a
        fe p = F.mul(got.roots[0], F.mul(got.roots[1], got.roots[2]));
        CHECK(p == a);
      }
      for (int i = 0; i < got.count && i < 3; ++i) {
        fe t = got.roots[i];
        CHECK(F.add(F.add(F.mul(t, F.sq(t)), t), static_cast<fe>(a)) == 0);
      }
    }
    CHECK(three == (F.q() - 2) / 6);
  }
  // q=4, a=omega: Tr(omega^-1) = 1 != Tr(1) = 0, one root
  Gf2e F4(2);
  CHECK(F4.depressed_cubic_roots(2).count == 1);
  // q=8: the unique admissible a gives three roots
  Gf2e F8(3);
  fe adm = F8.admissible_elements().at(0);
  CHECK(F8.depressed_cubic_roots(adm).count == 3);
}

TEST_CASE("cubic reduction round-trips against the sweep oracle") {
  // GF(8): X^3 + w X^2 + X + 1 with w = t
  Gf2e F8(3);
  {
    fe a1 = 2, a2 = 1, a3 = 1;
    auto want = oracle::cubic_roots_sweep(F8, a1, a2, a3);
    auto d = F8.reduce_cubic(a1, a2, a3);
    std::vector<fe> got;
    if (d.a == 0) {
      for (fe t : {static_cast<fe>(0), static_cast<fe>(1)})
        got.push_back(F8.add(F8.mul(d.scale, t), d.shift));
    } else {
      auto roots = F8.depressed_cubic_roots(d.a);
      for (int i = 0; i < roots.count; ++i)
        got.push_back(F8.add(F8.mul(d.scale, roots.roots[i]), d.shift));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
  // GF(4): X^3 + X^2 + w X + w, a2 != a1^2
  Gf2e F4(2);
  {
    fe a1 = 1, a2 = 2, a3 = 2;
    REQUIRE(F4.sq(a1) != a2);
    auto want = oracle::cubic_roots_sweep(F4, a1, a2, a3);
    auto d = F4.reduce_cubic(a1, a2, a3);
    std::vector<fe> got;
    auto roots = d.a == 0 ? Gf2e::CubicRoots{} : F4.depressed_cubic_roots(d.a);
    if (d.a == 0) {
      got = {d.shift, F4.add(d.scale, d.shift)};
      std::sort(got.begin(), got.end());
      got.erase(std::unique(got.begin(), got.end()), got.end());
    } else {
      for (int i = 0; i < roots.count; ++i)
        got.push_back(F4.add(F4.mul(d.scale, roots.roots[i]), d.shift));
      std::sort(got.begin(), got.end());
    }
    CHECK(got == want);
  }
  CHECK_THROWS_AS(F4.reduce_cubic(1, 1, 0), not_reducible_error);  // a2 = a1^2
  // generic reduction property on random cubics over several fields
  for (unsigned h : {2u, 3u, 4u, 5u}) {
    Gf2e F(h);
    std::mt19937 rng(99 + h);
    for (int it = 0; it < 200; ++it) {
      fe a1 = static_cast<fe>(rng() % F.q());
      fe a2 = static_cast<fe>(rng() % F.q());
      fe a3 = static_cast<fe>(rng() % F.q());
      auto want = oracle::cubic_roots_sweep(F, a1, a2, a3);
      auto got = F.cubic_roots(a1, a2, a3);
      CHECK(got == want);
      if (F.sq(a1) != a2) {
        auto d = F.reduce_cubic(a1, a2, a3);
        // every depressed root maps back to a root of the original cubic
        for (std::uint32_t th = 0; th < F.q(); ++th) {
          fe t = static_cast<fe>(th);
          bool dz = F.add(F.add(F.mul(t, F.sq(t)), t), d.a) == 0;
          fe X = F.add(F.mul(d.scale, t), d.shift);
          bool oz = std::find(want.begin(), want.end(), X) != want.end();
          CHECK(dz == oz);
        }
      }
    }
  }
}

TEST_CASE("extension embeddings are ring homomorphisms") {
  for (unsigned h : {2u, 3u, 4u}) {
    FieldTower T(h);
    const Gf2e& F = T.base();
    for (const Embedding* E : {&T.embed_quad(), &T.embed_cube()}) {
      const Gf2e& X = *E->ext;
      CHECK((*E)(0) == 0);
      CHECK((*E)(1) == 1);
      std::mt19937 rng(1234 + h);
      for (int it = 0; it < 1000; ++it) {
        fe a = static_cast<fe>(rng() % F.q());
        fe b = static_cast<fe>(rng() % F.q());
        CHECK((*E)(F.add(a, b)) == X.add((*E)(a), (*E)(b)));
        CHECK((*E)(F.mul(a, b)) == X.mul((*E)(a), (*E)(b)));
      }
      // Relative norm of an embedded element is the embedded q-th power ladder:
      // N(x) = x^(1+q+...+q^(s-1)) lands on embed(a^s) for x = embed(a).
      unsigned s = X.h() / F.h();
      for (int it = 0; it < 100; ++it) {
        fe a = static_cast<fe>(rng() % F.q());
        fe x = (*E)(a);
        std::uint64_t e = 0, p = 1;
        for (unsigned i = 0; i < s; ++i) {
          e += p;
          p *= F.q();
        }
        CHECK(X.pow(x, e) == (*E)(F.pow(a, s)));
        // relative trace x + x^q + ... stays in the embedded subfield
        fe tr = 0, y = x;
        for (unsigned i = 0; i < s; ++i) {
          tr = X.add(tr, y);
          y = X.pow(y, F.q());
        }
        bool in_subfield = false;
        for (std::uint32_t c = 0; c < F.q(); ++c)
          if ((*E)(static_cast<fe>(c)) == tr) in_subfield = true;
        CHECK(in_subfield);
      }
    }
  }
}
