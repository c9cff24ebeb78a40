#ifndef VERONESE_GF2E_HPP
#define VERONESE_GF2E_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace vrn {

// Field element of GF(2^h), h <= 16, as coefficient bits of the polynomial basis.
using fe = std::uint16_t;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : error {
  using error::error;
};
struct unsupported_error : error {
  using error::error;
};
struct not_reducible_error : error {
  using error::error;
};
struct dependence_error : error {
  int rank;
  dependence_error(const std::string& msg, int r) : error(msg), rank(r) {}
};
struct out_of_scope_error : error {
  using error::error;
};
struct invalid_label_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};
struct internal_error : error {
  using error::error;
};
struct check_failure : error {
  using error::error;
};

/// Arithmetic over GF(2^h) with a declared irreducible modulus.
/// Element 0 is the zero symbol, element 1 the unit. All tables are built at
/// construction; instances are immutable and safe to share between threads.
class Gf2e {
 public:
  // modulus: bit i = coefficient of t^i, degree exactly h, verified irreducible.
  Gf2e(unsigned h, std::uint32_t modulus);
  explicit Gf2e(unsigned h) : Gf2e(h, default_modulus(h)) {}

  static std::uint32_t default_modulus(unsigned h);

  unsigned h() const { return h_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t modulus() const { return mod_; }

  fe add(fe a, fe b) const { return static_cast<fe>(a ^ b); }
  fe mul(fe a, fe b) const {
    if (mul_.empty()) return mul_slow(a, b);
    return mul_[(static_cast<std::uint32_t>(a) << h_) | b];
  }
  fe sq(fe a) const { return sq_[a]; }
  fe sqrt(fe a) const { return sqrt_[a]; }  // x^(q/2); inverse of squaring
  fe inv(fe a) const {
    if (a == 0) throw domain_error("gf2e: inverse of zero");
    return inv_[a];
  }
  fe div(fe a, fe b) const { return mul(a, inv(b)); }
  fe pow(fe a, std::uint64_t e) const;
  fe neg(fe a) const { return a; }

  int trace(fe a) const { return tr_[a]; }  // absolute trace to GF(2)

  fe generator() const { return gen_; }

  // Roots of alpha X^2 + beta X + gamma, alpha != 0 (0, 1 or 2 of them).
  std::vector<fe> quadratic_roots(fe alpha, fe beta, fe gamma) const;

  // a = (v + 1/v) / (1 + v + 1/v)^3 for some v outside the F4-subfield?
  bool is_admissible(fe a) const;
  const std::vector<fe>& admissible_elements() const;

  struct CubicRoots {
    int count = 0;  // 0, 1 or 3
    std::array<fe, 3> roots{};
  };
  // Roots of theta^3 + theta + a, a != 0, q > 2. Root count matches the
  // trace/admissibility trichotomy (checked internally).
  CubicRoots depressed_cubic_roots(fe a) const;

  struct DepressedForm {
    fe a;      // constant of theta^3 + theta + a
    fe scale;  // X = scale * theta + shift
    fe shift;
  };
  // Depress X^3 + a1 X^2 + a2 X + a3; requires a2 != a1^2.
  DepressedForm reduce_cubic(fe a1, fe a2, fe a3) const;

  // All roots of X^3 + a1 X^2 + a2 X + a3 (any parameters; sweep fallback).
  std::vector<fe> cubic_roots(fe a1, fe a2, fe a3) const;

 private:
  fe mul_slow(fe a, fe b) const;
  void build_admissible();

  unsigned h_;
  std::uint32_t q_;
  std::uint32_t mod_;
  fe gen_ = 0;
  std::vector<fe> mul_;  // direct q*q table, only for q <= 256
  std::vector<fe> exp_;  // exp_[i] = gen^i, i < q-1
  std::vector<std::uint16_t> log_;
  std::vector<fe> inv_, sq_, sqrt_, hsolve_;  // hsolve_: one y with y^2+y = d
  std::vector<std::uint8_t> tr_;
  std::vector<fe> admissible_;  // sorted, empty for q = 2
};

/// Ring embedding GF(q) -> GF(q^s) fixing GF(2), built by locating a root of
/// the base modulus in the extension.
struct Embedding {
  const Gf2e* base = nullptr;
  const Gf2e* ext = nullptr;
  fe root = 0;            // image of t under the embedding
  std::vector<fe> map;    // map[x] for every base element

  fe operator()(fe x) const { return map[x]; }
};

Embedding make_embedding(const Gf2e& base, const Gf2e& ext);

/// A base field plus lazily built quadratic/cubic extensions and embeddings.
class FieldTower {
 public:
  explicit FieldTower(unsigned h, std::uint32_t modulus = 0)
      : base_(h, modulus ? modulus : Gf2e::default_modulus(h)) {}

  const Gf2e& base() const { return base_; }
  const Gf2e& quad() const;   // GF(q^2)
  const Gf2e& cube() const;   // GF(q^3)
  const Embedding& embed_quad() const;
  const Embedding& embed_cube() const;

 private:
  Gf2e base_;
  mutable std::unique_ptr<Gf2e> quad_, cube_;
  mutable std::unique_ptr<Embedding> e2_, e3_;
};

}  // namespace vrn

#endif
