#include "veronese/gf2e.hpp"

#include <algorithm>
#include <string>

namespace vrn {

namespace {

unsigned deg(std::uint64_t p) {
  unsigned d = 0;
  while (p >> (d + 1)) ++d;
  return d;
}

// Remainder of polynomial division over GF(2).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = deg(m);
  while (a >> dm) {
    a ^= m << (deg(a) - dm);
  }
  return a;
}

// Trial division by every polynomial of degree <= h/2.
bool poly_irreducible(std::uint32_t m, unsigned h) {
  if (deg(m) != h) return false;
  if ((m & 1u) == 0) return false;  // divisible by t
  for (std::uint64_t d = 2; deg(d) <= h / 2; ++d) {
    if (poly_mod(m, d) == 0) return false;
  }
  return true;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

const std::uint32_t kDefaultModuli[17] = {
    0,       0x3,    0x7,    0xB,     0x13,   0x25,    0x43,   0x83,  0x11D,
    0x211,   0x409,  0x805,  0x1053,  0x201B, 0x4443,  0x8003, 0x1100B};

}  // namespace

std::uint32_t Gf2e::default_modulus(unsigned h) {
  if (h < 1 || h > 16) throw unsupported_error("gf2e: h must be in 1..16");
  return kDefaultModuli[h];
}

Gf2e::Gf2e(unsigned h, std::uint32_t modulus) : h_(h), q_(1u << h), mod_(modulus) {
  if (h < 1 || h > 16) throw unsupported_error("gf2e: h must be in 1..16");
  if (!poly_irreducible(modulus, h))
    throw domain_error("gf2e: modulus is not irreducible of degree " + std::to_string(h));

  sq_.resize(q_);
  sqrt_.resize(q_);
  inv_.resize(q_);
  tr_.resize(q_);
  hsolve_.assign(q_, static_cast<fe>(0xFFFF));
  for (std::uint32_t x = 0; x < q_; ++x) {
    sq_[x] = static_cast<fe>(poly_mod(clmul(x, x), mod_));
  }
  for (std::uint32_t x = 0; x < q_; ++x) sqrt_[sq_[x]] = static_cast<fe>(x);
  for (std::uint32_t x = 0; x < q_; ++x) {
    fe t = 0, p = static_cast<fe>(x);
    for (unsigned i = 0; i < h_; ++i) {
      t ^= p;
      p = sq_[p];
    }
    if (t > 1) throw internal_error("gf2e: trace escaped GF(2)");
    tr_[x] = static_cast<std::uint8_t>(t);
    // y^2 + y = d table: keep the smaller solution.
    fe d = static_cast<fe>(sq_[x] ^ x);
    if (hsolve_[d] == 0xFFFF || x < hsolve_[d]) hsolve_[d] = static_cast<fe>(x);
  }

  // Find a multiplicative generator; t itself need not be primitive for an
  // arbitrary irreducible modulus.
  auto mul_raw = [&](std::uint32_t a, std::uint32_t b) {
    return static_cast<fe>(poly_mod(clmul(a, b), mod_));
  };
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t n = q_ - 1;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        prime_factors.push_back(p);
        while (n % p == 0) n /= p;
      }
    }
    if (n > 1) prime_factors.push_back(n);
  }
  auto pow_raw = [&](fe a, std::uint32_t e) {
    fe r = 1;
    while (e) {
      if (e & 1) r = mul_raw(r, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = (q_ > 2 ? 2u : 1u); g < q_; ++g) {
    bool ok = true;
    for (std::uint32_t p : prime_factors) {
      if (pow_raw(static_cast<fe>(g), (q_ - 1) / p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = static_cast<fe>(g);
      break;
    }
  }
  if (gen_ == 0) gen_ = 1;  // q = 2

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  fe acc = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = acc;
    log_[acc] = static_cast<std::uint16_t>(i);
    acc = mul_raw(acc, gen_);
  }
  if (acc != 1) throw internal_error("gf2e: generator order mismatch");
  inv_[0] = 0;
  for (std::uint32_t x = 1; x < q_; ++x)
    inv_[x] = exp_[(q_ - 1 - log_[x]) % (q_ - 1)];

  if (q_ <= 256) {
    mul_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) mul_[(a << h_) | b] = mul_raw(a, b);
  }

  if (q_ > 2) build_admissible();
}

fe Gf2e::mul_slow(fe a, fe b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

fe Gf2e::pow(fe a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) %
                                         (q_ - 1))];
}

std::vector<fe> Gf2e::quadratic_roots(fe alpha, fe beta, fe gamma) const {
  if (alpha == 0) throw domain_error("quadratic_roots: alpha = 0");
  if (beta == 0) {
    // Squaring is a bijection; single root sqrt(gamma/alpha).
    return {sqrt(div(gamma, alpha))};
  }
  fe d = mul(mul(alpha, gamma), inv(sq(beta)));  // Tr(alpha*gamma/beta^2)
  if (trace(d) != 0) return {};
  fe y = hsolve_[d];
  fe s = div(beta, alpha);
  fe r0 = mul(s, y), r1 = mul(s, static_cast<fe>(y ^ 1));
  if (r1 < r0) std::swap(r0, r1);
  return {r0, r1};
}

void Gf2e::build_admissible() {
  std::vector<fe> out;
  for (std::uint32_t v = 1; v < q_; ++v) {
    // Skip the F4-subfield: v^4 = v.
    if (sq_[sq_[v]] == v) continue;
    fe w = add(static_cast<fe>(v), inv_[v]);           // v + 1/v
    fe u = add(add(1, static_cast<fe>(v)), inv_[v]);   // 1 + v + 1/v, nonzero off F4
    fe a = div(w, mul(u, mul(u, u)));
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  admissible_ = std::move(out);
}

const std::vector<fe>& Gf2e::admissible_elements() const {
  if (q_ <= 2) throw unsupported_error("admissible_elements: q = 2 not supported");
  return admissible_;
}

bool Gf2e::is_admissible(fe a) const {
  if (q_ <= 2) throw unsupported_error("is_admissible: q = 2 not supported");
  if (a == 0) throw domain_error("is_admissible: a = 0");
  const auto& adm = admissible_elements();
  return std::binary_search(adm.begin(), adm.end(), a);
}

Gf2e::CubicRoots Gf2e::depressed_cubic_roots(fe a) const {
  if (a == 0) throw domain_error("depressed_cubic_roots: a = 0 out of contract");
  if (q_ <= 2) throw unsupported_error("depressed_cubic_roots: q = 2 not supported");
  CubicRoots r;
  for (std::uint32_t th = 0; th < q_; ++th) {
    fe t = static_cast<fe>(th);
    fe v = add(add(mul(t, sq(t)), t), a);  // theta^3 + theta + a
    if (v == 0) {
      if (r.count < 3) r.roots[r.count] = t;
      ++r.count;
    }
  }
  int expected;
  if (trace(inv(a)) != trace(1)) {
    expected = 1;
  } else {
    expected = (q_ != 4 && is_admissible(a)) ? 3 : 0;
  }
  if (r.count != expected)
    throw internal_error("depressed_cubic_roots: trichotomy mismatch");
  return r;
}

Gf2e::DepressedForm Gf2e::reduce_cubic(fe a1, fe a2, fe a3) const {
  fe disc = add(a2, sq(a1));
  if (disc == 0)
    throw not_reducible_error("reduce_cubic: a2 = a1^2; use the sweep fallback");
  fe s = sqrt(disc);
  fe s3 = mul(s, mul(s, s));  // disc^(3/2)
  DepressedForm d;
  d.scale = s;
  d.shift = a1;
  d.a = div(add(a3, mul(a1, a2)), s3);
  return d;
}

std::vector<fe> Gf2e::cubic_roots(fe a1, fe a2, fe a3) const {
  std::vector<fe> out;
  for (std::uint32_t x = 0; x < q_; ++x) {
    fe t = static_cast<fe>(x);
    fe v = add(add(add(mul(t, sq(t)), mul(a1, sq(t))), mul(a2, t)), a3);
    if (v == 0) out.push_back(t);
  }
  return out;
}

Embedding make_embedding(const Gf2e& base, const Gf2e& ext) {
  if (ext.h() % base.h() != 0)
    throw domain_error("make_embedding: extension degree not a multiple of base degree");
  Embedding e;
  e.base = &base;
  e.ext = &ext;
  // Root of the base modulus in the extension, by sweep.
  std::uint32_t m = base.modulus();
  fe root = 0;
  bool found = false;
  for (std::uint32_t x = 0; x < ext.q(); ++x) {
    fe acc = 0;
    for (int i = static_cast<int>(base.h()); i >= 0; --i) {
      acc = ext.mul(acc, static_cast<fe>(x));
      if ((m >> i) & 1) acc = ext.add(acc, 1);
    }
    if (acc == 0) {
      root = static_cast<fe>(x);
      found = true;
      break;
    }
  }
  if (!found) throw internal_error("make_embedding: no root of base modulus in extension");
  e.root = root;
  e.map.resize(base.q());
  std::vector<fe> pw(base.h());
  fe p = 1;
  for (unsigned i = 0; i < base.h(); ++i) {
    pw[i] = p;
    p = ext.mul(p, root);
  }
  for (std::uint32_t x = 0; x < base.q(); ++x) {
    fe acc = 0;
    for (unsigned i = 0; i < base.h(); ++i)
      if ((x >> i) & 1) acc = ext.add(acc, pw[i]);
    e.map[x] = acc;
  }
  return e;
}

const Gf2e& FieldTower::quad() const {
  if (!quad_) quad_ = std::make_unique<Gf2e>(2 * base_.h());
  return *quad_;
}

const Gf2e& FieldTower::cube() const {
  if (!cube_) cube_ = std::make_unique<Gf2e>(3 * base_.h());
  return *cube_;
}

const Embedding& FieldTower::embed_quad() const {
  if (!e2_) e2_ = std::make_unique<Embedding>(make_embedding(base_, quad()));
  return *e2_;
}

const Embedding& FieldTower::embed_cube() const {
  if (!e3_) e3_ = std::make_unique<Embedding>(make_embedding(base_, cube()));
  return *e3_;
}

}  // namespace vrn
