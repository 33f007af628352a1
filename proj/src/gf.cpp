#include "srk/gf.hpp"

#include <algorithm>
#include <numeric>

namespace srk::gf {
namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 20;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  b %= mod;
  while (e) {
    if (e & 1) r = (unsigned __int128)(r)*b % mod;
    b = (unsigned __int128)(b)*b % mod;
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- dense polynomial arithmetic over F_p, coefficients low-degree-first ---

using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  unsigned r = 1;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1) r = (std::uint64_t(r) * a) % p;
    a = (std::uint64_t(a) * a) % p;
  }
  return r;
}

Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  unsigned dg = unsigned(g.size()) - 1;
  unsigned lead_inv = inv_mod_p(g.back(), p);
  trim(f);
  while (f.size() >= g.size()) {
    unsigned shift = unsigned(f.size() - g.size());
    unsigned c = (std::uint64_t(f.back()) * lead_inv) % p;
    for (unsigned i = 0; i <= dg; ++i)
      f[shift + i] = (f[shift + i] + p - unsigned((std::uint64_t(c) * g[i]) % p)) % p;
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = unsigned((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, unsigned p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a), trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f (monic, degree d) is irreducible over F_p iff
// x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for each prime r | d.
bool poly_irreducible(const Poly& f, unsigned p) {
  unsigned d = unsigned(f.size()) - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  Poly x = {0, 1};
  auto frob_iter = [&](unsigned times) {
    Poly r = x;
    for (unsigned i = 0; i < times; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  for (std::uint64_t r : distinct_prime_factors(d)) {
    Poly h = frob_iter(unsigned(d / r));  // x^(p^(d/r)) mod f
    // h - x
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  Poly top = frob_iter(d);
  trim(top);
  return top == Poly{0, 1};
}

Poly default_modulus(unsigned p, unsigned d) {
  // Lexicographically smallest monic irreducible, coefficient vectors
  // compared low-degree-first (c_0 most significant in the scan order).
  std::uint64_t total = pow_u64(p, d);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t v = idx;
    for (unsigned j = 0; j < d; ++j) {
      unsigned digit = unsigned(v / pow_u64(p, d - 1 - j) % p);
      f[j] = digit;
    }
    (void)v;
    if (poly_irreducible(f, p)) return f;
  }
  throw Error("Internal", "no irreducible polynomial found");
}

}  // namespace

Field::Field(unsigned p, unsigned e, unsigned m, std::vector<unsigned> modulus)
    : p_(p), e_(e), m_(m), em_(e * m) {
  if (!is_prime(p)) throw Error("NotPrime", "p = " + std::to_string(p));
  if (e < 1 || m < 1) throw Error("BadParameter", "e and m must be >= 1");
  q_ = pow_u64(p, e);
  // overflow-safe cap check
  std::uint64_t s = 1;
  for (unsigned i = 0; i < em_; ++i) {
    s *= p;
    if (s > kMaxFieldSize)
      throw Error("FieldTooLarge", "q^m exceeds 2^20");
  }
  size_ = s;

  if (modulus.empty()) {
    modulus_ = default_modulus(p, em_);
  } else {
    if (modulus.size() != em_ + 1 || modulus.back() != 1)
      throw Error("ReducibleModulus", "modulus must be monic of degree e*m");
    for (unsigned c : modulus)
      if (c >= p) throw Error("BadParameter", "modulus coefficient out of range");
    if (!poly_irreducible(modulus, p))
      throw Error("ReducibleModulus", "modulus is not irreducible over F_p");
    modulus_ = std::move(modulus);
  }

  // Residue class of the variable: x itself when deg > 1, else -c_0.
  z_ = em_ > 1 ? Fel(p_) : Fel((p_ - modulus_[0]) % p_);

  build_tables();
  build_fq_basis();
}

std::vector<unsigned> Field::coeffs(Fel x) const {
  std::vector<unsigned> c(em_);
  for (unsigned i = 0; i < em_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

Fel Field::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() != em_) throw Error("BadParameter", "coefficient vector length");
  Fel v = 0;
  for (unsigned i = em_; i-- > 0;) {
    if (c[i] >= p_) throw Error("BadParameter", "coefficient out of range");
    v = v * p_ + c[i];
  }
  return v;
}

Fel Field::add(Fel a, Fel b) const {
  if (p_ == 2) return a ^ b;
  Fel r = 0, mult = 1;
  while (a || b) {
    unsigned d = (a % p_ + b % p_) % p_;
    r += d * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Fel Field::neg(Fel a) const {
  if (p_ == 2) return a;
  Fel r = 0, mult = 1;
  while (a) {
    unsigned d = a % p_;
    r += (d ? p_ - d : 0) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw Error("DivisionByZero", "inverse of zero");
  return expt_[mod_ord(size_ - 1 - logt_[a])];
}

Fel Field::pow(Fel a, std::uint64_t n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  return expt_[(unsigned __int128)(logt_[a]) * n % (size_ - 1)];
}

std::uint64_t Field::log(Fel a) const {
  if (a == 0) throw Error("DivisionByZero", "log of zero");
  return std::uint64_t(logt_[a]);
}

Fel Field::frobenius(Fel x, unsigned s) const {
  if (x == 0) return 0;
  std::uint64_t exp = pow_mod_u64(q_, s, size_ - 1);
  return pow(x, exp);
}

Fel Field::norm(Fel x) const {
  if (x == 0) return 0;
  return pow(x, (size_ - 1) / (q_ - 1));
}

Fel Field::trace(Fel x) const {
  Fel t = 0;
  for (unsigned i = 0; i < m_; ++i) t = add(t, frobenius(x, i));
  return t;
}

bool Field::elem_less(Fel a, Fel b) const {
  while (a || b) {
    unsigned da = a % p_, db = b % p_;
    if (da != db) return da < db;
    a /= p_;
    b /= p_;
  }
  return false;
}

void Field::build_tables() {
  // Polynomial-basis multiplication used only to bootstrap the tables.
  auto raw_mul = [&](Fel a, Fel b) -> Fel {
    Poly pa = coeffs(a), pb = coeffs(b);
    trim(pa), trim(pb);
    Poly r = poly_mulmod(pa, pb, modulus_, p_);
    r.resize(em_, 0);
    return from_coeffs(r);
  };
  auto raw_pow = [&](Fel a, std::uint64_t n) {
    Fel r = 1;
    while (n) {
      if (n & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      n >>= 1;
    }
    return r;
  };

  ordered_.resize(size_);
  std::iota(ordered_.begin(), ordered_.end(), 0);
  std::sort(ordered_.begin(), ordered_.end(),
            [this](Fel a, Fel b) { return elem_less(a, b); });

  const std::uint64_t g_ord = size_ - 1;
  auto factors = distinct_prime_factors(g_ord);
  primitive_ = 0;
  for (Fel cand : ordered_) {
    if (cand == 0) continue;
    bool ok = true;
    for (std::uint64_t r : factors)
      if (raw_pow(cand, g_ord / r) == 1) {
        ok = false;
        break;
      }
    if (ok || g_ord == 1) {
      primitive_ = cand;
      break;
    }
  }

  expt_.resize(g_ord);
  logt_.assign(size_, -1);
  Fel cur = 1;
  for (std::uint64_t i = 0; i < g_ord; ++i) {
    expt_[i] = cur;
    logt_[cur] = std::int32_t(i);
    cur = raw_mul(cur, primitive_);
  }

  subfield_.clear();
  subfield_.push_back(0);
  Fel h = (q_ == size_) ? primitive_ : expt_[((size_ - 1) / (q_ - 1)) % (size_ - 1)];
  Fel x = 1;
  for (std::uint64_t j = 0; j + 1 < q_; ++j) {
    subfield_.push_back(x);
    x = mul(x, h);
  }
}

void Field::build_fq_basis() {
  // F_p-basis of F_q: powers of the subfield generator (just {1} when e=1).
  zeta_pows_.assign(e_, 1);
  if (e_ > 1) {
    Fel zeta = subfield_[2];  // subfield_ = {0, 1, h, h^2, ...}
    for (unsigned l = 1; l < e_; ++l) zeta_pows_[l] = mul(zeta_pows_[l - 1], zeta);
  }

  // Columns of B: F_p coordinates of z^j * zeta^l.
  unsigned n = em_;
  std::vector<unsigned> B(n * n);
  Fel zj = 1;
  Fel zv = z();
  for (unsigned j = 0; j < m_; ++j) {
    for (unsigned l = 0; l < e_; ++l) {
      auto col = coeffs(mul(zj, zeta_pows_[l]));
      for (unsigned r = 0; r < n; ++r) B[r * n + j * e_ + l] = col[r];
    }
    zj = mul(zj, zv);
  }

  // Gauss-Jordan inverse over F_p.
  std::vector<unsigned> inv(n * n, 0);
  for (unsigned i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && B[piv * n + col] == 0) ++piv;
    if (piv == n) throw Error("Internal", "basis matrix singular");
    if (piv != col)
      for (unsigned j = 0; j < n; ++j) {
        std::swap(B[piv * n + j], B[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    unsigned pinv = inv_mod_p(B[col * n + col], p_);
    for (unsigned j = 0; j < n; ++j) {
      B[col * n + j] = unsigned(std::uint64_t(B[col * n + j]) * pinv % p_);
      inv[col * n + j] = unsigned(std::uint64_t(inv[col * n + j]) * pinv % p_);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || B[r * n + col] == 0) continue;
      unsigned f = B[r * n + col];
      for (unsigned j = 0; j < n; ++j) {
        B[r * n + j] =
            unsigned((B[r * n + j] + std::uint64_t(p_ - f) * B[col * n + j]) % p_);
        inv[r * n + j] =
            unsigned((inv[r * n + j] + std::uint64_t(p_ - f) * inv[col * n + j]) % p_);
      }
    }
  }
  basis_inv_ = std::move(inv);
}

std::vector<Fel> Field::fq_coords(Fel x) const {
  auto d = coeffs(x);
  unsigned n = em_;
  std::vector<Fel> out(m_, 0);
  for (unsigned j = 0; j < m_; ++j) {
    Fel cj = 0;
    for (unsigned l = 0; l < e_; ++l) {
      std::uint64_t u = 0;
      unsigned row = j * e_ + l;
      for (unsigned c = 0; c < n; ++c) u += std::uint64_t(basis_inv_[row * n + c]) * d[c];
      u %= p_;
      if (u) cj = add(cj, mul(Fel(u), zeta_pows_[l]));
    }
    out[j] = cj;
  }
  return out;
}

Fel Field::from_fq_coords(const std::vector<Fel>& u) const {
  if (u.size() != m_) throw Error("BadParameter", "coordinate vector length");
  Fel x = 0, zj = 1;
  Fel zv = z();
  for (unsigned j = 0; j < m_; ++j) {
    x = add(x, mul(u[j], zj));
    zj = mul(zj, zv);
  }
  return x;
}

FieldPtr make_field(unsigned p, unsigned e, unsigned m, std::vector<unsigned> modulus) {
  return std::make_shared<Field>(p, e, m, std::move(modulus));
}

}  // namespace srk::gf
