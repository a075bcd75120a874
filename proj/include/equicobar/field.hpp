#pragma once

// Exact scalars: arbitrary-precision rationals and finite fields F_{p^k},
// p^k <= 2^16, with a fixed deterministic table of defining polynomials.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "equicobar/util.hpp"

namespace eqc {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw FieldError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inv() const {
    if (is_zero()) throw FieldError("inversion of zero");
    return Rational(mpq_class(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  const mpq_class& value() const { return v_; }

  std::string str() const { return v_.get_str(); }

  struct Ctx {
    using Elem = Rational;
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    bool same(const Ctx&) const { return true; }
    std::string name() const { return "Q"; }
    long order() const { return 0; }  // 0 = infinite
    long characteristic() const { return 0; }
    Rational parse(const std::string& s) const {
      try {
        mpq_class q(s);
        q.canonicalize();
        return Rational(q);
      } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: " + s);
      }
    }
  };
  Ctx ctx() const { return Ctx{}; }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

// Mod-p polynomial helpers on little-endian coefficient vectors (internal).
namespace fpdetail {

inline void trim(std::vector<uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<uint32_t> mul_mod_f(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b,
                                       const std::vector<uint32_t>& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j] % p;
  std::vector<uint32_t> c(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) c[i] = uint32_t(acc[i] % p);
  // reduce modulo monic f
  size_t k = f.size() - 1;
  for (size_t i = c.size(); i-- > k;) {
    uint32_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < k; ++j) {
      uint64_t sub = uint64_t(t) * f[j] % p;
      c[i - k + j] = uint32_t((c[i - k + j] + p - sub) % p);
    }
  }
  c.resize(k);
  return c;
}

inline std::vector<uint32_t> pow_mod_f(std::vector<uint32_t> base, uint64_t e,
                                       const std::vector<uint32_t>& f, uint32_t p) {
  std::vector<uint32_t> r{1};
  r.resize(f.size() - 1, 0);
  base.resize(f.size() - 1, 0);
  while (e) {
    if (e & 1) r = mul_mod_f(r, base, f, p);
    base = mul_mod_f(base, base, f, p);
    e >>= 1;
  }
  return r;
}

// gcd of polynomials over F_p (not reduced mod anything)
inline std::vector<uint32_t> poly_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b,
                                      uint32_t p) {
  auto inv_mod_p = [&](uint32_t x) {
    uint32_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = uint32_t(uint64_t(r) * base % p);
      base = uint32_t(uint64_t(base) * base % p);
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
      uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
      if (c != 0) {
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
          uint64_t sub = uint64_t(c) * b[i] % p;
          a[off + i] = uint32_t((a[off + i] + p - sub) % p);
        }
      }
      trim(a);
      if (a.empty()) break;
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    trim(b);
  }
  return a;
}

inline bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  size_t k = f.size() - 1;
  if (k == 1) return true;
  // x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k
  auto xpow = [&](uint64_t e) {
    std::vector<uint32_t> x{0, 1};
    std::vector<uint32_t> r = x;
    for (uint64_t i = 0; i < e; ++i) r = pow_mod_f(r, p, f, p);
    return r;
  };
  std::vector<uint32_t> top = xpow(k);
  std::vector<uint32_t> x{0, 1};
  x.resize(k, 0);
  if (top != x) return false;
  for (size_t l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool prime = true;
    for (size_t d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    std::vector<uint32_t> g = xpow(k / l);
    // g - x
    std::vector<uint32_t> diff = g;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    auto d = poly_gcd(f, diff, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace fpdetail

// Immutable description of F_{p^k}; shared by all its elements.
struct FqSpec {
  uint32_t p;
  uint32_t k;
  uint32_t q;                      // p^k
  std::vector<uint32_t> modulus;   // monic, degree k, little-endian

  static std::shared_ptr<const FqSpec> get(uint32_t p, uint32_t k);

  bool operator==(const FqSpec& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }
  std::string name() const {
    return "F" + std::to_string(q);
  }
};

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// The table entry for (p, k): the least monic irreducible of degree k over
// F_p, coefficients enumerated as base-p digits. Computed once and cached.
inline std::shared_ptr<const FqSpec> FqSpec::get(uint32_t p, uint32_t k) {
  if (!is_prime_u32(p)) throw FieldError("characteristic must be prime");
  if (k < 1) throw FieldError("extension degree must be >= 1");
  double sz = 1;
  for (uint32_t i = 0; i < k; ++i) sz *= p;
  if (sz > 65536.0) throw FieldError("field order exceeds 2^16");
  static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const FqSpec>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;

  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) q *= p;
  std::vector<uint32_t> f;
  for (uint64_t m = 0;; ++m) {
    if (m >= q) throw FieldError("no irreducible polynomial found");  // unreachable
    f.assign(k + 1, 0);
    uint64_t t = m;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = uint32_t(t % p);
      t /= p;
    }
    f[k] = 1;
    if (fpdetail::is_irreducible(f, p)) break;
  }
  auto spec = std::make_shared<FqSpec>(FqSpec{p, k, uint32_t(q), f});
  cache[{p, k}] = spec;
  return spec;
}

class GF {
 public:
  GF() = default;  // invalid until given a spec
  GF(std::shared_ptr<const FqSpec> s, std::vector<uint32_t> c) : s_(std::move(s)), c_(std::move(c)) {
    c_.resize(s_->k, 0);
    for (auto& x : c_) x %= s_->p;
  }

  bool valid() const { return s_ != nullptr; }
  const FqSpec& spec() const { return *s_; }
  const std::shared_ptr<const FqSpec>& spec_ptr() const { return s_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  GF operator+(const GF& o) const {
    check(o);
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % s_->p;
    return GF(s_, std::move(r));
  }
  GF operator-(const GF& o) const {
    check(o);
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + s_->p - o.c_[i]) % s_->p;
    return GF(s_, std::move(r));
  }
  GF operator-() const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (s_->p - c_[i]) % s_->p;
    return GF(s_, std::move(r));
  }
  GF operator*(const GF& o) const {
    check(o);
    return GF(s_, fpdetail::mul_mod_f(c_, o.c_, s_->modulus, s_->p));
  }
  GF pow(uint64_t e) const {
    return GF(s_, fpdetail::pow_mod_f(c_, e, s_->modulus, s_->p));
  }
  GF inv() const {
    if (is_zero()) throw FieldError("inversion of zero");
    return pow(s_->q - 2);
  }

  bool operator==(const GF& o) const { return *s_ == *o.s_ && c_ == o.c_; }
  bool operator!=(const GF& o) const { return !(*this == o); }
  bool operator<(const GF& o) const { return to_int() < o.to_int(); }

  // canonical integer encoding: sum c_i p^i
  uint64_t to_int() const {
    uint64_t v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * s_->p + c_[i];
    return v;
  }

  std::string str() const {
    if (s_->k == 1) return std::to_string(c_[0]);
    std::vector<std::string> terms;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      std::string t;
      if (i == 0) {
        t = std::to_string(c_[i]);
      } else {
        if (c_[i] != 1) t = std::to_string(c_[i]) + "*";
        t += "t";
        if (i > 1) t += "^" + std::to_string(i);
      }
      terms.push_back(t);
    }
    if (terms.empty()) return "0";
    return join(terms, "+");
  }

  const std::vector<uint32_t>& coeffs() const { return c_; }

  struct Ctx {
    using Elem = GF;
    std::shared_ptr<const FqSpec> s;
    Ctx() = default;
    explicit Ctx(std::shared_ptr<const FqSpec> sp) : s(std::move(sp)) {}
    Ctx(uint32_t p, uint32_t k) : s(FqSpec::get(p, k)) {}
    GF zero() const { return GF(s, {}); }
    GF one() const { return GF(s, {1}); }
    GF gen() const {
      if (s->k == 1) throw FieldError("prime field has no extension generator");
      return GF(s, {0, 1});
    }
    GF from_int(long n) const {
      long m = n % long(s->p);
      if (m < 0) m += s->p;
      return GF(s, {uint32_t(m)});
    }
    // decode the canonical integer encoding
    GF from_code(uint64_t v) const {
      std::vector<uint32_t> c(s->k);
      for (uint32_t i = 0; i < s->k; ++i) {
        c[i] = uint32_t(v % s->p);
        v /= s->p;
      }
      if (v != 0) throw InputError("field element code out of range");
      return GF(s, std::move(c));
    }
    bool same(const Ctx& o) const { return *s == *o.s; }
    std::string name() const { return s->name(); }
    long order() const { return long(s->q); }
    long characteristic() const { return long(s->p); }
    GF parse(const std::string& str) const {
      size_t pos = 0;
      unsigned long long v = std::stoull(str, &pos);
      if (pos != str.size()) throw InputError("bad field element literal: " + str);
      return from_code(v);
    }
  };
  Ctx ctx() const { return Ctx(s_); }

 private:
  void check(const GF& o) const {
    if (!(*s_ == *o.s_)) throw FieldError("mixed field specs");
  }
  std::shared_ptr<const FqSpec> s_;
  std::vector<uint32_t> c_;
};

inline std::ostream& operator<<(std::ostream& os, const GF& x) { return os << x.str(); }

// a |-> a^q, the generator of Gal(F_{p^k} / F_q).
inline GF frobenius(const GF& a, uint64_t q) {
  const FqSpec& s = a.spec();
  uint64_t t = q;
  uint32_t j = 0;
  while (t > 1) {
    if (t % s.p != 0) throw FieldError("q must be a power of the characteristic");
    t /= s.p;
    ++j;
  }
  if (q == 1 || j == 0) throw FieldError("q must be a proper power of p, q >= p");
  if (s.k % j != 0) throw FieldError("F_q is not a subfield of F_{p^k}");
  return a.pow(q);
}

template <class F>
concept FieldScalar = requires(const F a, const F b) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a* b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inv() } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  typename F::Ctx;
};

}  // namespace eqc
