#pragma once

// Univariate polynomials over an exact field, gcd, and factorization:
// complete over finite fields (squarefree + distinct-degree +
// Cantor-Zassenhaus splitting), bounded over Q (rational roots, quadratics,
// cubics by root exclusion, quartics via the resolvent cubic). Unsupported
// rational cases come back flagged incomplete, never wrong.

#include <optional>
#include <vector>

#include "equicobar/linalg.hpp"

namespace eqc {

template <FieldScalar F>
class Poly {
 public:
  using Ctx = typename F::Ctx;

  explicit Poly(Ctx ctx) : ctx_(ctx) {}
  Poly(Ctx ctx, std::vector<F> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }

  static Poly x(Ctx ctx) { return Poly(ctx, {ctx.zero(), ctx.one()}); }
  static Poly constant(Ctx ctx, const F& v) { return Poly(ctx, {v}); }

  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const Ctx& ctx() const { return ctx_; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return i <= degree() && i >= 0 ? c_[i] : ctx_.zero(); }
  F lead() const { return c_.empty() ? ctx_.zero() : c_.back(); }

  Poly operator+(const Poly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), ctx_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(ctx_, std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + o.scaled(-ctx_.one()); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, ctx_.zero());
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(ctx_, std::move(r));
  }
  Poly scaled(const F& s) const {
    std::vector<F> r = c_;
    for (auto& v : r) v = v * s;
    return Poly(ctx_, std::move(r));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
  }

  // returns (quotient, remainder)
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    Poly q(ctx_), r = *this;
    std::vector<F> qc(std::max<int>(0, degree() - d.degree() + 1), ctx_.zero());
    F dinv = d.lead().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      F c = r.lead() * dinv;
      qc[k] = qc[k] + c;
      std::vector<F> sub(k + d.c_.size(), ctx_.zero());
      for (size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = d.c_[i] * c;
      r = r - Poly(ctx_, std::move(sub));
    }
    return {Poly(ctx_, std::move(qc)), r};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(ctx_);
    std::vector<F> r(c_.size() - 1, ctx_.zero());
    for (size_t i = 1; i < c_.size(); ++i) {
      F k = ctx_.from_int(long(i));
      r[i - 1] = c_[i] * k;
    }
    return Poly(ctx_, std::move(r));
  }

  F eval(const F& v) const {
    F acc = ctx_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::vector<std::string> terms;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string t;
      if (i == 0 || !c_[i].is_one()) t = "(" + to_str(c_[i]) + ")";
      if (i >= 1) {
        if (!t.empty()) t += "*";
        t += var;
        if (i > 1) t += "^" + std::to_string(i);
      }
      terms.push_back(t);
    }
    return join(terms, " + ");
  }

 private:
  static std::string to_str(const F& v) { return v.str(); }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Ctx ctx_;
  std::vector<F> c_;
};

template <FieldScalar F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

template <FieldScalar F>
Poly<F> poly_pow_mod(Poly<F> base, mpz_class e, const Poly<F>& mod) {
  Poly<F> r = Poly<F>::constant(base.ctx(), base.ctx().one());
  base = base % mod;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

template <FieldScalar F>
struct FactorResult {
  F unit;                                           // scalar: f = unit * prod(factors^mult) * remainder
  std::vector<std::pair<Poly<F>, int>> irreducible;  // monic irreducible, multiplicity
  std::optional<Poly<F>> remainder;                  // unfactored monic part, when incomplete
  bool complete = true;
};

// ---------------------------------------------------------------------------
// finite-field factorization
// ---------------------------------------------------------------------------

namespace polydetail {

inline Poly<GF> random_poly(const GF::Ctx& ctx, int max_deg, Rng& rng) {
  std::vector<GF> c;
  int d = 1 + int(rng.below(uint64_t(std::max(1, max_deg))));
  for (int i = 0; i <= d; ++i) c.push_back(ctx.from_code(rng.below(ctx.s->q)));
  return Poly<GF>(ctx, std::move(c));
}

// p-th root of a polynomial in x^p (coefficientwise inverse Frobenius)
inline Poly<GF> pth_root(const Poly<GF>& f) {
  auto ctx = f.ctx();
  uint32_t p = ctx.s->p, k = ctx.s->k;
  uint64_t e = 1;  // p^(k-1): inverse of Frobenius x -> x^p
  for (uint32_t i = 0; i + 1 < k; ++i) e *= p;
  std::vector<GF> out;
  for (int i = 0; i * int(p) <= f.degree(); ++i) {
    GF c = f.coeff(i * int(p));
    out.push_back(k == 1 ? c : c.pow(e));
  }
  return Poly<GF>(ctx, std::move(out));
}

// split a squarefree product of degree-d irreducibles
inline void equal_degree_split(const Poly<GF>& f, int d, std::vector<Poly<GF>>& out, Rng& rng) {
  auto ctx = f.ctx();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  uint64_t q = ctx.s->q;
  Poly<GF> g(ctx);
  while (true) {
    Poly<GF> h = random_poly(ctx, f.degree() - 1, rng);
    if (h.is_zero()) continue;
    Poly<GF> g0 = poly_gcd(h, f);
    if (g0.degree() > 0) {
      if (g0.degree() < f.degree()) {
        g = g0;
        break;
      }
      continue;
    }
    if (q % 2 == 1) {
      mpz_class e = 1;
      for (int i = 0; i < d; ++i) e *= q;
      e = (e - 1) / 2;
      Poly<GF> w = poly_pow_mod(h, e, f) - Poly<GF>::constant(ctx, ctx.one());
      g = poly_gcd(w, f);
    } else {
      // trace map over F_2 subfield: sum h^(2^i), i < m*d where q = 2^m
      uint32_t m = ctx.s->k;  // q = 2^k here (p = 2)
      Poly<GF> t(ctx), cur = h % f;
      for (uint32_t i = 0; i < m * uint32_t(d); ++i) {
        t = t + cur;
        cur = (cur * cur) % f;
      }
      g = poly_gcd(t, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree_split(g, d, out, rng);
  equal_degree_split((f / g).monic(), d, out, rng);
}

}  // namespace polydetail

inline FactorResult<GF> poly_factor(const Poly<GF>& input) {
  auto ctx = input.ctx();
  FactorResult<GF> res;
  res.unit = input.is_zero() ? ctx.one() : input.lead();
  if (input.degree() <= 0) return res;
  Rng rng(0xec0bau);  // fixed seed: deterministic output

  // collect (squarefree poly, multiplicity) pairs
  std::vector<std::pair<Poly<GF>, int>> sq;
  std::vector<std::pair<Poly<GF>, int>> work{{input.monic(), 1}};
  while (!work.empty()) {
    auto [f, mult] = work.back();
    work.pop_back();
    if (f.degree() <= 0) continue;
    Poly<GF> fp = f.derivative();
    if (fp.is_zero()) {
      // f = g(x^p)
      work.emplace_back(polydetail::pth_root(f), mult * int(ctx.s->p));
      continue;
    }
    Poly<GF> c = poly_gcd(f, fp);
    Poly<GF> w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
      Poly<GF> y = poly_gcd(w, c);
      Poly<GF> z = (w / y).monic();
      if (z.degree() > 0) sq.emplace_back(z, mult * i);
      w = y;
      c = (c / y).monic();
      ++i;
    }
    if (c.degree() > 0) work.emplace_back(c, mult);
  }

  // distinct-degree then equal-degree on each squarefree part
  for (auto& [f0, mult] : sq) {
    Poly<GF> f = f0;
    Poly<GF> h = Poly<GF>::x(ctx) % f;
    int d = 0;
    while (f.degree() > 0) {
      ++d;
      if (2 * d > f.degree()) {
        res.irreducible.emplace_back(f.monic(), mult);
        break;
      }
      h = poly_pow_mod(h, mpz_class(long(ctx.s->q)), f);
      Poly<GF> g = poly_gcd(h - Poly<GF>::x(ctx), f);
      if (g.degree() > 0) {
        std::vector<Poly<GF>> parts;
        polydetail::equal_degree_split(g, d, parts, rng);
        for (auto& p : parts) res.irreducible.emplace_back(p, mult);
        f = (f / g).monic();
        h = h % f;
      }
    }
  }
  std::sort(res.irreducible.begin(), res.irreducible.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
      auto x = a.first.coeff(i).to_int(), y = b.first.coeff(i).to_int();
      if (x != y) return x < y;
    }
    return a.second < b.second;
  });
  return res;
}

// ---------------------------------------------------------------------------
// rational factorization (bounded)
// ---------------------------------------------------------------------------

namespace polydetail {

// all positive divisors, or nullopt if n has a prime factor > bound
inline std::optional<std::vector<mpz_class>> divisors(mpz_class n, long bound = 1000000) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class d = 2; d * d <= n && d <= bound; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (n > 1) {
    if (n > bound) return std::nullopt;
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    size_t sz = divs.size();
    mpz_class pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < Rational(0)) return std::nullopt;
  mpz_class num = r.value().get_num(), den = r.value().get_den();
  mpz_class sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(mpq_class(sn) / mpq_class(sd));
}

// complete list of rational roots with multiplicity; nullopt when the
// divisor search is out of reach
inline std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const Poly<Rational>& f) {
  if (f.degree() <= 0) return std::vector<std::pair<Rational, int>>{};
  // integer model: multiply by lcm of denominators
  mpz_class den_lcm = 1;
  for (auto& c : f.coeffs()) den_lcm = den_lcm / gcd(den_lcm, c.value().get_den()) * c.value().get_den();
  std::vector<mpz_class> ic;
  for (auto& c : f.coeffs()) {
    mpq_class v = c.value() * den_lcm;
    ic.push_back(v.get_num());
  }
  int lo = 0;
  while (lo < int(ic.size()) && ic[lo] == 0) ++lo;  // factor out x^lo
  std::vector<std::pair<Rational, int>> roots;
  if (lo > 0) roots.emplace_back(Rational(0), lo);
  if (lo == int(ic.size()) - 1) return roots;  // monomial
  auto d0 = divisors(ic[lo]);
  auto dn = divisors(ic.back());
  if (!d0 || !dn) return std::nullopt;
  Poly<Rational> g = f;
  for (auto& p : *d0)
    for (auto& q : *dn) {
      for (int sgn : {1, -1}) {
        Rational cand(mpq_class(sgn) * mpq_class(p) / mpq_class(q));
        int mult = 0;
        while (g.degree() > 0 && g.eval(cand).is_zero()) {
          Poly<Rational> lin(f.ctx(), {-cand, f.ctx().one()});
          g = g / lin;
          ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
      }
    }
  return roots;
}

// factor a monic quartic with no rational roots into two monic quadratics,
// if possible over Q; nullopt(first) means inconclusive
inline std::pair<bool, std::optional<std::pair<Poly<Rational>, Poly<Rational>>>> quartic_split(
    const Poly<Rational>& f) {
  auto ctx = f.ctx();
  Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  Rational quarter(1, 4);
  Rational shift = a * quarter;  // x = y - a/4
  // depressed coefficients
  Rational p = b - a * a * Rational(3, 8);
  Rational q = c - a * b * Rational(1, 2) + a * a * a * Rational(1, 8);
  Rational r = d - a * c * quarter + a * a * b * Rational(1, 16) - a * a * a * a * Rational(3, 256);
  // resolvent: z^3 + 2p z^2 + (p^2-4r) z - q^2
  Poly<Rational> res(ctx, {-(q * q), p * p - Rational(4) * r, Rational(2) * p, ctx.one()});
  auto zr = rational_roots(res);
  if (!zr) return {false, std::nullopt};  // inconclusive
  auto lift = [&](const Poly<Rational>& g) {
    // substitute y = x + a/4
    Poly<Rational> x_shift(ctx, {shift, ctx.one()});
    Poly<Rational> out = Poly<Rational>::constant(ctx, ctx.zero());
    for (int i = g.degree(); i >= 0; --i)
      out = out * x_shift + Poly<Rational>::constant(ctx, g.coeff(i));
    return out;
  };
  for (auto& [z, mult] : *zr) {
    (void)mult;
    if (z.is_zero()) {
      if (!q.is_zero()) continue;
      // y^4 + p y^2 + r = (y^2+u)(y^2+v), u+v=p, uv=r
      auto disc = rational_sqrt(p * p - Rational(4) * r);
      if (!disc) continue;
      Rational u = (p + *disc) * Rational(1, 2), v = (p - *disc) * Rational(1, 2);
      Poly<Rational> g1(ctx, {u, ctx.zero(), ctx.one()}), g2(ctx, {v, ctx.zero(), ctx.one()});
      return {true, std::pair(lift(g1), lift(g2))};
    }
    auto s = rational_sqrt(z);
    if (!s) continue;
    Rational u = (p + z - q * s->inv()) * Rational(1, 2);
    Rational v = (p + z + q * s->inv()) * Rational(1, 2);
    Poly<Rational> g1(ctx, {u, *s, ctx.one()}), g2(ctx, {v, -*s, ctx.one()});
    Poly<Rational> f1 = lift(g1), f2 = lift(g2);
    if (f1 * f2 == f) return {true, std::pair(f1, f2)};
  }
  return {true, std::nullopt};  // conclusive: no quadratic split exists
}

}  // namespace polydetail

inline FactorResult<Rational> poly_factor(const Poly<Rational>& input) {
  auto ctx = input.ctx();
  FactorResult<Rational> res;
  res.unit = input.is_zero() ? ctx.one() : input.lead();
  if (input.degree() <= 0) return res;
  // squarefree split (char 0): repeated gcd with derivative
  std::vector<std::pair<Poly<Rational>, int>> sq;
  {
    Poly<Rational> f = input.monic();
    Poly<Rational> c = poly_gcd(f, f.derivative());
    Poly<Rational> w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
      Poly<Rational> y = poly_gcd(w, c);
      Poly<Rational> z = (w / y).monic();
      if (z.degree() > 0) sq.emplace_back(z, i);
      w = y;
      c = (c / y).monic();
      ++i;
    }
  }
  for (auto& [f0, mult] : sq) {
    Poly<Rational> f = f0;
    auto roots = polydetail::rational_roots(f);
    if (!roots) {
      res.complete = false;
      res.remainder = res.remainder ? *res.remainder * f : f;
      continue;
    }
    for (auto& [root, m] : *roots) {
      Poly<Rational> lin(ctx, {-root, ctx.one()});
      for (int i = 0; i < m; ++i) f = f / lin;
      res.irreducible.emplace_back(lin, mult * m);
    }
    if (f.degree() == 0) continue;
    if (f.degree() <= 3) {
      // no rational roots => irreducible for degrees 2, 3 (and trivially 1)
      res.irreducible.emplace_back(f.monic(), mult);
      continue;
    }
    if (f.degree() == 4) {
      auto [conclusive, split] = polydetail::quartic_split(f.monic());
      if (!conclusive) {
        res.complete = false;
        res.remainder = res.remainder ? *res.remainder * f : f;
      } else if (split) {
        res.irreducible.emplace_back(split->first.monic(), mult);
        res.irreducible.emplace_back(split->second.monic(), mult);
      } else {
        res.irreducible.emplace_back(f.monic(), mult);
      }
      continue;
    }
    // degree >= 5 without rational roots: out of contract
    res.complete = false;
    res.remainder = res.remainder ? *res.remainder * f : f;
  }
  return res;
}

// ---------------------------------------------------------------------------
// minimal polynomial of a square matrix (Krylov, exact)
// ---------------------------------------------------------------------------

template <FieldScalar F>
Poly<F> min_poly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InputError("min_poly: square matrix required");
  auto ctx = m.ctx();
  int n = m.rows();
  Poly<F> acc = Poly<F>::constant(ctx, ctx.one());
  for (int i = 0; i < n; ++i) {
    if (acc.degree() == n) break;
    std::vector<F> v(n, ctx.zero());
    v[i] = ctx.one();
    // grow Krylov space until dependence
    std::vector<std::vector<F>> cols{v};
    while (true) {
      std::vector<F> w = m.apply(cols.back());
      Matrix<F> K = Matrix<F>::from_columns(cols, n, ctx);
      auto sol = solve(K, Matrix<F>::from_column(w, ctx));
      if (sol) {
        // w = sum sol_j cols_j  =>  annihilator x^d - sum sol_j x^j
        std::vector<F> pc(cols.size() + 1, ctx.zero());
        pc.back() = ctx.one();
        for (int j = 0; j < int(cols.size()); ++j) pc[j] = -sol->at(j, 0);
        Poly<F> p(ctx, std::move(pc));
        Poly<F> g = poly_gcd(acc, p);
        acc = (acc * p) / g;  // lcm
        break;
      }
      cols.push_back(std::move(w));
    }
  }
  return acc.monic();
}

}  // namespace eqc
