#pragma once

// Multivariate polynomial gcd over the integers via primitive
// pseudo-remainder sequences, recursing on the highest variable.
// Used to keep rational functions in lowest terms; without this the
// iterated flip computations blow up doubly exponentially.

#include <map>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "rat.hpp"

namespace xcv {

// Integer polynomial, all exponents >= 0, no zero coefficients stored.
using IPoly = std::map<Exp, Int>;

namespace detail {

inline int ipoly_deg(const IPoly& p, int v) {
  int d = -1;
  for (auto& [m, c] : p) d = std::max(d, m[v]);
  return d;  // -1 for the zero polynomial
}

// Coefficient of x_v^d, as a polynomial with the v-th exponent zeroed.
inline IPoly ipoly_coeff(const IPoly& p, int v, int d) {
  IPoly r;
  for (auto& [m, c] : p)
    if (m[v] == d) {
      Exp mm = m;
      mm[v] = 0;
      r.emplace(std::move(mm), c);
    }
  return r;
}

inline IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r;
  if (a.empty() || b.empty()) return r;
  int n = static_cast<int>(a.begin()->first.size());
  Exp m(n);
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      for (int i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      auto it = r.find(m);
      if (it == r.end()) {
        Int c = ca * cb;
        if (c != 0) r.emplace(m, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

inline IPoly ipoly_sub(IPoly a, const IPoly& b) {
  for (auto& [m, c] : b) {
    auto it = a.find(m);
    if (it == a.end()) {
      a.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) a.erase(it);
    }
  }
  return a;
}

inline IPoly ipoly_scale(IPoly a, const Int& c) {
  if (c == 0) return {};
  for (auto& [m, v] : a) v *= c;
  return a;
}

inline IPoly ipoly_shift_var(const IPoly& a, int v, int k) {
  IPoly r;
  for (auto& [m, c] : a) {
    Exp mm = m;
    mm[v] += k;
    r.emplace(std::move(mm), c);
  }
  return r;
}

// Exact division, valid only when b divides a over the integers.
// Division steps follow the lex leading terms; exactness makes each
// coefficient quotient an integer.
inline IPoly ipoly_divexact(IPoly a, const IPoly& b) {
  if (b.empty()) throw std::domain_error("ipoly_divexact: division by zero");
  IPoly q;
  const auto& [lm_b, lc_b] = *b.rbegin();  // lex-greatest term
  int n = static_cast<int>(lm_b.size());
  while (!a.empty()) {
    const auto& [lm_a, lc_a] = *a.rbegin();
    Exp m(n);
    for (int i = 0; i < n; ++i) {
      m[i] = lm_a[i] - lm_b[i];
      if (m[i] < 0) throw std::domain_error("ipoly_divexact: not divisible");
    }
    if (lc_a % lc_b != 0) throw std::domain_error("ipoly_divexact: not divisible");
    Int c = lc_a / lc_b;
    IPoly t;
    t.emplace(m, c);
    q.emplace(std::move(m), std::move(c));
    a = ipoly_sub(std::move(a), ipoly_mul(t, b));
  }
  return q;
}

// Pseudo-remainder of a by b in the variable v.
inline IPoly ipoly_prem(IPoly a, const IPoly& b, int v) {
  int db = ipoly_deg(b, v);
  if (db < 0) throw std::domain_error("ipoly_prem: zero divisor");
  IPoly lc_b = ipoly_coeff(b, v, db);
  int n = static_cast<int>(b.begin()->first.size());
  IPoly lcb_full;  // lc_b with the v-exponent restored to 0 already; ready to multiply
  lcb_full = lc_b;
  (void)n;
  while (true) {
    int da = ipoly_deg(a, v);
    if (da < db || da < 0) return a;
    IPoly lc_a = ipoly_coeff(a, v, da);
    // a <- lc_b * a - lc_a * x_v^(da-db) * b
    a = ipoly_sub(ipoly_mul(lcb_full, a), ipoly_shift_var(ipoly_mul(lc_a, b), v, da - db));
  }
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline IPoly ipoly_gcd_rec(IPoly a, IPoly b, int v);

// gcd of the x_v-coefficients of p (a polynomial in variables 0..v-1).
inline IPoly ipoly_content(const IPoly& p, int v) {
  IPoly g;
  for (int d = 0; d <= ipoly_deg(p, v); ++d) {
    IPoly c = ipoly_coeff(p, v, d);
    if (c.empty()) continue;
    g = g.empty() ? std::move(c) : ipoly_gcd_rec(std::move(g), std::move(c), v - 1);
    if (g.size() == 1 && g.begin()->first == Exp(g.begin()->first.size(), 0) &&
        g.begin()->second == 1)
      break;  // content is already 1
  }
  return g;
}

// gcd against a single term needs no remainder sequence: it is the
// componentwise-minimum monomial times the integer content. Rational
// functions with monomial denominators hit this on every normalize, so the
// shortcut matters a lot (matrix products over the coordinate field stay
// Laurent, and the general recursion is exponential in the variable count).
inline IPoly ipoly_gcd_monomial(const IPoly& mono, const IPoly& other) {
  const auto& [mexp, mc] = *mono.begin();
  int n = static_cast<int>(mexp.size());
  Exp g = other.begin()->first;
  Int c = 0;
  for (auto& [e, v] : other) {
    for (int i = 0; i < n; ++i) g[i] = std::min(g[i], e[i]);
    if (c != 1) c = int_gcd(c, v);
  }
  for (int i = 0; i < n; ++i) g[i] = std::min(g[i], mexp[i]);
  IPoly r;
  r.emplace(std::move(g), int_gcd(c, mc));
  return r;
}

inline IPoly ipoly_gcd_rec(IPoly a, IPoly b, int v) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1) return ipoly_gcd_monomial(a, b);
  if (b.size() == 1) return ipoly_gcd_monomial(b, a);
  if (v < 0) {
    // Both are integer constants.
    Exp z(a.begin()->first.size(), 0);
    IPoly r;
    r.emplace(z, int_gcd(a.begin()->second, b.begin()->second));
    return r;
  }
  if (ipoly_deg(a, v) == 0 && ipoly_deg(b, v) == 0) return ipoly_gcd_rec(a, b, v - 1);

  IPoly ca = ipoly_content(a, v);
  IPoly cb = ipoly_content(b, v);
  IPoly pa = ipoly_divexact(std::move(a), ca);
  IPoly pb = ipoly_divexact(std::move(b), cb);
  IPoly c = ipoly_gcd_rec(std::move(ca), std::move(cb), v - 1);

  // Primitive pseudo-remainder sequence in x_v.
  if (ipoly_deg(pa, v) < ipoly_deg(pb, v)) std::swap(pa, pb);
  while (true) {
    IPoly r = ipoly_prem(pa, pb, v);
    if (r.empty()) break;
    if (ipoly_deg(r, v) == 0) {
      // Nontrivial remainder of degree zero: primitive parts are coprime.
      pb.clear();
      pb.emplace(Exp(c.begin()->first.size(), 0), Int(1));
      break;
    }
    IPoly cr = ipoly_content(r, v);
    pa = std::move(pb);
    pb = ipoly_divexact(std::move(r), cr);
  }
  IPoly g = ipoly_mul(c, ipoly_divexact(pb, ipoly_content(pb, v)));
  if (g.rbegin()->second < 0) g = ipoly_scale(std::move(g), Int(-1));
  return g;
}

}  // namespace detail

// gcd of two integer polynomials (exponents must be >= 0), normalized to a
// positive lex-leading coefficient. Zero if both inputs are zero.
inline IPoly ipoly_gcd(const IPoly& a, const IPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  int n = static_cast<int>(a.begin()->first.size());
  IPoly g = detail::ipoly_gcd_rec(a, b, n - 1);
  if (!g.empty() && g.rbegin()->second < 0) g = detail::ipoly_scale(std::move(g), Int(-1));
  return g;
}

inline IPoly ipoly_divexact(const IPoly& a, const IPoly& b) { return detail::ipoly_divexact(a, b); }
inline IPoly ipoly_mul(const IPoly& a, const IPoly& b) { return detail::ipoly_mul(a, b); }

}  // namespace xcv
