#pragma once

// Positivity certificates for rational functions on the positive orthant.
// The strongest certificate is a Laurent expansion with positive
// coefficients; next best is a ratio of two such polynomials, possibly
// after multiplying numerator and denominator by a small library of
// manifestly positive factors. Failing both, random sampling can produce
// a concrete negative witness; otherwise the result is indeterminate.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "ratfunc.hpp"

namespace xcv {

enum class PosStatus { POSITIVE_LAURENT, POSITIVE_RATIO, NEGATIVE_WITNESS, INDETERMINATE };

inline const char* to_string(PosStatus s) {
  switch (s) {
    case PosStatus::POSITIVE_LAURENT: return "POSITIVE_LAURENT";
    case PosStatus::POSITIVE_RATIO: return "POSITIVE_RATIO";
    case PosStatus::NEGATIVE_WITNESS: return "NEGATIVE_WITNESS";
    case PosStatus::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

struct PosCertificate {
  PosStatus status = PosStatus::INDETERMINATE;
  bool integral = false;                // coefficients are integers (Laurent case)
  std::string multiplier;               // textual note for the ratio case
  std::optional<std::vector<Rat>> witness;  // positive point with f <= 0
  std::optional<Rat> witness_value;
};

namespace detail {

inline bool all_positive(const Laurent& p) {
  if (p.is_zero()) return false;
  for (auto& [m, c] : p.terms)
    if (c <= 0) return false;
  return true;
}

// Factors of the form 1 + x_i^k used to clear alternating signs, e.g.
// (1 - x + x^2) * (1 + x) = 1 + x^3.
inline std::vector<std::pair<Laurent, std::string>> multiplier_library(int arity) {
  std::vector<std::pair<Laurent, std::string>> lib;
  for (int i = 0; i < arity; ++i) {
    for (int k = 1; k <= 3; ++k) {
      Laurent m = Laurent::constant(arity, 1);
      Exp e(arity, 0);
      e[i] = k;
      m.add_term(e, 1);
      lib.push_back({m, "1 + v" + std::to_string(i) + "^" + std::to_string(k)});
    }
    Laurent m = Laurent::constant(arity, 1);
    Exp e1(arity, 0), e2(arity, 0);
    e1[i] = 1;
    e2[i] = 2;
    m.add_term(e1, 1);
    m.add_term(e2, 1);
    lib.push_back({m, "1 + v" + std::to_string(i) + " + v" + std::to_string(i) + "^2"});
  }
  return lib;
}

}  // namespace detail

// Samples `trials` uniformly random positive rational points with
// coordinates k/d, k in [1, 4d], and returns the first point where f is
// defined and <= 0.
inline std::optional<std::pair<std::vector<Rat>, Rat>> find_negative_witness(const RatFunc& f,
                                                                             unsigned seed = 12001,
                                                                             int trials = 100) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 24), den(1, 6);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> pt(f.arity);
    for (int i = 0; i < f.arity; ++i) pt[i] = rat_make(num(rng), den(rng));
    try {
      Rat v = f.eval(pt);
      if (v <= 0) return std::make_pair(pt, v);
    } catch (const std::domain_error&) {
      continue;  // pole; try another point
    }
  }
  return std::nullopt;
}

inline PosCertificate certify_positive(const RatFunc& f, unsigned sample_seed = 12001) {
  PosCertificate cert;
  if (f.is_zero()) {
    cert.status = PosStatus::NEGATIVE_WITNESS;
    cert.witness = std::vector<Rat>(f.arity, Rat(1));
    cert.witness_value = Rat(0);
    return cert;
  }

  Laurent as_l(f.arity);
  if (f.as_laurent(as_l)) {
    if (detail::all_positive(as_l)) {
      cert.status = PosStatus::POSITIVE_LAURENT;
      cert.integral = as_l.all_coeffs_integer();
      return cert;
    }
  } else if (detail::all_positive(f.num) && detail::all_positive(f.den)) {
    cert.status = PosStatus::POSITIVE_RATIO;
    return cert;
  }

  // One library factor, or a product of two, applied to numerator and
  // denominator separately.
  auto lib = detail::multiplier_library(f.arity);
  auto clears = [](const Laurent& p, const std::vector<const Laurent*>& ms) {
    Laurent r = p;
    for (auto* m : ms) r = r * (*m);
    return detail::all_positive(r);
  };
  auto num_ok = detail::all_positive(f.num);
  auto den_ok = detail::all_positive(f.den);
  for (size_t a = 0; a < lib.size() && !(num_ok && den_ok); ++a) {
    bool n1 = num_ok || clears(f.num, {&lib[a].first});
    bool d1 = den_ok || clears(f.den, {&lib[a].first});
    if (n1 && d1) {
      cert.status = PosStatus::POSITIVE_RATIO;
      cert.multiplier = lib[a].second;
      return cert;
    }
    for (size_t b = a; b < lib.size(); ++b) {
      bool n2 = num_ok || clears(f.num, {&lib[a].first, &lib[b].first});
      bool d2 = den_ok || clears(f.den, {&lib[a].first, &lib[b].first});
      if (n2 && d2) {
        cert.status = PosStatus::POSITIVE_RATIO;
        cert.multiplier = lib[a].second + ", " + lib[b].second;
        return cert;
      }
    }
  }
  if (num_ok && den_ok) {
    cert.status = PosStatus::POSITIVE_RATIO;
    return cert;
  }

  if (auto w = find_negative_witness(f, sample_seed)) {
    cert.status = PosStatus::NEGATIVE_WITNESS;
    cert.witness = w->first;
    cert.witness_value = w->second;
    return cert;
  }
  cert.status = PosStatus::INDETERMINATE;
  return cert;
}

}  // namespace xcv
