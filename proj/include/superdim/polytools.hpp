#pragma once

// Integer-valued polynomials. A polynomial of degree <= r sampled at
// base, base+1, ..., base+r has a unique expansion
//   P(x) = sum_l a_l * C(x - base, l),
// with a_l the l-th forward difference at base. P takes integer values on all
// integers iff every a_l is an integer, iff it does so on any integer ray.

#include <vector>

#include "superdim/scalar.hpp"

namespace superdim {

struct SampledPolynomial {
  Integer base_point = 0;
  std::vector<Rational> values;  // P(base_point + k), k = 0..r
};

/// a_0..a_r by iterated forward differences.
inline std::vector<Rational> binomial_coefficients(const SampledPolynomial& p) {
  if (p.values.empty()) throw ValidationError("at least one sample is required");
  std::vector<Rational> diff = p.values;
  std::vector<Rational> out;
  for (std::size_t l = 0; l < p.values.size(); ++l) {
    out.push_back(diff[0]);
    for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
    diff.pop_back();
  }
  return out;
}

/// a_l = sum_k (-1)^(l-k) C(l,k) P(base + k): the closed alternating sum,
/// kept as an independent route to the same coefficients.
inline std::vector<Rational> binomial_coefficients_alternating(const SampledPolynomial& p) {
  if (p.values.empty()) throw ValidationError("at least one sample is required");
  std::vector<Rational> out;
  for (std::size_t l = 0; l < p.values.size(); ++l) {
    Rational a = 0;
    for (std::size_t k = 0; k <= l; ++k) {
      const Rational term = Rational(binomial(static_cast<long>(l), static_cast<long>(k))) * p.values[k];
      if ((l - k) % 2 == 0) a += term;
      else a -= term;
    }
    out.push_back(a);
  }
  return out;
}

inline bool is_integer_valued(const SampledPolynomial& p) {
  for (const auto& a : binomial_coefficients(p))
    if (!is_integer(a)) return false;
  return true;
}

/// C(y, l) for any integer y: y (y-1) ... (y-l+1) / l!.
inline Rational binomial_poly(const Integer& y, std::size_t l) {
  Rational num = 1;
  Integer fact = 1;
  for (std::size_t i = 0; i < l; ++i) {
    num *= Rational(y - static_cast<long>(i));
    fact *= static_cast<long>(i + 1);
  }
  return num / Rational(fact);
}

/// Evaluates sum_l a_l C(x - base, l).
inline Rational evaluate_binomial(const std::vector<Rational>& coeffs, const Integer& base, const Integer& x) {
  Rational v = 0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) v += coeffs[l] * binomial_poly(x - base, l);
  return v;
}

}  // namespace superdim
