#pragma once

// Weyl dimension polynomials of the simple Lie algebras A_n, B_n, C_n, D_n, G2,
// evaluated at arbitrary rational label vectors.
//
// Label orderings:
//   A_n  natural chain
//   B_n  short simple root last
//   C_n  long simple root last
//   D_n  the two fork roots (e_{n-1} - e_n, e_{n-1} + e_n) last
//   G2   (long, short)

#include <algorithm>
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superdim/detail/monotone_search.hpp"
#include "superdim/scalar.hpp"

namespace superdim {

enum class Series { A, B, C, D, G2 };

struct SimpleFactor {
  Series series = Series::A;
  int rank = 1;

  bool operator==(const SimpleFactor&) const = default;
};

using LabelVector = std::vector<Rational>;

inline void validate(const SimpleFactor& f) {
  if (f.rank < 1) throw ValidationError("factor rank must be positive");
  if (f.series == Series::D && f.rank < 2) throw ValidationError("D_n requires n >= 2");
  if (f.series == Series::G2 && f.rank != 2) throw ValidationError("G2 has rank 2");
}

inline std::string to_string(const SimpleFactor& f) {
  switch (f.series) {
    case Series::A: return "A" + std::to_string(f.rank);
    case Series::B: return "B" + std::to_string(f.rank);
    case Series::C: return "C" + std::to_string(f.rank);
    case Series::D: return "D" + std::to_string(f.rank);
    case Series::G2: return "G2";
  }
  return "?";
}

/// "A3", "b2", "G2", ...
inline SimpleFactor parse_factor(std::string_view text) {
  if (text.size() < 2) throw SyntaxError("invalid Lie algebra '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  std::string_view digits = text.substr(1);
  for (char d : digits)
    if (!std::isdigit(static_cast<unsigned char>(d))) throw SyntaxError("invalid Lie algebra '" + std::string(text) + "'");
  if (digits.size() > 4) throw ValidationError("rank too large");
  const int rank = std::stoi(std::string(digits));
  SimpleFactor f;
  switch (c) {
    case 'A': f = {Series::A, rank}; break;
    case 'B': f = {Series::B, rank}; break;
    case 'C': f = {Series::C, rank}; break;
    case 'D': f = {Series::D, rank}; break;
    case 'G':
      if (rank != 2) throw ValidationError("only G2 is supported among exceptional algebras");
      f = {Series::G2, 2};
      break;
    default: throw SyntaxError("unknown series in '" + std::string(text) + "'");
  }
  validate(f);
  return f;
}

namespace detail {

// prod_{i<j} (y_i^2 - y_j^2) / (r_i^2 - r_j^2)
inline void accumulate_pair_factors(const std::vector<Rational>& y, const std::vector<Rational>& r, Rational& num, Rational& den) {
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      num *= y[i] * y[i] - y[j] * y[j];
      den *= r[i] * r[i] - r[j] * r[j];
    }
}

}  // namespace detail

/// Weyl dimension prod_{a>0} (L + rho, a) / (rho, a), evaluated formally.
inline Rational weyl_dim(const SimpleFactor& f, std::span<const Rational> labels) {
  validate(f);
  const auto n = static_cast<std::size_t>(f.rank);
  if (labels.size() != n) throw ValidationError(to_string(f) + " expects " + std::to_string(n) + " labels");
  std::vector<Rational> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = labels[i] + 1;

  Rational num = 1, den = 1;
  switch (f.series) {
    case Series::A: {
      // x_i = sum_{j>=i} (l_j + 1), x_{n+1} = 0; roots e_i - e_j.
      std::vector<Rational> x(n + 1, Rational(0));
      for (std::size_t i = n; i-- > 0;) x[i] = x[i + 1] + shifted[i];
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          num *= x[i] - x[j];
          den *= static_cast<long>(j - i);
        }
      break;
    }
    case Series::B:
    case Series::C: {
      const bool b = f.series == Series::B;
      std::vector<Rational> y(n), r(n);
      Rational acc = b ? Rational(shifted[n - 1] / 2) : shifted[n - 1];
      y[n - 1] = acc;
      for (std::size_t i = n - 1; i-- > 0;) {
        acc += shifted[i];
        y[i] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) r[i] = b ? Rational(Rational(2 * static_cast<long>(n - i) - 1) / 2) : Rational(static_cast<long>(n - i));
      detail::accumulate_pair_factors(y, r, num, den);
      for (std::size_t i = 0; i < n; ++i) {
        num *= y[i];
        den *= r[i];
      }
      break;
    }
    case Series::D: {
      std::vector<Rational> y(n), r(n);
      Rational fork = (shifted[n - 2] + shifted[n - 1]) / 2;
      y[n - 1] = (shifted[n - 1] - shifted[n - 2]) / 2;
      Rational acc = fork;
      y[n - 2] = acc;
      for (std::size_t i = n - 2; i-- > 0;) {
        acc += shifted[i];
        y[i] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<long>(n - 1 - i);
      detail::accumulate_pair_factors(y, r, num, den);
      break;
    }
    case Series::G2: {
      const Rational& lng = shifted[0];
      const Rational& sht = shifted[1];
      num = sht * lng * (sht + lng) * (sht + 2 * lng) * (sht + 3 * lng) * (2 * sht + 3 * lng);
      den = 120;
      break;
    }
  }
  return num / den;
}

inline Rational weyl_dim(const SimpleFactor& f, const LabelVector& labels) {
  return weyl_dim(f, std::span<const Rational>(labels));
}

/// Product of weyl_dim over aligned factor/label lists; 1 for an empty list.
inline Rational semisimple_dim(std::span<const SimpleFactor> factors, std::span<const LabelVector> labels) {
  if (factors.size() != labels.size()) throw ValidationError("factor and label lists differ in length");
  Rational d = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) d *= weyl_dim(factors[i], labels[i]);
  return d;
}

/// All dominant integral label vectors of `f` with Weyl dimension equal to `target`.
inline std::vector<LabelVector> enumerate_labels(const SimpleFactor& f, const Integer& target) {
  validate(f);
  detail::MonotoneSearch search(std::vector<long>(static_cast<std::size_t>(f.rank), 0), Rational(target));
  LabelVector buffer(static_cast<std::size_t>(f.rank));
  auto value = [&](const std::vector<long>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) buffer[i] = x[i];
    return weyl_dim(f, buffer);
  };
  std::vector<LabelVector> out;
  search.run(value, [&](const std::vector<long>& x) {
    LabelVector v(x.begin(), x.end());
    if (weyl_dim(f, v) == Rational(target)) out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superdim
