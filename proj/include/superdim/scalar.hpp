#pragma once

// Exact rationals and affine scalars a + b*t in a single named parameter.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "superdim/errors.hpp"

namespace superdim {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Largest integer <= r.
inline Integer floor_of(const Rational& r) {
  Integer n = numerator_of(r);
  Integer d = denominator_of(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

inline std::string to_string(const Integer& i) { return i.str(); }

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Parses INT or INT/INT with an optional leading '-'. No whitespace.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return SyntaxError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto digits = [&](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = text.front() == '-';
  std::string_view body = negative ? text.substr(1) : text;
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw bad();
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) throw bad();
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

inline Integer pow2(unsigned e) {
  Integer r = 1;
  r <<= e;
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Which free parameter an affine scalar depends on.
enum class Param { None, OddLabel, Alpha };

inline char param_letter(Param p) {
  switch (p) {
    case Param::OddLabel: return 't';
    case Param::Alpha: return 'a';
    case Param::None: break;
  }
  return '?';
}

/// constant + slope * param, kept canonical: slope == 0 <=> param == None.
class AffineScalar {
 public:
  AffineScalar() = default;
  AffineScalar(Rational c) : constant_(std::move(c)) {}  // NOLINT(implicit)
  AffineScalar(long c) : constant_(c) {}                  // NOLINT(implicit)
  AffineScalar(int c) : constant_(c) {}                   // NOLINT(implicit)
  AffineScalar(Rational c, Rational slope, Param p) : constant_(std::move(c)), slope_(std::move(slope)), param_(p) {
    canonicalize();
  }

  static AffineScalar parameter(Param p) { return AffineScalar(0, 1, p); }

  const Rational& constant() const { return constant_; }
  const Rational& slope() const { return slope_; }
  Param param() const { return param_; }
  bool is_constant() const { return param_ == Param::None; }
  bool is_zero() const { return is_constant() && constant_ == 0; }

  /// The constant value; throws ParamMisuse if a parameter is present.
  const Rational& value() const {
    if (!is_constant()) throw ParamMisuse("expected a parameter-free value, got a parametric one");
    return constant_;
  }

  friend bool operator==(const AffineScalar&, const AffineScalar&) = default;

  friend AffineScalar operator+(const AffineScalar& x, const AffineScalar& y) {
    return AffineScalar(x.constant_ + y.constant_, x.slope_ + y.slope_, common(x, y));
  }
  friend AffineScalar operator-(const AffineScalar& x, const AffineScalar& y) {
    return AffineScalar(x.constant_ - y.constant_, x.slope_ - y.slope_, common(x, y));
  }
  friend AffineScalar operator-(const AffineScalar& x) { return AffineScalar(-x.constant_, -x.slope_, x.param_); }
  friend AffineScalar operator*(const AffineScalar& x, const AffineScalar& y) {
    if (!x.is_constant() && !y.is_constant())
      throw QuadraticOverflow("product of two parametric scalars");
    if (x.is_constant()) return AffineScalar(x.constant_ * y.constant_, x.constant_ * y.slope_, y.param_);
    return AffineScalar(x.constant_ * y.constant_, x.slope_ * y.constant_, x.param_);
  }
  friend AffineScalar operator/(const AffineScalar& x, const Rational& d) {
    return AffineScalar(x.constant_ / d, x.slope_ / d, x.param_);
  }
  AffineScalar& operator+=(const AffineScalar& y) { return *this = *this + y; }
  AffineScalar& operator-=(const AffineScalar& y) { return *this = *this - y; }
  AffineScalar& operator*=(const AffineScalar& y) { return *this = *this * y; }

  /// Lexicographic on (constant, slope); used only for canonical ordering.
  friend std::strong_ordering order(const AffineScalar& x, const AffineScalar& y) {
    if (x.constant_ != y.constant_) return x.constant_ < y.constant_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.slope_ != y.slope_) return x.slope_ < y.slope_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static Param common(const AffineScalar& x, const AffineScalar& y) {
    if (x.param_ == Param::None) return y.param_;
    if (y.param_ == Param::None || y.param_ == x.param_) return x.param_;
    throw ParamMismatch("cannot combine scalars in different parameters");
  }
  void canonicalize() {
    if (slope_ == 0) param_ = Param::None;
    else if (param_ == Param::None) throw ParamMisuse("nonzero slope without a parameter tag");
  }

  Rational constant_{0};
  Rational slope_{0};
  Param param_ = Param::None;
};

inline AffineScalar add(const AffineScalar& x, const AffineScalar& y) { return x + y; }
inline AffineScalar mul(const AffineScalar& x, const AffineScalar& y) { return x * y; }

/// Root of an affine scalar in its parameter.
struct ZeroSolution {
  enum class Kind { None, Unique, Identically };
  Kind kind = Kind::None;
  Rational value;  // meaningful for Unique

  bool operator==(const ZeroSolution&) const = default;
};

inline ZeroSolution solve_zero(const AffineScalar& x) {
  if (x.slope() != 0) return {ZeroSolution::Kind::Unique, -x.constant() / x.slope()};
  if (x.constant() != 0) return {ZeroSolution::Kind::None, 0};
  return {ZeroSolution::Kind::Identically, 0};
}

inline Rational eval(const AffineScalar& x, const Rational& t) { return x.constant() + x.slope() * t; }

/// num / den, provided num is a rational multiple of den.
inline Rational exact_ratio(const AffineScalar& num, const AffineScalar& den) {
  if (den.is_zero()) throw NonProportional("division by zero");
  if (den.is_constant()) {
    if (!num.is_constant()) throw NonProportional("parametric numerator over constant denominator");
    return num.constant() / den.constant();
  }
  if (!num.is_constant() && num.param() != den.param()) throw NonProportional("different parameters");
  Rational q = num.slope() / den.slope();
  if (num.constant() != q * den.constant()) throw NonProportional("scalars are not proportional");
  return q;
}

inline std::string to_string(const AffineScalar& x) {
  if (x.is_constant()) return to_string(x.constant());
  std::string out;
  const char letter = param_letter(x.param());
  if (x.slope() == 1) out += letter;
  else if (x.slope() == -1) out += std::string("-") + letter;
  else out += to_string(x.slope()) + "*" + letter;
  if (x.constant() > 0) out += "+" + to_string(x.constant());
  else if (x.constant() < 0) out += to_string(x.constant());
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const AffineScalar& x) { return os << to_string(x); }

/// Parses a sum of signed terms, each a RATIONAL or `[RATIONAL*]LETTER`,
/// e.g. "5/2*a+5/2", "t", "-3+a". With Param::None only a RATIONAL is accepted.
inline AffineScalar parse_affine(std::string_view text, Param param) {
  if (param == Param::None) return parse_rational(text);
  const char letter = param_letter(param);
  if (text.empty()) throw SyntaxError("empty scalar");
  AffineScalar result;
  bool seen_param = false;
  std::size_t i = 0;
  while (i < text.size()) {
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      if (i > 0 || negative) ++i;
      else throw SyntaxError("leading '+' in '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string_view term = text.substr(i, j - i);
    if (term.empty()) throw SyntaxError("empty term in '" + std::string(text) + "'");
    if (term.back() == letter) {
      if (seen_param) throw SyntaxError("parameter appears twice in '" + std::string(text) + "'");
      seen_param = true;
      Rational slope = 1;
      std::string_view coeff = term.substr(0, term.size() - 1);
      if (!coeff.empty()) {
        if (coeff.back() != '*') throw SyntaxError("expected '*' before parameter in '" + std::string(text) + "'");
        coeff.remove_suffix(1);
        slope = parse_rational(coeff);
      }
      result += AffineScalar(0, negative ? Rational(-slope) : slope, param);
    } else {
      Rational c = parse_rational(term);
      result += negative ? Rational(-c) : c;
    }
    i = j;
  }
  return result;
}

}  // namespace superdim
