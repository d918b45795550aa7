#pragma once

// Identifiers of basic classical Lie superalgebras and the textual grammar
//   sl(P|Q)  osp(M|N)  osp(4|2;RATIONAL)  osp(4|2;a)  F(4)  G(3)
// Family keywords are case-insensitive; whitespace is not allowed.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "superdim/scalar.hpp"

namespace superdim {

enum class Family { SL, OSP, D21A, F4, G3 };

enum class AlgebraType { TypeI0, TypeI1, TypeII };

inline std::string to_string(AlgebraType t) {
  switch (t) {
    case AlgebraType::TypeI0: return "I0";
    case AlgebraType::TypeI1: return "I1";
    case AlgebraType::TypeII: return "II";
  }
  return "?";
}

// Ranks beyond this are refused up front; nothing interesting happens there
// and root-system construction is quadratic in the rank.
inline constexpr int kMaxRank = 64;

/// sl(p|q): p, q.  osp(M|2n): M, n.  D(2|1;alpha): alpha, or nullopt for a
/// symbolic alpha.  F(4), G(3): no parameters.
class AlgebraId {
 public:
  static AlgebraId sl(int p, int q) {
    AlgebraId id(Family::SL, p, q);
    id.validate();
    return id;
  }
  /// osp(M|2n); osp(4|2) becomes D(2|1;1).
  static AlgebraId osp(int M, int n) {
    if (M == 4 && n == 1) return d21a(Rational(1));
    AlgebraId id(Family::OSP, M, n);
    id.validate();
    return id;
  }
  static AlgebraId d21a(std::optional<Rational> alpha) {
    AlgebraId id(Family::D21A, 0, 0);
    id.alpha_ = std::move(alpha);
    id.validate();
    return id;
  }
  static AlgebraId f4() { return AlgebraId(Family::F4, 0, 0); }
  static AlgebraId g3() { return AlgebraId(Family::G3, 0, 0); }

  Family family() const { return family_; }
  /// sl: p.  osp: M.
  int first() const { return a_; }
  /// sl: q.  osp: n (half the symplectic dimension).
  int second() const { return b_; }
  const std::optional<Rational>& alpha() const { return alpha_; }
  bool symbolic_alpha() const { return family_ == Family::D21A && !alpha_; }

  bool is_osp_odd() const { return family_ == Family::OSP && a_ % 2 == 1; }   // B(m|n), incl. B(0|n)
  bool is_osp_even() const { return family_ == Family::OSP && a_ % 2 == 0 && a_ >= 4; }  // D(m|n)
  bool is_osp2() const { return family_ == Family::OSP && a_ == 2; }          // C(n+1)
  /// m for B(m|n) and D(m|n).
  int orth_rank() const { return a_ / 2; }

  AlgebraType type() const {
    if (family_ == Family::SL) return a_ == b_ ? AlgebraType::TypeI0 : AlgebraType::TypeI1;
    if (is_osp2()) return AlgebraType::TypeI1;
    return AlgebraType::TypeII;
  }
  bool type_one() const { return type() != AlgebraType::TypeII; }

  bool operator==(const AlgebraId&) const = default;

 private:
  AlgebraId(Family f, int a, int b) : family_(f), a_(a), b_(b) {}

  void validate() const {
    auto fail = [](const std::string& why) { throw ValidationError(why); };
    switch (family_) {
      case Family::SL:
        if (b_ < 1) fail("sl(p|q) requires q >= 1");
        if (a_ < b_) fail("sl(p|q) requires p >= q");
        if (a_ == 1 && b_ == 1) fail("sl(1|1) is excluded (p = q = 1)");
        if (a_ + b_ > kMaxRank) fail("rank too large");
        break;
      case Family::OSP:
        if (a_ < 1) fail("osp(M|2n) requires M >= 1");
        if (b_ < 1) fail("osp(M|2n) requires n >= 1");
        if (a_ == 2 && b_ < 2) fail("osp(2|2) is excluded; osp(2|2n) requires n >= 2");
        if (a_ / 2 + b_ > kMaxRank) fail("rank too large");
        break;
      case Family::D21A:
        if (alpha_ && (*alpha_ == 0 || *alpha_ == -1)) fail("osp(4|2;alpha) requires alpha not in {0, -1}");
        break;
      case Family::F4:
      case Family::G3: break;
    }
  }

  Family family_;
  int a_ = 0;
  int b_ = 0;
  std::optional<Rational> alpha_;
};

inline std::string to_string(const AlgebraId& id) {
  switch (id.family()) {
    case Family::SL: return "sl(" + std::to_string(id.first()) + "|" + std::to_string(id.second()) + ")";
    case Family::OSP: return "osp(" + std::to_string(id.first()) + "|" + std::to_string(2 * id.second()) + ")";
    case Family::D21A: return "osp(4|2;" + (id.alpha() ? to_string(*id.alpha()) : std::string("a")) + ")";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
  }
  return "?";
}

/// Kac's name: A(p-1|q-1), B(m|n), C(n+1), D(m|n), D(2|1;alpha), F(4), G(3).
inline std::string kac_name(const AlgebraId& id) {
  const auto s = [](int v) { return std::to_string(v); };
  switch (id.family()) {
    case Family::SL: return "A(" + s(id.first() - 1) + "|" + s(id.second() - 1) + ")";
    case Family::OSP:
      if (id.is_osp2()) return "C(" + s(id.second() + 1) + ")";
      if (id.is_osp_odd()) return "B(" + s(id.orth_rank()) + "|" + s(id.second()) + ")";
      return "D(" + s(id.orth_rank()) + "|" + s(id.second()) + ")";
    case Family::D21A: return "D(2|1;" + (id.alpha() ? to_string(*id.alpha()) : std::string("a")) + ")";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
  }
  return "?";
}

inline AlgebraType classify(const AlgebraId& id) { return id.type(); }

inline std::ostream& operator<<(std::ostream& os, const AlgebraId& id) { return os << to_string(id); }

namespace detail {

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline int parse_small_int(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 6) throw SyntaxError("invalid algebra '" + std::string(whole) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw SyntaxError("invalid algebra '" + std::string(whole) + "'");
  return std::stoi(std::string(digits));
}

}  // namespace detail

inline AlgebraId parse_algebra(std::string_view text) {
  const std::string whole(text);
  const std::string low = detail::lower(text);
  if (low == "f(4)") return AlgebraId::f4();
  if (low == "g(3)") return AlgebraId::g3();

  auto open = low.find('(');
  if (open == std::string::npos || low.back() != ')') throw SyntaxError("invalid algebra '" + whole + "'");
  const std::string keyword = low.substr(0, open);
  const std::string_view inside = std::string_view(whole).substr(open + 1, whole.size() - open - 2);
  const auto bar = inside.find('|');
  if (bar == std::string_view::npos) throw SyntaxError("invalid algebra '" + whole + "': expected '|'");
  const std::string_view left = inside.substr(0, bar);
  std::string_view right = inside.substr(bar + 1);

  if (keyword == "sl") {
    return AlgebraId::sl(detail::parse_small_int(left, text), detail::parse_small_int(right, text));
  }
  if (keyword != "osp") throw SyntaxError("unknown algebra family in '" + whole + "'");

  std::optional<std::string_view> param;
  if (auto semi = right.find(';'); semi != std::string_view::npos) {
    param = right.substr(semi + 1);
    right = right.substr(0, semi);
  }
  const int M = detail::parse_small_int(left, text);
  const int N = detail::parse_small_int(right, text);
  if (param) {
    if (M != 4 || N != 2) throw SyntaxError("a deformation parameter is only allowed for osp(4|2;alpha)");
    if (*param == "a" || *param == "A") return AlgebraId::d21a(std::nullopt);
    return AlgebraId::d21a(parse_rational(*param));
  }
  if (N % 2 != 0) throw ValidationError("osp(M|N) requires N even");
  return AlgebraId::osp(M, N / 2);
}

}  // namespace superdim
