#pragma once

// Text and JSON-lines rendering of results, label-list parsing, and the
// reproducible tables (shift table, type I and type II results).
//
// Canonical text conventions: rationals as p or p/q; the type I odd label as
// t; D(2|1;a) expressions as p/q*a+r/s; sets sorted ascending.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "superdim/enumerate.hpp"

namespace superdim {

// ---------------------------------------------------------------------------
// Parsing

/// Comma-separated labels; each entry a RATIONAL, or an affine expression in
/// the letter t (type I odd label) or a (D(2|1;a) parameter). At most one entry
/// may carry a parameter.
inline std::vector<AffineScalar> parse_labels(std::string_view text) {
  std::vector<AffineScalar> out;
  int parametric = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw SyntaxError("empty label in '" + std::string(text) + "'");
    AffineScalar x;
    if (item.find('t') != std::string_view::npos) x = parse_affine(item, Param::OddLabel);
    else if (item.find('a') != std::string_view::npos) x = parse_affine(item, Param::Alpha);
    else x = parse_rational(item);
    if (!x.is_constant() && ++parametric > 1) throw MultipleParams("at most one label may carry the free parameter");
    out.push_back(std::move(x));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& x : parse_labels(text)) {
    if (!x.is_constant()) throw SyntaxError("expected plain rationals in '" + std::string(text) + "'");
    out.push_back(x.constant());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text pieces

inline std::string format_labels(const std::vector<AffineScalar>& labels) {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + to_string(labels[i]);
  return s + ")";
}

inline std::string format_vector(const LabelVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

inline std::string format_even(const std::vector<LabelVector>& even) {
  std::string s;
  for (std::size_t f = 0; f < even.size(); ++f) s += (f ? "-" : "") + format_vector(even[f]);
  return s.empty() ? "()" : s;
}

inline std::string format_set(const std::vector<Rational>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + to_string(values[i]);
  return s + "}";
}

inline std::string format_exclusions(Param tag, const std::vector<Rational>& values) {
  if (tag == Param::None || values.empty()) return "-";
  return std::string(1, param_letter(tag)) + " not in " + format_set(values);
}

inline std::string format_factors(const RootSystem& rs) {
  std::string s;
  for (const auto& f : rs.even_factors) s += (s.empty() ? "" : " + ") + to_string(f.factor);
  if (rs.center) s += s.empty() ? "center" : " + center";
  return s.empty() ? "0" : s;
}

inline std::string format_matrix(const Matrix& m) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : m) {
    cells.emplace_back();
    for (const auto& x : row) {
      cells.back().push_back(to_string(x));
      width = std::max(width, cells.back().back().size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    out += "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::string(width - row[j].size(), ' ') + row[j];
    out += "]\n";
  }
  return out;
}

/// Left-aligned columns separated by two spaces; no trailing blanks.
inline std::string format_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON lines

/// Field names: algebra, kac_name, type, N1, dim, g_labels, g0_labels, ls0,
/// parameter, excluded, domain_exclusions. Rationals and affine expressions are
/// strings in the canonical text form; dim is a number.
inline nlohmann::json rep_to_json(const TypicalRep& r) {
  nlohmann::json j;
  j["algebra"] = to_string(r.algebra);
  j["kac_name"] = kac_name(r.algebra);
  j["type"] = to_string(r.algebra.type());
  j["N1"] = r.N1;
  j["dim"] = r.dim.convert_to<long long>();
  j["g_labels"] = nlohmann::json::array();
  for (const auto& g : r.g_labels) j["g_labels"].push_back(to_string(g));
  j["g0_labels"] = nlohmann::json::array();
  for (const auto& f : r.even_labels) {
    auto arr = nlohmann::json::array();
    for (const auto& v : f) arr.push_back(to_string(v));
    j["g0_labels"].push_back(arr);
  }
  j["ls0"] = r.ls0 ? nlohmann::json(to_string(*r.ls0)) : nlohmann::json(nullptr);
  j["parameter"] = r.tag == Param::None ? nlohmann::json(nullptr) : nlohmann::json(std::string(1, param_letter(r.tag)));
  j["excluded"] = nlohmann::json::array();
  for (const auto& v : r.excluded_values) j["excluded"].push_back(to_string(v));
  j["domain_exclusions"] = nlohmann::json::array();
  for (const auto& v : r.domain_exclusions) j["domain_exclusions"].push_back(to_string(v));
  return j;
}

// ---------------------------------------------------------------------------
// Tables

inline std::string type_one_table(const std::vector<TypicalRep>& reps) {
  std::vector<std::vector<std::string>> rows{{"algebra", "N1", "g_labels", "g0_labels", "typicality"}};
  for (const auto& r : reps) {
    if (!r.algebra.type_one()) continue;
    rows.push_back({to_string(r.algebra), std::to_string(r.N1), format_labels(r.g_labels), format_even(r.even_labels),
                    format_exclusions(r.tag, r.excluded_values)});
  }
  return format_columns(rows);
}

inline std::string type_two_table(const std::vector<TypicalRep>& reps) {
  std::vector<std::vector<std::string>> rows{{"algebra", "g_labels", "g0_labels", "typicality"}};
  for (const auto& r : reps) {
    if (r.algebra.type_one()) continue;
    rows.push_back({to_string(r.algebra), format_labels(r.g_labels), format_even(r.even_labels), format_exclusions(r.tag, r.excluded_values)});
  }
  return format_columns(rows);
}

/// Fits value(m) = m + c over the sample ranks; "varies" if no single c works.
inline std::string affine_in_m(const std::vector<std::pair<long, Rational>>& samples, bool with_m) {
  if (samples.empty()) return "-";
  const Rational c = samples.front().second - (with_m ? samples.front().first : 0);
  for (const auto& [m, v] : samples)
    if (v - (with_m ? m : 0) != c) return "varies";
  if (!with_m) return to_string(c);
  if (c == 0) return "m";
  return c > 0 ? "m+" + to_string(c) : "m" + to_string(c);
}

/// Shift 2(rho1,h)/(h,h) and its integer part b per type II family, recomputed
/// over ranks m, n <= 4 (and several alpha for D(2|1;a)) and summarized.
inline std::string shift_table(const std::function<Shift(const AlgebraId&)>& shift_of) {
  struct Row {
    std::string family, algebra;
    std::vector<AlgebraId> ids;
    bool with_m;
  };
  std::vector<Row> rows;
  Row b{"B(m|n)", "osp(2m+1|2n)", {}, true}, b0{"B(0|n)", "osp(1|2n)", {}, false}, d{"D(m|n)", "osp(2m|2n)", {}, true};
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) b.ids.push_back(AlgebraId::osp(2 * m + 1, n));
  for (int n = 1; n <= 4; ++n) b0.ids.push_back(AlgebraId::osp(1, n));
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      if (!(m == 2 && n == 1)) d.ids.push_back(AlgebraId::osp(2 * m, n));
  Row a{"D(2|1;a)", "osp(4|2;a)",
        {AlgebraId::d21a(std::nullopt), AlgebraId::d21a(Rational(1)), AlgebraId::d21a(Rational(1, 3)), AlgebraId::d21a(Rational(-2, 5))},
        false};
  rows = {b, b0, d, a, {"F(4)", "F(4)", {AlgebraId::f4()}, false}, {"G(3)", "G(3)", {AlgebraId::g3()}, false}};

  std::vector<std::vector<std::string>> out{{"family", "algebra", "shift", "b"}};
  for (const auto& r : rows) {
    std::vector<std::pair<long, Rational>> sh, bb;
    for (const auto& id : r.ids) {
      const Shift s = shift_of(id);
      sh.emplace_back(id.orth_rank(), s.value);
      bb.emplace_back(id.orth_rank(), Rational(s.b));
    }
    out.push_back({r.family, r.algebra, affine_in_m(sh, r.with_m), affine_in_m(bb, r.with_m)});
  }
  return format_columns(out);
}

}  // namespace superdim
