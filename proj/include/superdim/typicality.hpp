#pragma once

// Highest weights, the typicality criterion and the typical dimension
//   dim V = 2^N1 * d_0(L - rho1),
// where d_0 is the Weyl dimension of g_0 and L - rho1 differs from L only in
// the hidden label (shifted by 2(rho1,h)/(h,h)).

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superdim/rootdata.hpp"
#include "superdim/weyldim.hpp"

namespace superdim {

struct HighestWeight {
  std::shared_ptr<const RootSystem> rs;
  std::vector<AffineScalar> g_labels;
  Weight coords;
  std::optional<AffineScalar> ls0;  // hidden label, type II only
};

struct ShiftedWeight {
  std::vector<LabelVector> even_labels;
};

enum class Verdict { Typical, Atypical, Conditional };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Typical: return "yes";
    case Verdict::Atypical: return "no";
    case Verdict::Conditional: return "conditional";
  }
  return "?";
}

struct TypicalityReport {
  Verdict verdict = Verdict::Typical;
  std::vector<Root> vanishing_roots;
  Param tag = Param::None;
  std::vector<Rational> excluded_values;     // sorted, distinct
  std::vector<Rational> domain_exclusions;   // alpha in {-1, 0} for D(2|1;a)
};

namespace detail {

inline bool nonnegative_integer(const AffineScalar& x) {
  return x.is_constant() && is_integer(x.constant()) && x.constant() >= 0;
}

inline std::vector<std::vector<Rational>> label_rows(const RootSystem& rs, const std::vector<Weight>& roots) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : roots) {
    std::vector<Rational> row(rs.dim());
    for (std::size_t k = 0; k < rs.dim(); ++k) row[k] = pairing(rs, unit(rs.dim(), k), a).value();
    rows.push_back(std::move(row));
  }
  for (std::size_t g : rs.gauge) {
    std::vector<Rational> row(rs.dim());
    row[g] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Coordinates from g-labels for a parameter-free form.
inline Weight solve_coords(const RootSystem& rs, const std::vector<AffineScalar>& labels) {
  std::vector<Weight> roots;
  std::vector<AffineScalar> rhs;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    roots.push_back(rs.simple[i].weight);
    rhs.push_back(labels[i] * rs.label_norm[i]);
  }
  for (std::size_t g = 0; g < rs.gauge.size(); ++g) rhs.emplace_back(0);
  auto sol = solve_unique(label_rows(rs, roots), rhs);
  if (!sol) throw ValidationError("labels are inconsistent for " + to_string(rs.id));
  return *sol;
}

/// D(2|1;a) with symbolic a: coordinates equal the g_0 labels (a1, l2, l3), and
/// l1 = ((1+a)a1 + l2 + a*l3)/2, so a1 = 2c - l2 = 2s - l3 for l1 = c + s*a.
inline Weight d21a_coords(const std::vector<AffineScalar>& labels) {
  const Rational l2 = labels[1].value();
  const Rational l3 = labels[2].value();
  const Rational a_from_constant = 2 * labels[0].constant() - l2;
  const Rational a_from_slope = 2 * labels[0].slope() - l3;
  if (a_from_constant != a_from_slope)
    throw ValidationError("odd label is not of the form ((1+a)*l + l2 + a*l3)/2 for osp(4|2;a)");
  return {AffineScalar(a_from_constant), AffineScalar(l2), AffineScalar(l3)};
}

inline std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Highest weight from its Dynkin labels; validates dominance and integrality.
inline HighestWeight from_g_labels(std::shared_ptr<const RootSystem> rs, std::vector<AffineScalar> labels) {
  if (labels.size() != rs->rank())
    throw ValidationError(to_string(rs->id) + " expects " + std::to_string(rs->rank()) + " labels, got " + std::to_string(labels.size()));
  const Param allowed = rs->param();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].is_constant()) continue;
    if (i != rs->s) throw ParamMisuse("label " + std::to_string(i + 1) + " must not carry a parameter");
    if (labels[i].param() != allowed) throw ParamMisuse("parameter '" + std::string(1, param_letter(labels[i].param())) + "' is not allowed for " + to_string(rs->id));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i == rs->s) continue;
    if (!detail::nonnegative_integer(labels[i]))
      throw NonDominant("even label " + std::to_string(i + 1) + " = " + to_string(labels[i]) + " is not a non-negative integer");
  }

  HighestWeight hw;
  hw.coords = rs->id.symbolic_alpha() ? detail::d21a_coords(labels) : detail::solve_coords(*rs, labels);
  if (labels_of(*rs, hw.coords) != labels) throw ValidationError("labels are inconsistent for " + to_string(rs->id));
  if (rs->hidden) {
    AffineScalar h = hidden_label_of(*rs, hw.coords);
    if (!detail::nonnegative_integer(h)) throw NonIntegralHidden("hidden label " + to_string(h) + " is not a non-negative integer");
    hw.ls0 = std::move(h);
  }
  hw.g_labels = std::move(labels);
  hw.rs = std::move(rs);
  return hw;
}

inline HighestWeight from_g_labels(const RootSystem& rs, std::vector<AffineScalar> labels) {
  return from_g_labels(std::make_shared<const RootSystem>(rs), std::move(labels));
}

/// Highest weight from g_0 labels, one vector per even factor (the hidden root's
/// label sits in its factor slot). For type I the odd label is the free parameter t.
inline HighestWeight from_even_labels(std::shared_ptr<const RootSystem> rs, const std::vector<LabelVector>& even) {
  if (even.size() != rs->even_factors.size())
    throw ValidationError(to_string(rs->id) + " has " + std::to_string(rs->even_factors.size()) + " even factors");
  std::vector<AffineScalar> g(rs->rank());
  std::optional<Rational> hidden;
  for (std::size_t f = 0; f < even.size(); ++f) {
    const auto& slots = rs->even_factors[f].slots;
    if (even[f].size() != slots.size())
      throw ValidationError("factor " + to_string(rs->even_factors[f].factor) + " expects " + std::to_string(slots.size()) + " labels");
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const Rational& v = even[f][k];
      if (!is_integer(v) || v < 0) throw NonDominant("even label " + to_string(v) + " is not a non-negative integer");
      if (slots[k] == kHiddenSlot) hidden = v;
      else g[static_cast<std::size_t>(slots[k])] = v;
    }
  }
  if (rs->type_one()) {
    g[rs->s] = AffineScalar::parameter(Param::OddLabel);
    return from_g_labels(std::move(rs), std::move(g));
  }

  Weight coords;
  if (rs->id.family() == Family::D21A) {
    coords = {AffineScalar(*hidden), g[1], g[2]};
  } else {
    std::vector<Weight> roots;
    std::vector<AffineScalar> rhs;
    for (std::size_t i = 0; i < rs->rank(); ++i) {
      if (i == rs->s) continue;
      roots.push_back(rs->simple[i].weight);
      rhs.push_back(g[i] * rs->label_norm[i]);
    }
    roots.push_back(rs->hidden->weight);
    rhs.push_back(AffineScalar(*hidden) * rs->hidden_norm);
    for (std::size_t k = 0; k < rs->gauge.size(); ++k) rhs.emplace_back(0);
    auto sol = detail::solve_unique(detail::label_rows(*rs, roots), rhs);
    if (!sol) throw std::logic_error("even labels do not determine a weight");
    coords = *sol;
  }
  g[rs->s] = divide(pairing(*rs, coords, rs->simple[rs->s].weight), rs->label_norm[rs->s]);
  return from_g_labels(std::move(rs), std::move(g));
}

inline HighestWeight from_even_labels(const RootSystem& rs, const std::vector<LabelVector>& even) {
  return from_even_labels(std::make_shared<const RootSystem>(rs), even);
}

/// Weight with arbitrary coordinates and no dominance checks. For tests and
/// formal evaluations only.
inline HighestWeight formal_weight(std::shared_ptr<const RootSystem> rs, Weight coords) {
  HighestWeight hw;
  hw.g_labels = labels_of(*rs, coords);
  if (rs->hidden) hw.ls0 = hidden_label_of(*rs, coords);
  hw.coords = std::move(coords);
  hw.rs = std::move(rs);
  return hw;
}

/// g_0 labels of the weight, one vector per even factor.
inline std::vector<LabelVector> even_labels(const HighestWeight& hw) {
  std::vector<LabelVector> out;
  for (const auto& f : hw.rs->even_factors) {
    LabelVector v;
    for (int slot : f.slots) v.push_back(slot == kHiddenSlot ? hw.ls0->value() : hw.g_labels[static_cast<std::size_t>(slot)].value());
    out.push_back(std::move(v));
  }
  return out;
}

inline ShiftedWeight shifted(const HighestWeight& hw) {
  ShiftedWeight sw{even_labels(hw)};
  if (!hw.rs->hidden) return sw;
  const Rational sh = shift(*hw.rs).value;
  for (std::size_t f = 0; f < sw.even_labels.size(); ++f) {
    const auto& slots = hw.rs->even_factors[f].slots;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slots[k] == kHiddenSlot) sw.even_labels[f][k] -= sh;
  }
  return sw;
}

/// 2^N1 times the g_0 Weyl dimension at the shifted labels.
inline Rational typical_dim(const HighestWeight& hw) {
  std::vector<SimpleFactor> factors;
  for (const auto& f : hw.rs->even_factors) factors.push_back(f.factor);
  const ShiftedWeight sw = shifted(hw);
  return Rational(pow2(static_cast<unsigned>(hw.rs->N1))) * semisimple_dim(factors, sw.even_labels);
}

/// typical_dim evaluated straight from g_0 labels (no weight is built and
/// nothing is validated); the hot path of the enumeration.
inline Rational typical_dim_even(const RootSystem& rs, const Rational& shift_value, std::vector<LabelVector> even) {
  Rational d(pow2(static_cast<unsigned>(rs.N1)));
  for (std::size_t f = 0; f < even.size(); ++f) {
    const auto& slots = rs.even_factors[f].slots;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slots[k] == kHiddenSlot) even[f][k] -= shift_value;
    d *= weyl_dim(rs.even_factors[f].factor, even[f]);
  }
  return d;
}

inline Rational typical_dim_even(const RootSystem& rs, std::vector<LabelVector> even) {
  const Rational sh = rs.hidden ? shift(rs).value : Rational(0);
  return typical_dim_even(rs, sh, std::move(even));
}

/// Same quantity straight from the root data: 2^N1 prod (L+rho, a)/(rho0, a)
/// over positive even roots.
inline Rational typical_dim_direct(const HighestWeight& hw) {
  const RootSystem& rs = *hw.rs;
  const Weight lr = add(hw.coords, rs.rho());
  Rational d(pow2(static_cast<unsigned>(rs.N1)));
  for (const auto& a : rs.pos_even) d *= exact_ratio(pairing(rs, lr, a.weight), pairing(rs, rs.rho0, a.weight));
  return d;
}

/// (L + rho, a) for every positive odd root whose double is not an even root.
inline TypicalityReport is_typical(const HighestWeight& hw) {
  const RootSystem& rs = *hw.rs;
  const Weight lr = add(hw.coords, rs.rho());
  TypicalityReport rep;
  std::vector<Rational> zeros;
  for (std::size_t k : rs.typicality_roots) {
    const AffineScalar x = pairing(rs, lr, rs.pos_odd[k].weight);
    const ZeroSolution z = solve_zero(x);
    if (z.kind == ZeroSolution::Kind::Identically) rep.vanishing_roots.push_back(rs.pos_odd[k]);
    else if (z.kind == ZeroSolution::Kind::Unique) {
      zeros.push_back(z.value);
      rep.tag = x.param();
    }
  }
  if (rs.id.symbolic_alpha()) {
    rep.tag = Param::Alpha;
    rep.domain_exclusions = {Rational(-1), Rational(0)};
    std::erase_if(zeros, [](const Rational& v) { return v == 0 || v == -1; });
  }
  rep.excluded_values = detail::sorted_unique(std::move(zeros));
  if (!rep.vanishing_roots.empty()) {
    rep.verdict = Verdict::Atypical;
    rep.excluded_values.clear();
  } else if (rep.tag != Param::None) {
    rep.verdict = Verdict::Conditional;
  } else {
    rep.verdict = Verdict::Typical;
  }
  return rep;
}

struct SupplementaryHit {
  Root root;                     // Lambda + rho is orthogonal to it
  std::optional<Rational> alpha; // symbolic D(2|1;a): the only alpha where the condition holds
};

/// Below (and at) the monotone region l_s^0 >= b, a finite-dimensional highest
/// weight must satisfy extra conditions that force Lambda + rho onto some odd
/// root. Returns that root when the conditions hold, nothing otherwise.
inline std::optional<SupplementaryHit> supplementary_check(const HighestWeight& hw) {
  const RootSystem& rs = *hw.rs;
  if (!rs.hidden) throw NotTypeII(to_string(rs.id) + " is of type I");
  const Integer b = shift(rs).b;
  const Integer v = numerator_of(hw.ls0->value());
  if (v > b) throw OutOfRange("hidden label " + to_string(v) + " exceeds b = " + to_string(b));
  const long lv = v.convert_to<long>();
  auto L = [&](std::size_t i) { return hw.g_labels[i].value(); };
  auto by_weight = [&](const Weight& w) -> std::optional<SupplementaryHit> {
    for (const auto& r : rs.pos_odd)
      if (r.weight == w) return SupplementaryHit{r, std::nullopt};
    throw std::logic_error("supplementary root missing from the root system");
  };
  auto by_expansion = [&](std::vector<long> e) -> std::optional<SupplementaryHit> {
    auto k = find_odd_root(rs, e);
    if (!k) throw std::logic_error("supplementary root missing from the root system");
    return SupplementaryHit{rs.pos_odd[*k], std::nullopt};
  };
  auto zero_range = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i <= to; ++i)
      if (L(i) != 0) return false;
    return true;
  };

  switch (rs.id.family()) {
    case Family::OSP: {
      const std::size_t n = static_cast<std::size_t>(rs.id.second());
      const long m = rs.id.orth_rank();
      if (m == 0) return std::nullopt;
      const std::size_t dim = rs.dim();
      auto dn_pm_e = [&](long k, int sign) {  // d_n + sign * e_k, k 1-based
        Weight w = detail::unit(dim, n - 1);
        w[n + static_cast<std::size_t>(k) - 1] += AffineScalar(sign);
        return w;
      };
      const std::size_t last = n + static_cast<std::size_t>(m) - 1;
      if (rs.id.is_osp_odd()) {
        if (lv < m) {
          const long k = lv + 1;
          if (zero_range(n + static_cast<std::size_t>(k) - 1, last)) return by_weight(dn_pm_e(k, -1));
          return std::nullopt;
        }
        if (L(last) == 0) return by_weight(dn_pm_e(m, +1));
        return std::nullopt;
      }
      if (lv < m - 1) {
        const long k = lv + 1;
        if (zero_range(n + static_cast<std::size_t>(k) - 1, last)) return by_weight(dn_pm_e(k, -1));
        return std::nullopt;
      }
      if (lv == m - 1) {
        if (L(last - 1) == L(last)) return by_weight(dn_pm_e(m, -1));
        return std::nullopt;
      }
      if (L(last - 1) == 0 && L(last) == 0) return by_weight(dn_pm_e(m - 1, +1));
      return std::nullopt;
    }
    case Family::D21A: {
      if (lv == 0) {
        if (L(1) == 0 && L(2) == 0) return by_expansion({1, 0, 0});
        return std::nullopt;
      }
      if (lv == 1) {
        const Rational alpha0 = (L(1) + 1) / (L(2) + 1);
        if (rs.id.alpha()) {
          if (*rs.id.alpha() == alpha0) return by_expansion({1, 1, 0});
          return std::nullopt;
        }
        auto hit = by_expansion({1, 1, 0});
        hit->alpha = alpha0;
        return hit;
      }
      return std::nullopt;
    }
    case Family::F4:
      if (lv == 0 && zero_range(1, 3)) return by_expansion({1, 0, 0, 0});
      if (lv == 2 && L(1) == 0 && L(3) == 0) return by_expansion({1, 1, 1, 0});
      if (lv == 3 && L(1) == 2 * L(3) + 1) return by_expansion({1, 1, 1, 1});
      return std::nullopt;
    case Family::G3:
      if (lv == 0 && L(1) == 0 && L(2) == 0) return by_expansion({1, 0, 0});
      if (lv == 2 && L(1) == 0) return by_expansion({1, 1, 1});
      if (lv == 3 && L(1) == 0 && L(2) == 0) return by_expansion({1, 3, 1});
      return std::nullopt;
    case Family::SL: break;
  }
  return std::nullopt;
}

/// Whether a type II weight is the highest weight of a finite-dimensional
/// irrep. Always true in the region l_s^0 >= b. For symbolic D(2|1;a) with
/// l_1^0 = 1 the answer is "only at hit->alpha", reported through `alpha`.
struct Admissibility {
  bool admissible = true;
  std::optional<Rational> alpha;
};

inline Admissibility strip_admissibility(const HighestWeight& hw) {
  if (!hw.rs->hidden) return {};
  const Integer b = shift(*hw.rs).b;
  if (numerator_of(hw.ls0->value()) >= b) return {};
  auto hit = supplementary_check(hw);
  if (!hit) return {false, std::nullopt};
  return {true, hit->alpha};
}

}  // namespace superdim
