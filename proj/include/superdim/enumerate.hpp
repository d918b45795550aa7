#pragma once

// Enumeration of typical irreducible representations of a given dimension.
//
// In the region l_s^0 >= b every shifted label is >= -1/2 and the typical
// dimension is strictly increasing in each g_0 label, so a branch-and-bound
// walk over the flattened g_0 labels with a dimension cutoff is exhaustive.
// The finite strip l_s^0 < b is scanned separately; any typical weight found
// there is recorded as a violation (it should not exist) and still reported.

#include <algorithm>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "superdim/detail/monotone_search.hpp"
#include "superdim/typicality.hpp"

namespace superdim {

struct TypicalRep {
  AlgebraId algebra = AlgebraId::f4();
  std::vector<AffineScalar> g_labels;
  std::vector<LabelVector> even_labels;
  std::optional<Rational> ls0;
  Integer dim;
  std::size_t N1 = 0;
  Param tag = Param::None;
  std::vector<Rational> excluded_values;
  std::vector<Rational> domain_exclusions;
};

struct StripStats {
  long points = 0;       // weights with l_s^0 < b inside the scan box
  long admissible = 0;   // of those, highest weights of finite-dimensional irreps
  long atypical = 0;     // of those, atypical (expected: all of them)
  std::vector<std::string> violations;
};

struct BoundEntry {
  AlgebraId algebra = AlgebraId::f4();
  Integer bound;
  bool candidate = false;
};

struct SearchReport {
  std::size_t candidates_considered = 0;
  std::vector<TypicalRep> reps;
  std::vector<BoundEntry> bound_log;
  StripStats strip;
};

struct SearchOptions {
  unsigned workers = 1;
  bool scan_strip = true;
};

// ---------------------------------------------------------------------------
// Canonical ordering

inline bool labels_less(const std::vector<AffineScalar>& x, const std::vector<AffineScalar>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const AffineScalar& a, const AffineScalar& b) { return order(a, b) < 0; });
}

inline bool canonical_less(const TypicalRep& x, const TypicalRep& y) {
  const std::string ax = to_string(x.algebra);
  const std::string ay = to_string(y.algebra);
  if (ax != ay) return ax < ay;
  return labels_less(x.g_labels, y.g_labels);
}

inline void canonical_sort(std::vector<TypicalRep>& reps) { std::sort(reps.begin(), reps.end(), canonical_less); }

// ---------------------------------------------------------------------------
// Lower bounds

/// A g_0 weight at which a family's lower bound is attained, with the closed
/// form it must reproduce (when the family has one for that corner).
struct Corner {
  std::vector<LabelVector> even;
  Rational dim;
  std::optional<Integer> closed_form;
};

namespace detail {

inline std::vector<LabelVector> zero_even(const RootSystem& rs) {
  std::vector<LabelVector> v;
  for (const auto& f : rs.even_factors) v.emplace_back(f.slots.size(), Rational(0));
  return v;
}

inline void set_hidden(const RootSystem& rs, std::vector<LabelVector>& even, const Rational& value) {
  for (std::size_t f = 0; f < even.size(); ++f)
    for (std::size_t k = 0; k < even[f].size(); ++k)
      if (rs.even_factors[f].slots[k] == kHiddenSlot) even[f][k] = value;
}

/// Label slot of g-index i inside the even factors.
inline std::pair<std::size_t, std::size_t> locate(const RootSystem& rs, int g_index) {
  for (std::size_t f = 0; f < rs.even_factors.size(); ++f)
    for (std::size_t k = 0; k < rs.even_factors[f].slots.size(); ++k)
      if (rs.even_factors[f].slots[k] == g_index) return {f, k};
  throw std::logic_error("label index not in the even part");
}

inline Integer exact_integer(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("closed form is not an integer");
  return numerator_of(r);
}

}  // namespace detail

inline std::vector<Corner> corners(const RootSystem& rs) {
  const AlgebraId& id = rs.id;
  std::vector<Corner> out;
  auto add = [&](std::vector<LabelVector> even, std::optional<Integer> closed) {
    Rational d = typical_dim_even(rs, even);
    out.push_back({std::move(even), std::move(d), std::move(closed)});
  };
  if (id.type_one()) {
    add(detail::zero_even(rs), pow2(static_cast<unsigned>(rs.N1)));
    return out;
  }
  const long b = shift(rs).b.convert_to<long>();
  switch (id.family()) {
    case Family::OSP: {
      const long m = id.orth_rank();
      const long n = id.second();
      const int nn = static_cast<int>(n);
      if (m == 0) {
        // Smallest non-trivial irrep: one unit label at a time; the first is 2n+1.
        for (std::size_t k = 0; k < rs.even_factors[0].slots.size(); ++k) {
          auto e = detail::zero_even(rs);
          e[0][k] = 1;
          add(std::move(e), k == 0 ? std::optional<Integer>(Integer(2 * n + 1)) : std::nullopt);
        }
        return out;
      }
      auto up = detail::zero_even(rs);
      detail::set_hidden(rs, up, b + 1);
      if (id.is_osp_odd()) {
        add(up, pow2(static_cast<unsigned>(2 * m * n)) * binomial(2 * n + 1, n));
        auto spin = detail::zero_even(rs);
        detail::set_hidden(rs, spin, b);
        auto [f, k] = detail::locate(rs, nn + static_cast<int>(m) - 1);
        spin[f][k] = 1;
        add(spin, pow2(static_cast<unsigned>(m * (2 * n + 1))));
      } else {
        const Rational closed = Rational(pow2(static_cast<unsigned>(2 * m * n + 1))) * Rational(binomial(2 * n + 1, n - 1)) / n;
        add(up, detail::exact_integer(closed));
        for (int fork : {nn + static_cast<int>(m) - 2, nn + static_cast<int>(m) - 1}) {
          auto spin = detail::zero_even(rs);
          detail::set_hidden(rs, spin, b);
          auto [f, k] = detail::locate(rs, fork);
          spin[f][k] = 1;
          add(spin, pow2(static_cast<unsigned>(m * (2 * n + 1) - 1)));
        }
      }
      return out;
    }
    case Family::D21A:
    case Family::F4:
    case Family::G3: {
      const long closed = id.family() == Family::D21A ? 16 : id.family() == Family::F4 ? 256 : 64;
      auto e = detail::zero_even(rs);
      detail::set_hidden(rs, e, b);
      add(e, Integer(closed));
      return out;
    }
    case Family::SL: break;
  }
  return out;
}

/// Lower bound on the dimension of any typical irrep other than the trivial
/// one: the minimum over the family's corner weights. Each corner's value is
/// checked against its closed form.
inline Integer min_typical_dim_bound(const RootSystem& rs) {
  std::optional<Rational> best;
  for (const Corner& c : corners(rs)) {
    if (c.closed_form && c.dim != Rational(*c.closed_form))
      throw std::logic_error("corner dimension " + to_string(c.dim) + " disagrees with closed form " + to_string(*c.closed_form) +
                             " for " + to_string(rs.id));
    if (!best || c.dim < *best) best = c.dim;
  }
  if (!best || !is_integer(*best)) throw std::logic_error("no integral corner bound for " + to_string(rs.id));
  return numerator_of(*best);
}

inline Integer min_typical_dim_bound(const AlgebraId& id) { return min_typical_dim_bound(build(id)); }

struct CandidateScan {
  std::vector<AlgebraId> candidates;
  std::vector<BoundEntry> log;
};

/// All algebra instances whose bound does not exceed `target`. Each family is
/// walked along increasing ranks; the walk stops at the first instance over
/// the target, which is logged as the certificate for the rest of the row.
inline CandidateScan scan_candidates(const Integer& target) {
  CandidateScan scan;
  auto consider = [&](const AlgebraId& id) {
    const Integer bound = min_typical_dim_bound(id);
    const bool ok = bound <= target;
    scan.log.push_back({id, bound, ok});
    if (ok) scan.candidates.push_back(id);
    return bound;
  };
  // Walks one rank direction, asserting the bounds never decrease.
  auto row = [&](auto make, int from) {
    std::optional<Integer> previous;
    bool any = false;
    for (int k = from;; ++k) {
      const Integer bound = consider(make(k));
      if (previous && bound < *previous) throw std::logic_error("bounds decrease along a family row");
      previous = bound;
      if (bound > target) return any;
      any = true;
    }
  };

  for (int q = 1;; ++q)
    if (!row([q](int p) { return AlgebraId::sl(p, q); }, q == 1 ? 2 : q)) break;
  row([](int n) { return AlgebraId::osp(2, n); }, 2);
  for (int n = 1;; ++n)
    if (!row([n](int m) { return AlgebraId::osp(2 * m + 1, n); }, 1)) break;
  row([](int n) { return AlgebraId::osp(1, n); }, 1);
  for (int n = 1;; ++n)
    if (!row([n](int m) { return AlgebraId::osp(2 * m, n); }, n == 1 ? 3 : 2)) break;
  consider(AlgebraId::d21a(std::nullopt));
  consider(AlgebraId::f4());
  consider(AlgebraId::g3());
  return scan;
}

inline std::vector<AlgebraId> algebra_candidates(const Integer& target) { return scan_candidates(target).candidates; }

// ---------------------------------------------------------------------------
// Search

namespace detail {

/// Flattened view of the g_0 labels of a root system.
struct Flattening {
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (factor, position)
  std::vector<long> floor;
  std::optional<std::size_t> hidden;                      // flattened index of the hidden label

  std::vector<LabelVector> unflatten(const RootSystem& rs, const std::vector<long>& x) const {
    std::vector<LabelVector> even;
    for (const auto& f : rs.even_factors) even.emplace_back(f.slots.size());
    for (std::size_t i = 0; i < x.size(); ++i) even[slots[i].first][slots[i].second] = x[i];
    return even;
  }
};

inline Flattening flatten(const RootSystem& rs) {
  Flattening fl;
  const long b = rs.hidden ? shift(rs).b.convert_to<long>() : 0;
  for (std::size_t f = 0; f < rs.even_factors.size(); ++f)
    for (std::size_t k = 0; k < rs.even_factors[f].slots.size(); ++k) {
      const bool h = rs.even_factors[f].slots[k] == kHiddenSlot;
      if (h) fl.hidden = fl.slots.size();
      fl.slots.emplace_back(f, k);
      fl.floor.push_back(h ? b : 0);
    }
  return fl;
}

inline TypicalRep make_rep(const HighestWeight& hw, const TypicalityReport& rep) {
  TypicalRep out;
  out.algebra = hw.rs->id;
  out.g_labels = hw.g_labels;
  out.even_labels = even_labels(hw);
  if (hw.ls0) out.ls0 = hw.ls0->value();
  const Rational d = typical_dim(hw);
  if (d != typical_dim_direct(hw)) throw std::logic_error("dimension routes disagree for " + to_string(hw.rs->id));
  out.dim = exact_integer(d);
  out.N1 = hw.rs->N1;
  out.tag = rep.tag;
  out.excluded_values = rep.excluded_values;
  out.domain_exclusions = rep.domain_exclusions;
  return out;
}

inline std::string describe(const RootSystem& rs, const std::vector<LabelVector>& even) {
  std::string s = to_string(rs.id) + " g0 ";
  for (std::size_t f = 0; f < even.size(); ++f) {
    s += f ? "-(" : "(";
    for (std::size_t k = 0; k < even[f].size(); ++k) s += (k ? "," : "") + to_string(even[f][k]);
    s += ")";
  }
  return s;
}

/// The strip l_s^0 < b inside the box of per-label cutoffs of the monotone
/// region. Admissible weights there must be atypical.
inline void scan_strip(const std::shared_ptr<const RootSystem>& rs, const Flattening& fl, const Rational& limit,
                       const Rational& shift_value, std::vector<TypicalRep>& found, StripStats& stats) {
  if (!fl.hidden) return;
  const long b = fl.floor[*fl.hidden];
  if (b == 0) return;
  auto value = [&](const std::vector<long>& x) { return typical_dim_even(*rs, shift_value, fl.unflatten(*rs, x)); };
  if (value(fl.floor) > limit) return;
  std::vector<long> box(fl.floor.size(), 0);
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (k == *fl.hidden) {
      box[k] = b - 1;
      continue;
    }
    std::vector<long> x = fl.floor;
    while (true) {
      ++x[k];
      if (value(x) > limit) break;
      if (x[k] > detail::MonotoneSearch::kMaxSteps) throw std::logic_error("strip box did not close");
    }
    box[k] = x[k] - 1;
  }

  std::vector<long> x(box.size(), 0);
  while (true) {
    ++stats.points;
    const auto even = fl.unflatten(*rs, x);
    HighestWeight hw = from_even_labels(rs, even);
    const Admissibility adm = strip_admissibility(hw);
    if (adm.admissible) {
      ++stats.admissible;
      HighestWeight probe = hw;
      if (adm.alpha) probe = from_even_labels(std::make_shared<const RootSystem>(build(AlgebraId::d21a(*adm.alpha))), even);
      const TypicalityReport rep = is_typical(probe);
      if (rep.verdict == Verdict::Atypical) {
        ++stats.atypical;
      } else {
        stats.violations.push_back(describe(*probe.rs, even) + " is typical below the shift");
        if (Rational(typical_dim(probe)) == limit) found.push_back(make_rep(probe, rep));
      }
    }
    std::size_t k = 0;
    while (k < x.size() && x[k] == box[k]) x[k++] = 0;
    if (k == x.size()) break;
    ++x[k];
  }
}

}  // namespace detail

/// Typical irreps of one algebra with dimension exactly `target`, with search statistics.
inline SearchReport search_algebra(const AlgebraId& id, const Integer& target, const SearchOptions& opt = {}) {
  auto rs = std::make_shared<const RootSystem>(build(id));
  const detail::Flattening fl = detail::flatten(*rs);
  const Rational limit(target);
  const Rational shift_value = rs->hidden ? shift(*rs).value : Rational(0);
  detail::MonotoneSearch search(fl.floor, limit);

  SearchReport report;
  report.candidates_considered = 1;
  std::mutex mu;
  std::exception_ptr failure;

  auto work = [&](const std::vector<long>& firsts) {
    std::vector<TypicalRep> local;
    try {
      auto value = [&](const std::vector<long>& x) { return typical_dim_even(*rs, shift_value, fl.unflatten(*rs, x)); };
      auto visit = [&](const std::vector<long>& x) {
        if (value(x) != limit) return;
        HighestWeight hw = from_even_labels(rs, fl.unflatten(*rs, x));
        const TypicalityReport rep = is_typical(hw);
        if (rep.verdict != Verdict::Atypical) local.push_back(detail::make_rep(hw, rep));
      };
      if (fl.floor.empty()) {
        search.run(value, visit);
      } else {
        for (long f : firsts) search.run(value, visit, &f);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(mu);
    for (auto& r : local) report.reps.push_back(std::move(r));
  };

  std::vector<long> firsts;
  if (!fl.floor.empty())
    firsts = search.first_level([&](const std::vector<long>& x) { return typical_dim_even(*rs, shift_value, fl.unflatten(*rs, x)); });
  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1 || firsts.size() <= 1) {
    work(firsts);
  } else {
    std::vector<std::vector<long>> parts(workers);
    for (std::size_t i = 0; i < firsts.size(); ++i) parts[i % workers].push_back(firsts[i]);
    std::vector<std::thread> threads;
    for (auto& p : parts)
      if (!p.empty()) threads.emplace_back(work, std::cref(p));
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (opt.scan_strip) detail::scan_strip(rs, fl, limit, shift_value, report.reps, report.strip);
  canonical_sort(report.reps);
  return report;
}

inline std::vector<TypicalRep> enumerate_typical(const AlgebraId& id, const Integer& target, const SearchOptions& opt = {}) {
  return search_algebra(id, target, opt).reps;
}

/// Union over all candidate algebras, canonically ordered.
inline SearchReport enumerate_all(const Integer& target, const SearchOptions& opt = {}) {
  SearchReport report;
  const CandidateScan scan = scan_candidates(target);
  report.bound_log = scan.log;
  report.candidates_considered = scan.candidates.size();
  for (const AlgebraId& id : scan.candidates) {
    SearchReport one = search_algebra(id, target, opt);
    for (auto& r : one.reps) report.reps.push_back(std::move(r));
    report.strip.points += one.strip.points;
    report.strip.admissible += one.strip.admissible;
    report.strip.atypical += one.strip.atypical;
    for (auto& v : one.strip.violations) report.strip.violations.push_back(std::move(v));
  }
  canonical_sort(report.reps);
  return report;
}

// ---------------------------------------------------------------------------
// Conjugates

struct MergeResult {
  std::vector<TypicalRep> classes;
  std::vector<std::pair<TypicalRep, TypicalRep>> merged;  // (kept, dropped)
};

inline std::vector<Rational> concatenated(const std::vector<LabelVector>& even) {
  std::vector<Rational> v;
  for (const auto& f : even) v.insert(v.end(), f.begin(), f.end());
  return v;
}

/// Identifies rows of the same sl(p|q) whose g_0 labels are mirror images
/// (the diagram flip). Other families have no such symmetry here.
inline MergeResult merge_conjugates(const std::vector<TypicalRep>& reps) {
  MergeResult out;
  std::vector<bool> dropped(reps.size(), false);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (dropped[i]) continue;
    out.classes.push_back(reps[i]);
    if (reps[i].algebra.family() != Family::SL) continue;
    std::vector<Rational> mirror = concatenated(reps[i].even_labels);
    std::reverse(mirror.begin(), mirror.end());
    if (mirror == concatenated(reps[i].even_labels)) continue;
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (dropped[j] || !(reps[j].algebra == reps[i].algebra)) continue;
      if (concatenated(reps[j].even_labels) == mirror) {
        dropped[j] = true;
        out.merged.emplace_back(reps[i], reps[j]);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// osp(1|2n) versus so(2n+1)

struct B0nReport {
  int n = 1;
  Integer target;
  std::vector<LabelVector> osp_hits;        // g_0 labels of osp(1|2n) irreps of dimension target
  std::vector<LabelVector> b_hits;          // B_n labels of dimension target
  std::vector<LabelVector> b_hits_even;     // those with even last label, last label halved
  bool agree = false;
};

/// Typical osp(1|2n) irreps of a given dimension correspond to so(2n+1) irreps
/// with even last label (halved). Both sides are computed independently.
inline B0nReport b0n_cross_check(int n, const Integer& target) {
  B0nReport r;
  r.n = n;
  r.target = target;
  for (const auto& rep : enumerate_typical(AlgebraId::osp(1, n), target)) r.osp_hits.push_back(rep.even_labels[0]);
  r.b_hits = enumerate_labels({Series::B, n}, target);
  for (const auto& v : r.b_hits) {
    if (!is_integer(v.back() / 2)) continue;
    LabelVector w = v;
    w.back() /= 2;
    r.b_hits_even.push_back(std::move(w));
  }
  std::sort(r.osp_hits.begin(), r.osp_hits.end());
  std::sort(r.b_hits_even.begin(), r.b_hits_even.end());
  r.agree = r.osp_hits == r.b_hits_even;
  return r;
}

/// Multisets of dimensions over the label box [0, box]^n on both sides.
inline std::pair<std::vector<Integer>, std::vector<Integer>> b0n_box_dims(int n, long box) {
  const RootSystem rs = build(AlgebraId::osp(1, n));
  const SimpleFactor bn{Series::B, n};
  std::vector<Integer> osp, so;
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  while (true) {
    LabelVector labels(x.begin(), x.end());
    osp.push_back(detail::exact_integer(typical_dim_even(rs, {labels})));
    LabelVector doubled = labels;
    doubled.back() *= 2;
    so.push_back(detail::exact_integer(weyl_dim(bn, doubled)));
    std::size_t k = 0;
    while (k < x.size() && x[k] == box) x[k++] = 0;
    if (k == x.size()) break;
    ++x[k];
  }
  std::sort(osp.begin(), osp.end());
  std::sort(so.begin(), so.end());
  return {osp, so};
}

}  // namespace superdim
