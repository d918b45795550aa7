#pragma once

// Command-line front end. Every verb delegates to an Engine whose members
// default to the library; tests swap members for stubs to check that the
// front end adds no arithmetic of its own.
//
// Exit codes: 0 ok, 1 internal error, 2 syntax / usage error, 3 validation error.

#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superdim/format.hpp"
#include "superdim/polytools.hpp"

namespace superdim::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kSyntax = 2, kValidation = 3 };

struct Engine {
  std::function<AlgebraId(std::string_view)> parse_algebra = [](std::string_view s) { return superdim::parse_algebra(s); };
  std::function<std::shared_ptr<const RootSystem>(const AlgebraId&)> build = [](const AlgebraId& id) {
    return std::make_shared<const RootSystem>(superdim::build(id));
  };
  std::function<Rational(const HighestWeight&)> typical_dim = [](const HighestWeight& hw) { return superdim::typical_dim(hw); };
  std::function<TypicalityReport(const HighestWeight&)> is_typical = [](const HighestWeight& hw) { return superdim::is_typical(hw); };
  std::function<Admissibility(const HighestWeight&)> admissibility = [](const HighestWeight& hw) { return superdim::strip_admissibility(hw); };
  std::function<Shift(const RootSystem&)> shift = [](const RootSystem& rs) { return superdim::shift(rs); };
  std::function<SearchReport(const AlgebraId&, const Integer&, const SearchOptions&)> search_algebra =
      [](const AlgebraId& id, const Integer& t, const SearchOptions& o) { return superdim::search_algebra(id, t, o); };
  std::function<SearchReport(const Integer&, const SearchOptions&)> enumerate_all = [](const Integer& t, const SearchOptions& o) {
    return superdim::enumerate_all(t, o);
  };
  std::function<MergeResult(const std::vector<TypicalRep>&)> merge_conjugates = [](const std::vector<TypicalRep>& r) {
    return superdim::merge_conjugates(r);
  };
  std::function<Rational(const SimpleFactor&, const LabelVector&)> weyl_dim = [](const SimpleFactor& f, const LabelVector& l) {
    return superdim::weyl_dim(f, l);
  };
  std::function<std::vector<Rational>(const SampledPolynomial&)> binomial_coefficients = [](const SampledPolynomial& p) {
    return superdim::binomial_coefficients(p);
  };
};

namespace detail {

inline std::string typicality_text(const TypicalityReport& r) {
  std::string s = "typical=" + to_string(r.verdict);
  if (r.verdict == Verdict::Conditional) s += " excluded=" + format_set(r.excluded_values) + " param=" + std::string(1, param_letter(r.tag));
  return s;
}

inline HighestWeight weight_from(const Engine& engine, const std::string& algebra, const std::string& labels) {
  const AlgebraId id = engine.parse_algebra(algebra);
  return from_g_labels(engine.build(id), parse_labels(labels));
}

inline void print_reps(std::ostream& out, const std::vector<TypicalRep>& reps, const std::string& format) {
  if (format == "jsonl") {
    for (const auto& r : reps) out << rep_to_json(r).dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"algebra", "type", "N1", "dim", "g_labels", "g0_labels", "typicality"}};
  for (const auto& r : reps)
    rows.push_back({to_string(r.algebra), to_string(r.algebra.type()), std::to_string(r.N1), to_string(r.dim), format_labels(r.g_labels),
                    format_even(r.even_labels), format_exclusions(r.tag, r.excluded_values)});
  out << format_columns(rows);
}

inline std::string table_text(const Engine& engine, int id) {
  if (id == 2) return shift_table([&](const AlgebraId& a) { return engine.shift(*engine.build(a)); });
  const SearchReport all = engine.enumerate_all(Integer(64), {});
  return id == 3 ? type_one_table(all.reps) : type_two_table(all.reps);
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Engine& engine = {}) {
  CLI::App app{"Typical representations of basic classical Lie superalgebras"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string algebra, labels, factor, format = "text", type_filter, values;
  long target = 0, base = 0;
  unsigned workers = 1;
  int table_id = 0;
  bool all = false, merge = false;

  auto* info = app.add_subcommand("info", "structure data of an algebra");
  info->add_option("algebra", algebra)->required();

  auto* dim = app.add_subcommand("dim", "dimension of the Kac module with given g-labels");
  dim->add_option("algebra", algebra)->required();
  dim->add_option("--labels", labels)->required();

  auto* typical = app.add_subcommand("typical", "typicality report for given g-labels");
  typical->add_option("algebra", algebra)->required();
  typical->add_option("--labels", labels)->required();

  auto* enumerate = app.add_subcommand("enumerate", "typical irreps of a given dimension");
  enumerate->add_option("--dim", target)->required()->check(CLI::PositiveNumber);
  auto* alg_opt = enumerate->add_option("--algebra", algebra);
  auto* all_opt = enumerate->add_flag("--all", all);
  alg_opt->excludes(all_opt);
  enumerate->add_option("--type", type_filter)->check(CLI::IsMember({"I", "II"}));
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  enumerate->add_flag("--merge-conjugates", merge);
  enumerate->add_option("--workers", workers)->check(CLI::Range(1u, 64u));

  auto* weyl = app.add_subcommand("weyl", "Weyl dimension of a simple Lie algebra irrep");
  weyl->add_option("factor", factor)->required();
  weyl->add_option("--labels", labels)->required();

  auto* table = app.add_subcommand("table", "print a reproduced table");
  table->add_option("--id", table_id)->required()->check(CLI::IsMember({2, 3, 4}));

  auto* poly = app.add_subcommand("poly", "binomial coefficients of a sampled polynomial");
  poly->add_option("--values", values)->required();
  poly->add_option("--base", base);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands())
      if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
        out << sub->help();
        return kOk;
      }
    err << "error: " << e.what() << '\n';
    return kSyntax;
  }

  try {
    if (info->parsed()) {
      const AlgebraId id = engine.parse_algebra(algebra);
      const auto rs = engine.build(id);
      out << "algebra: " << to_string(id) << " (" << kac_name(id) << ")\n";
      out << "type: " << to_string(id.type()) << "\n";
      out << "rank: " << rs->rank() << "  N0=" << rs->N0 << "  N1=" << rs->N1 << "\n";
      out << "even part: " << format_factors(*rs) << "\n";
      out << "cartan:\n" << format_matrix(cartan_matrix(*rs));
      out << "diagram:\n";
      std::istringstream lines(diagram(*rs));
      for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
      out << "rho0: " << weight_to_string(*rs, rs->rho0) << "\n";
      out << "rho1: " << weight_to_string(*rs, rs->rho1) << "\n";
      if (!id.type_one()) {
        const Shift s = engine.shift(*rs);
        out << "shift: " << to_string(s.value) << "  b=" << to_string(s.b) << "\n";
      }
    } else if (dim->parsed() || typical->parsed()) {
      const HighestWeight hw = detail::weight_from(engine, algebra, labels);
      // Below the shift only special weights are highest weights of finite-dimensional
      // irreps, and there the Kac-module formula is out of its domain.
      const Admissibility adm = engine.admissibility(hw);
      if (!adm.admissible) throw ValidationError("not the highest weight of a finite-dimensional irrep (hidden label below the shift)");
      const bool below = hw.ls0 && numerator_of(hw.ls0->value()) < engine.shift(*hw.rs).b;
      const TypicalityReport rep = engine.is_typical(hw);
      if (dim->parsed()) {
        out << "dim=" << (below ? std::string("n/a") : to_string(engine.typical_dim(hw))) << " " << detail::typicality_text(rep);
        if (adm.alpha) out << " only_at_a=" << to_string(*adm.alpha);
        out << "\n";
      } else {
        if (adm.alpha) out << "admissible only at a=" << to_string(*adm.alpha) << "\n";
        out << detail::typicality_text(rep) << "\n";
        for (const auto& r : rep.vanishing_roots) out << "vanishing: " << weight_to_string(*hw.rs, r.weight) << "\n";
        if (!rep.domain_exclusions.empty()) out << "domain excludes: " << format_set(rep.domain_exclusions) << "\n";
      }
    } else if (enumerate->parsed()) {
      if (algebra.empty() && !all) throw CLI::RequiredError("--algebra or --all");
      SearchOptions opt;
      opt.workers = workers;
      SearchReport report = all ? engine.enumerate_all(Integer(target), opt) : engine.search_algebra(engine.parse_algebra(algebra), Integer(target), opt);
      std::vector<TypicalRep> reps;
      for (auto& r : report.reps)
        if (type_filter.empty() || (type_filter == "I") == r.algebra.type_one()) reps.push_back(std::move(r));
      if (merge) reps = engine.merge_conjugates(reps).classes;
      detail::print_reps(out, reps, format);
      if (format == "text") {
        out << "total: " << reps.size() << (merge ? " classes" : " representations");
        if (all) out << " over " << report.candidates_considered << " candidate algebras";
        out << "\n";
      }
      if (!report.strip.violations.empty()) {
        for (const auto& v : report.strip.violations) err << "warning: typical weight below the shift: " << v << "\n";
      }
    } else if (weyl->parsed()) {
      const SimpleFactor f = parse_factor(factor);
      out << to_string(engine.weyl_dim(f, parse_rationals(labels))) << "\n";
    } else if (table->parsed()) {
      out << detail::table_text(engine, table_id);
    } else if (poly->parsed()) {
      SampledPolynomial p{Integer(base), parse_rationals(values)};
      const auto coeffs = engine.binomial_coefficients(p);
      bool integral = true;
      for (const auto& a : coeffs) integral = integral && is_integer(a);
      std::string list;
      for (const auto& a : coeffs) list += (list.empty() ? "" : ",") + to_string(a);
      out << "coefficients=" << list << " integer_valued=" << (integral ? "yes" : "no") << "\n";
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kSyntax;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kSyntax;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace superdim::cli
