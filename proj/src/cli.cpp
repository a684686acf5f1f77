#include "flatdelta/cli.hpp"

#include "flatdelta/counting.hpp"
#include "flatdelta/ehrhart.hpp"
#include "flatdelta/flat.hpp"
#include "flatdelta/json_io.hpp"
#include "flatdelta/theorem_suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace flatdelta::cli {
namespace {

using nlohmann::json;

enum class Format { Table, Json };

struct Config {
  Format format = Format::Table;
  std::string budget = "100000000";

  CountBudget count_budget() const {
    CountBudget b;
    if (budget.empty() || budget.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--budget", "must be a positive integer");
    b.max_candidates = Integer(budget);
    if (b.max_candidates <= 0) throw CLI::ValidationError("--budget", "must be a positive integer");
    return b;
  }
};

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"table", Format::Table}, {"json", Format::Json}}));
  cmd->add_option("--budget", cfg.budget, "Maximum bounding-box candidates per enumeration");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

// Inline JSON when the argument looks like JSON, otherwise a file path.
json read_json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw JsonFormatError(e.what());
    }
  }
  return read_json_file(arg);
}

std::string row(const std::vector<Integer>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void print_simplex_table(std::ostream& out, const Simplex& s) {
  out << "simplex (dim " << s.dim() << ")\n";
  for (std::size_t i = 0; i <= s.dim(); ++i) out << "  v" << i << ": " << row(s.vertex(i).entries()) << "\n";
}

std::string flat_summary(const std::optional<FlatSpec>& spec) {
  if (!spec) return "not flat";
  std::ostringstream os;
  os << "flat (d=" << spec->d << " k=" << spec->k << " l=" << spec->l << " a=" << spec->a << ")";
  if (!is_realizable(*spec)) os << ", not realizable: k > l";
  return os.str();
}

// ---- construct ----

struct ConstructArgs {
  std::size_t d = 0, k = 0, l = 0;
  unsigned long a = 0;
  std::string out_path;
};

int cmd_construct(const ConstructArgs& args, const Config& cfg, std::ostream& out, std::ostream& err) {
  const FlatSpec spec{args.d, args.k, args.l, args.a};
  spec.validate();
  if (!is_realizable(spec)) {
    err << "not realizable: k > l\n";
    return kExitNotRealizable;
  }
  const CountBudget budget = cfg.count_budget();
  auto [simplex, recipe] = construct_flat(spec, budget);
  const DeltaVector delta = delta_by_counting(simplex, budget);

  json doc = simplex_to_json(simplex);
  doc["delta"] = delta_to_json(delta)["delta"];
  doc["recipe"] = recipe_to_json(recipe);

  if (!args.out_path.empty()) {
    std::ofstream file(args.out_path);
    if (!file) throw JsonFormatError("cannot write " + args.out_path);
    file << doc.dump(2) << "\n";
  }
  if (cfg.format == Format::Json) {
    out << doc.dump(2) << "\n";
  } else {
    print_simplex_table(out, simplex);
    out << "recipe: " << to_string(recipe.kind) << " core dim " << recipe.base_dim << ", k=" << recipe.k
        << ", a=" << recipe.a << ", pyramids " << recipe.pyramids << "\n";
    out << "delta: " << to_string(delta) << "\n";
  }
  return kExitOk;
}

// ---- delta ----

int cmd_delta(const std::string& path, const std::string& method, const Config& cfg, std::ostream& out,
              std::ostream& err) {
  const Simplex s = simplex_from_json(read_json_file(path));
  const CountBudget budget = cfg.count_budget();
  std::optional<DeltaVector> by_counts, by_box;
  if (method == "counts" || method == "both") by_counts = delta_by_counting(s, budget);
  if (method == "box" || method == "both") by_box = delta_from_box(s, budget);
  const bool agree = !(by_counts && by_box) || *by_counts == *by_box;

  if (cfg.format == Format::Json) {
    if (method == "both") {
      out << json{{"d", s.dim()},
                  {"counts", delta_to_json(*by_counts)["delta"]},
                  {"box", delta_to_json(*by_box)["delta"]},
                  {"agree", agree}}
                 .dump(2)
          << "\n";
    } else {
      out << delta_to_json(by_counts ? *by_counts : *by_box).dump(2) << "\n";
    }
  } else {
    if (by_counts) out << "counts: " << to_string(*by_counts) << "\n";
    if (by_box) out << "box: " << to_string(*by_box) << "\n";
  }
  if (!agree) {
    err << "delta-vectors from counting and from Box points disagree\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

// ---- count ----

int cmd_count(const std::string& path, unsigned long n, bool interior, const Config& cfg, std::ostream& out) {
  const Simplex s = simplex_from_json(read_json_file(path));
  if (interior && n == 0) throw CLI::ValidationError("--n", "interior counts need n >= 1");
  const CountBudget budget = cfg.count_budget();
  const Integer value = interior ? count_interior_points(s, n, budget) : count_lattice_points(s, n, budget);
  if (cfg.format == Format::Json)
    out << json{{"n", n}, {"interior", interior}, {"count", integer_to_json(value)}}.dump(2) << "\n";
  else
    out << value << "\n";
  return kExitOk;
}

// ---- check ----

int cmd_check(const std::string& arg, const Config& cfg, std::ostream& out) {
  const std::vector<Integer> entries = delta_entries_from_json(read_json_argument(arg));
  std::optional<DeltaVector> delta;
  std::string invalid;
  try {
    delta.emplace(entries);
  } catch (const InvalidDeltaError& e) {
    invalid = e.what();
  }

  if (!delta) {
    if (cfg.format == Format::Json)
      out << json{{"valid", false}, {"reason", invalid}}.dump(2) << "\n";
    else
      out << "nonnegative: fails (" << invalid << ")\n";
    return kExitNotRealizable;
  }

  const InequalityCheck stanley = check_stanley_ineq(*delta);
  const InequalityCheck hibi = check_hibi_ineq(*delta);
  const std::optional<FlatSpec> flat = classify_flat(*delta);

  if (cfg.format == Format::Json) {
    auto verdict = [](const InequalityCheck& c) {
      json j{{"holds", c.holds}};
      j["violated_at"] = c.violated_at ? json(*c.violated_at) : json(nullptr);
      return j;
    };
    json flat_json = nullptr;
    if (flat)
      flat_json = json{{"d", flat->d}, {"k", flat->k}, {"l", flat->l}, {"a", flat->a}, {"realizable", is_realizable(*flat)}};
    out << json{{"valid", true},
                {"d", delta->dim()},
                {"delta", delta_to_json(*delta)["delta"]},
                {"stanley", verdict(stanley)},
                {"hibi", verdict(hibi)},
                {"flat", flat_json}}
               .dump(2)
        << "\n";
  } else {
    auto verdict = [](const InequalityCheck& c) {
      return c.holds ? std::string("holds") : "fails at i=" + std::to_string(*c.violated_at);
    };
    out << "delta: " << to_string(*delta) << "\n";
    out << "nonnegative: holds\n";
    out << "stanley: " << verdict(stanley) << "\n";
    out << "hibi: " << verdict(hibi) << "\n";
    out << "flat: " << flat_summary(flat) << "\n";
  }
  return stanley.holds && hibi.holds ? kExitOk : kExitNotRealizable;
}

// ---- verify ----

struct VerifyArgs {
  int theorem = 0;
  std::size_t d = 0, k = 0, l = 0;
  unsigned long a = 1;
  std::size_t count = 3;
};

void print_report_table(std::ostream& out, const VerificationReport& report) {
  out << std::left << std::setw(10) << "quantity" << std::setw(6) << "t" << std::setw(14) << "P" << std::setw(14)
      << "Q" << "relation\n";
  auto line = [&](const CountComparison& c, bool must_equal) {
    const bool equal = c.value_p == c.value_q;
    out << std::setw(10) << to_string(c.quantity) << std::setw(6) << c.dilation << std::setw(14) << c.value_p.get_str()
        << std::setw(14) << c.value_q.get_str() << (equal ? "=" : "!=")
        << ((equal == must_equal) ? "" : "  (unexpected)") << "\n";
  };
  for (const auto& c : report.agreements) line(c, true);
  for (const auto& c : report.first_divergence) line(c, false);
  out << std::right;
}

int cmd_verify(const VerifyArgs& args, const Config& cfg, std::ostream& out, std::ostream& err) {
  const CountBudget budget = cfg.count_budget();
  switch (args.theorem) {
    case 1: {
      const FlatSpec spec{args.d, args.k, args.l, args.a};
      spec.validate();
      const DeltaVector pattern = flat_pattern(spec);
      if (!is_realizable(spec)) {
        const InequalityCheck hibi = check_hibi_ineq(pattern);
        if (cfg.format == Format::Json) {
          json j{{"theorem", "theorem1"}, {"pattern", delta_to_json(pattern)["delta"]}, {"realizable", false}};
          j["hibi_violated_at"] = hibi.violated_at ? json(*hibi.violated_at) : json(nullptr);
          out << j.dump(2) << "\n";
        } else {
          out << "pattern: " << to_string(pattern) << "\n";
          out << "not realizable: k > l";
          if (!hibi.holds) out << " (hibi inequality fails at i=" << *hibi.violated_at << ")";
          out << "\n";
        }
        if (hibi.holds) {
          err << "hibi inequality unexpectedly holds on a non-realizable pattern\n";
          return kExitInconsistent;
        }
        return kExitNotRealizable;
      }
      auto [simplex, recipe] = construct_flat(spec, budget);
      const DeltaVector counted = delta_by_counting(simplex, budget);
      const bool confirmed = counted == pattern;
      if (cfg.format == Format::Json) {
        json j{{"theorem", "theorem1"},
               {"pattern", delta_to_json(pattern)["delta"]},
               {"realizable", true},
               {"simplex", simplex_to_json(simplex)},
               {"recipe", recipe_to_json(recipe)},
               {"counted_delta", delta_to_json(counted)["delta"]},
               {"passed", confirmed}};
        out << j.dump(2) << "\n";
      } else {
        out << "pattern: " << to_string(pattern) << "\n";
        print_simplex_table(out, simplex);
        out << "counted delta: " << to_string(counted) << "\n";
        out << (confirmed ? "PASSED" : "FAILED") << "\n";
      }
      return confirmed ? kExitOk : kExitInconsistent;
    }
    case 2: {
      const SimplexPair pair = theorem2_pair(args.d, args.k, args.l, args.a, budget);
      VerificationReport report = verify_pair(pair.p, pair.q, args.k, args.l, budget);
      report.theorem = "theorem2";
      report.params.a_values = {args.a};
      if (cfg.format == Format::Json) {
        out << report_to_json(report).dump(2) << "\n";
      } else {
        out << "theorem 2: d=" << args.d << " k=" << args.k << " l=" << args.l << " a=" << args.a << "\n";
        out << "P delta: " << to_string(delta_by_counting(pair.p, budget)) << "\n";
        out << "Q delta: " << to_string(delta_by_counting(pair.q, budget)) << "\n";
        print_report_table(out, report);
        out << (report.passed ? "PASSED" : "FAILED") << "\n";
      }
      return report.passed ? kExitOk : kExitInconsistent;
    }
    case 3: {
      const std::vector<Simplex> family = theorem3_family(args.d, args.k, args.l, args.count, budget);
      VerificationReport report = verify_family(family, args.k, args.l, budget);
      report.theorem = "theorem3";
      for (unsigned long a = 1; a <= args.count; ++a) report.params.a_values.push_back(a);
      if (cfg.format == Format::Json) {
        out << report_to_json(report).dump(2) << "\n";
      } else {
        out << "theorem 3: d=" << args.d << " k=" << args.k << " l=" << args.l << " count=" << args.count << "\n";
        std::size_t idx = 0;
        for (std::size_t i = 0; i < family.size(); ++i)
          for (std::size_t j = i + 1; j < family.size(); ++j) {
            out << "pair (P_" << i + 1 << ", P_" << j + 1 << ")\n";
            print_report_table(out, report.pairs[idx++]);
          }
        out << (report.passed ? "PASSED" : "FAILED") << "\n";
      }
      return report.passed ? kExitOk : kExitInconsistent;
    }
    default:
      err << "--theorem must be 1, 2 or 3\n";
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flat delta-vectors: constructions, Ehrhart counting and verification", "flatdelta"};
  app.require_subcommand(1);
  Config cfg;

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a simplex with a flat delta-vector");
  construct->add_option("--d", construct_args.d, "Dimension")->required();
  construct->add_option("--k", construct_args.k, "Leading zeros")->required();
  construct->add_option("--l", construct_args.l, "Trailing zeros")->required();
  construct->add_option("--a", construct_args.a, "Run value")->required();
  construct->add_option("--out", construct_args.out_path, "Write the simplex JSON here");
  add_common(construct, cfg);

  std::string delta_path, method = "both";
  auto* delta = app.add_subcommand("delta", "Delta-vector of a simplex");
  delta->add_option("polytope", delta_path, "Simplex JSON file")->required();
  delta->add_option("--method", method, "counts, box or both")->check(CLI::IsMember({"counts", "box", "both"}));
  add_common(delta, cfg);

  std::string count_path;
  unsigned long count_n = 0;
  bool interior = false;
  auto* count = app.add_subcommand("count", "Lattice points of a dilation");
  count->add_option("polytope", count_path, "Simplex JSON file")->required();
  count->add_option("--n", count_n, "Dilation factor")->required();
  count->add_flag("--interior", interior, "Count interior points only");
  add_common(count, cfg);

  std::string check_arg;
  auto* check = app.add_subcommand("check", "Inequalities and flatness of a delta-vector");
  check->add_option("delta", check_arg, "Delta JSON file or inline JSON")->required();
  add_common(check, cfg);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Verify a theorem instance by counting");
  verify->add_option("--theorem", verify_args.theorem, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  verify->add_option("--d", verify_args.d, "Dimension")->required();
  verify->add_option("--k", verify_args.k, "k")->required();
  verify->add_option("--l", verify_args.l, "l")->required();
  verify->add_option("--a", verify_args.a, "Run value (theorems 1 and 2)");
  verify->add_option("--count", verify_args.count, "Family size (theorem 3)");
  add_common(verify, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_args, cfg, out, err);
    if (*delta) return cmd_delta(delta_path, method, cfg, out, err);
    if (*count) return cmd_count(count_path, count_n, interior, cfg, out);
    if (*check) return cmd_check(check_arg, cfg, out);
    if (*verify) return cmd_verify(verify_args, cfg, out, err);
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const NotRealizableError& e) {
    err << e.what() << "\n";
    return kExitNotRealizable;
  } catch (const NotEhrhartError& e) {
    err << "inconsistent counts: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flatdelta::cli
