// coxdatum: command-line front end. Results go to stdout as JSON (or CSV
// with --format csv); diagnostics go to stderr.
//
// Exit codes: 0 success, 1 invalid datum or failed check/verdict, 2 usage,
// I/O or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coxdatum/classical.hpp"
#include "coxdatum/cone.hpp"
#include "coxdatum/errors.hpp"
#include "coxdatum/io.hpp"
#include "coxdatum/roots.hpp"

using namespace coxdatum;

namespace {

struct Globals {
  std::string format = "json";
  double epsilon = 0.0;
  bool parallel = false;
  long max_steps = 1000;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::UnknownExample:
    case ErrorKind::Precondition:
    case ErrorKind::NotRank2:
    case ErrorKind::ModeMismatch:
      return 2;
    default:
      return 1;
  }
}

// "example:<name>" selects a builtin datum; anything else is a file path.
CoxeterDatum load(const std::string& source, const Globals& g) {
  constexpr std::string_view prefix = "example:";
  if (source.starts_with(prefix)) {
    CoxeterDatum d = builtin_example(source.substr(prefix.size()));
    return g.epsilon > 0 ? with_epsilon(d, g.epsilon) : d;
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (g.epsilon > 0) {
    doc["epsilon"] = g.epsilon;
  } else if (const char* env = std::getenv("COXDATUM_EPSILON"); env && !doc.contains("epsilon")) {
    char* end = nullptr;
    const double eps = std::strtod(env, &end);
    if (end == env || *end != '\0' || eps <= 0) throw Error(ErrorKind::Parse, "COXDATUM_EPSILON must be a positive number");
    doc["epsilon"] = eps;
  }
  try {
    return parse_datum(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad datum: ") + e.what());
  }
}

Vec parse_vector(const std::string& text, const Field& field, std::size_t n) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorKind::Parse, "empty entry in vector '" + text + "'");
    out.push_back(field.parse(item.substr(b, e - b + 1)));
  }
  if (out.size() != n) {
    throw Error(ErrorKind::Parse, "vector '" + text + "' needs " + std::to_string(n) + " entries");
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_pair(const CoxeterDatum& d, const std::string& text) {
  const GroupWord w = parse_word(d, text);
  if (w.size() != 2) throw Error(ErrorKind::NotRank2, "--pair takes two generator labels");
  return {w.letters[0], w.letters[1]};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

bool csv(const Globals& g) { return g.format == "csv"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter data: validation, reflection actions, root systems, comparisons and Tits cones"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--epsilon", g.epsilon, "Float-mode tolerance (overrides the datum and COXDATUM_EPSILON)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--parallel", g.parallel, "Parallel root enumeration");
  app.add_option("--max-steps", g.max_steps, "Step budget for descents and sweeps")->check(CLI::PositiveNumber);

  std::string source;
  int side = 1;
  long max_depth = 4;
  std::string word;
  std::string coeffs;
  std::string simple;
  bool no_pairs = false;
  std::string fvals, vvals, v1vals, v2vals, f1vals, f2vals, pair;
  long max_len = 0;
  std::string example_name;

  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("datum", source, "Datum JSON file, or example:<name>")->required();
  };
  auto add_side = [&](CLI::App* sub) { sub->add_option("--side", side, "1 or 2")->check(CLI::IsMember({1, 2})); };

  auto* validate_cmd = app.add_subcommand("validate", "Check the datum axioms");
  add_datum(validate_cmd);

  auto* roots_cmd = app.add_subcommand("roots", "Enumerate positive roots and scalar chains");
  add_datum(roots_cmd);
  add_side(roots_cmd);
  roots_cmd->add_option("--max-depth", max_depth, "BFS level bound (witness length + 1)")->check(CLI::PositiveNumber);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced word, length and inversion set");
  add_datum(reduce_cmd);
  reduce_cmd->add_option("--word", word, "Comma-separated generator labels");

  auto* depth_cmd = app.add_subcommand("depth", "Depth of a positive root by greedy descent");
  add_datum(depth_cmd);
  add_side(depth_cmd);
  depth_cmd->add_option("--coeffs", coeffs, "Comma-separated coefficients")->required();

  auto* phi_cmd = app.add_subcommand("phi", "Transport the root w.(simple s) to the other side");
  add_datum(phi_cmd);
  add_side(phi_cmd);
  phi_cmd->add_option("--word", word, "Witness word");
  phi_cmd->add_option("--simple", simple, "Simple root label")->required();

  auto* compare_cmd = app.add_subcommand("compare", "Check the classical comparison inequalities over a table");
  add_datum(compare_cmd);
  compare_cmd->add_option("--max-depth", max_depth, "BFS level bound")->check(CLI::PositiveNumber);
  compare_cmd->add_flag("--no-pairs", no_pairs, "Skip the pairwise checks");

  auto* cone_cmd = app.add_subcommand("cone", "Tits cone questions");
  add_datum(cone_cmd);
  cone_cmd->require_subcommand(1);
  auto* membership_cmd = cone_cmd->add_subcommand("membership", "Is the functional in the Tits cone?");
  add_side(membership_cmd);
  membership_cmd->add_option("--f", fvals, "Values on the simple roots")->required();
  auto* dual_cmd = cone_cmd->add_subcommand("dual", "Bounded dual-cone membership");
  add_side(dual_cmd);
  dual_cmd->add_option("--v", vvals, "Coefficient vector")->required();
  dual_cmd->add_option("--max-len", max_len, "Word length budget (default: --max-steps)");
  auto* rank2_cmd = cone_cmd->add_subcommand("rank2", "Exact dual cones of a finite dihedral pair");
  rank2_cmd->add_option("--pair", pair, "Two generator labels, e.g. r,s")->required();
  auto* refute_cmd = cone_cmd->add_subcommand("refute", "Expel v1 or v2 from its dual cone when <v1, v2> > 0");
  refute_cmd->add_option("--v1", v1vals, "Side1 vector")->required();
  refute_cmd->add_option("--v2", v2vals, "Side2 vector")->required();
  refute_cmd->add_option("--f1", f1vals, "Side1 functional (default all ones)");
  refute_cmd->add_option("--f2", f2vals, "Side2 functional (default all ones)");

  auto* example_cmd = app.add_subcommand("example", "Print a builtin datum");
  example_cmd->add_option("name", example_name, "paper-triangle, dihedral-<m>, infinite-gamma-<g>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (example_cmd->parsed()) {
      emit(to_json(builtin_example(example_name)));
      return 0;
    }

    CoxeterDatum raw = load(source, g);

    if (validate_cmd->parsed()) {
      const ValidationReport report = validate(raw);
      if (csv(g)) {
        std::cout << "condition,s,t,warning,message\n";
        for (const auto& v : report.violations) {
          std::cout << v.condition << ',' << (v.s >= 0 ? raw.label(static_cast<std::size_t>(v.s)) : "") << ','
                    << (v.t >= 0 ? raw.label(static_cast<std::size_t>(v.t)) : "") << ','
                    << (v.warning ? "true" : "false") << ",\"" << v.message << "\"\n";
        }
      } else {
        emit(to_json(raw, report));
      }
      return report.valid ? 0 : 1;
    }

    const CoxeterDatum d = validated(raw);
    const Side chosen = side_from_number(side);
    EnumerateOptions opts;
    opts.parallel = g.parallel;

    if (roots_cmd->parsed()) {
      const RootTable table = enumerate_roots(d, chosen, max_depth, opts);
      if (csv(g)) {
        std::cout << table_to_csv(d, table);
      } else {
        emit(to_json(d, table, scalar_chains(d, table)));
      }
      return 0;
    }

    if (reduce_cmd->parsed()) {
      const ReducedWord r = reduce_word(d, parse_word(d, word));
      const InversionSet n1 = inversion_set(d, r.word, Side::One);
      const InversionSet n2 = inversion_set(d, r.word, Side::Two);
      if (csv(g)) {
        std::cout << "side,inversion_root\n";
        for (const auto& v : n1.roots) std::cout << "1," << csv_vector(v) << '\n';
        for (const auto& v : n2.roots) std::cout << "2," << csv_vector(v) << '\n';
        return 0;
      }
      json out;
      out["input"] = word_to_json(d, parse_word(d, word));
      out["reduced"] = word_to_json(d, r.word);
      out["length"] = r.length;
      json inv1 = json::array();
      for (const auto& v : n1.roots) inv1.push_back(to_json(v));
      json inv2 = json::array();
      for (const auto& v : n2.roots) inv2.push_back(to_json(v));
      out["inversions"] = {{"side1", std::move(inv1)}, {"side2", std::move(inv2)}};
      emit(out);
      return 0;
    }

    if (depth_cmd->parsed()) {
      const Vec v = parse_vector(coeffs, d.field(), d.rank());
      const DepthResult r = depth(d, v, chosen, g.max_steps);
      if (csv(g)) {
        std::cout << "depth,descent\n" << r.depth << ',';
        const auto labels = word_labels(d, r.descent);
        for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? ";" : "") << labels[i];
        std::cout << '\n';
      } else {
        emit({{"coeffs", to_json(v)}, {"side", side}, {"depth", r.depth}, {"descent", word_to_json(d, r.descent)}});
      }
      return 0;
    }

    if (phi_cmd->parsed()) {
      Root root;
      root.side = chosen;
      root.witness = {parse_word(d, word), d.index_of(simple)};
      root.coeffs = apply_word(d, root.witness.word, chosen, simple_root(d, root.witness.simple));
      root.ray = RayId(root.coeffs, d.field());
      root.sign = classify(root.coeffs, d.field());
      const Root image = chosen == Side::One ? phi(d, root) : phi_inverse(d, root);
      if (csv(g)) {
        std::cout << "side,coeffs\n"
                  << side << ',' << csv_vector(root.coeffs) << '\n'
                  << side_number(image.side) << ',' << csv_vector(image.coeffs) << '\n';
      } else {
        emit({{"root", to_json(d, root)}, {"image", to_json(d, image)}});
      }
      return 0;
    }

    if (compare_cmd->parsed()) {
      const RootTable table = enumerate_roots(d, Side::One, max_depth, opts);
      const ComparisonReport report = compare_table(d, table, !no_pairs);
      if (csv(g)) {
        std::cout << report_to_csv(d, report, table);
      } else {
        json out = to_json(d, report, table);
        out["roots"] = table.roots.size();
        emit(out);
      }
      if (!report.ok()) std::cerr << "comparison: " << report.violations() << " violation(s)\n";
      return report.ok() ? 0 : 1;
    }

    if (cone_cmd->parsed()) {
      auto emit_verdict = [&](const ConeVerdict& v) {
        if (csv(g)) {
          std::cout << "status,witness\n" << to_string(v.status) << ',';
          const auto labels = word_labels(d, v.witness);
          for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? ";" : "") << labels[i];
          std::cout << '\n';
        } else {
          emit(to_json(d, v));
        }
      };
      if (membership_cmd->parsed()) {
        const Functional f = make_functional(d, chosen, parse_vector(fvals, d.field(), d.rank()));
        const ConeVerdict v = tits_membership(d, f, g.max_steps);
        emit_verdict(v);
        return v.status == ConeStatus::NotDeterminedUpTo ? 1 : 0;
      }
      if (dual_cmd->parsed()) {
        const Vec v = parse_vector(vvals, d.field(), d.rank());
        const ConeVerdict verdict = dual_membership(d, v, chosen, max_len > 0 ? max_len : g.max_steps);
        emit_verdict(verdict);
        return verdict.status == ConeStatus::RejectedWitness ? 1 : 0;
      }
      if (rank2_cmd->parsed()) {
        const auto [r, s] = parse_pair(d, pair);
        const Rank2DualCones cones = dual_cone_rank2(d, r, s);
        bool holds = true;
        json cross = json::array();
        for (const auto& a : cones.side1.rays)
          for (const auto& b : cones.side2.rays) {
            const Scalar p = pairing(cones.pair, a, b);
            holds = holds && cones.pair.field().sign(p) <= 0;
            cross.push_back(to_json(p));
          }
        json out = to_json(d, cones);
        out["cross_pairings"] = std::move(cross);
        out["nonpositive"] = holds;
        emit(out);
        return holds ? 0 : 1;
      }
      if (refute_cmd->parsed()) {
        const Vec v1 = parse_vector(v1vals, d.field(), d.rank());
        const Vec v2 = parse_vector(v2vals, d.field(), d.rank());
        std::optional<Functional> f1, f2;
        if (!f1vals.empty()) f1 = make_functional(d, Side::One, parse_vector(f1vals, d.field(), d.rank()));
        if (!f2vals.empty()) f2 = make_functional(d, Side::Two, parse_vector(f2vals, d.field(), d.rank()));
        const Refutation ref = refute_positive_pairing(d, v1, v2, f1, f2, g.max_steps);
        emit(to_json(d, ref));
        return 0;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
