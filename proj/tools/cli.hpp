#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ultratree.hpp"

namespace ultratree::cli {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct Input {
  std::optional<LabeledTree> tree;
  FiniteUltrametricSpace space;
};

inline LabeledTree load_tree(const std::string& path) { return validate_tree(parse_tree_json(read_file(path))); }

/// A tree file (JSON object) or a matrix file (CSV), told apart by the first non-blank character.
inline Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    LabeledTree t = validate_tree(parse_tree_json(text));
    FiniteUltrametricSpace s = distance_matrix(t);
    return Input{std::move(t), std::move(s)};
  }
  return Input{std::nullopt, parse_matrix_csv(text)};
}

inline std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty value list");
  return out;
}

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ultrametric spaces from labeled trees: centers of distances, spheres, diametrical graphs"};
  app.name("ultratree");
  app.require_subcommand(1);

  std::size_t jobs = 1;
  app.add_option("--jobs,-j", jobs, "worker threads for campaigns (output is identical for any value)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  std::string input, output, dot;
  bool subsets = false, ut = false;
  std::size_t n = 0, random_count = 0;
  std::string check, sample, pool = "0,1,2,3";
  std::uint64_t prime = 2, seed = 1;

  auto* validate = app.add_subcommand("validate", "validate a tree file and its labeling");
  validate->add_option("tree", input, "tree JSON")->required();

  auto* distances = app.add_subcommand("distances", "distance matrix of a labeled tree");
  distances->add_option("tree", input, "tree JSON")->required();
  distances->add_option("-o,--output", output, "matrix CSV (default stdout)");

  auto* canonical = app.add_subcommand("canonical", "relabel with l*(u) = l(u) if l(u) is a distance, else 0");
  canonical->add_option("tree", input, "tree JSON")->required();
  canonical->add_option("-o,--output", output, "tree JSON (default stdout)");

  auto* center = app.add_subcommand("center", "center of distances C(X)");
  center->add_option("input", input, "tree JSON or matrix CSV")->required();

  auto* diametrical = app.add_subcommand("diametrical", "diametrical graph, its parts and spanning star");
  diametrical->add_option("input", input, "tree JSON or matrix CSV")->required();
  diametrical->add_option("--dot", dot, "write Graphviz DOT here");

  auto* spheres = app.add_subcommand("spheres", "centered spheres");
  spheres->add_option("input", input, "tree JSON or matrix CSV")->required();
  spheres->add_flag("--subsets", subsets, "test every non-empty subset (n <= 20)");

  auto* suite = app.add_subcommand("check", "run the theorem suite on one space");
  suite->add_option("input", input, "tree JSON or matrix CSV")->required();
  suite->add_flag("--ut", ut, "treat the space as tree-generated (implied for tree input)");
  suite->add_option("-o,--output", output, "report JSON (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "campaign over all weak-similarity classes of n-point spaces");
  enumerate->add_option("--n", n, "number of points")->required();
  enumerate->add_option("--check", check, "campaign")
      ->required()
      ->check(CLI::IsMember({"con3", "hol", "closed-balls", "suite"}));
  enumerate->add_option("--random", random_count, "closed-balls only: use this many random trees with 2..n vertices");
  enumerate->add_option("--seed", seed, "base seed for --random");
  enumerate->add_option("--pool", pool, "label pool for --random");
  enumerate->add_option("-o,--output", output, "report JSON (default stdout)");

  auto* padic = app.add_subcommand("padic", "finite sample of (Q, d_p)");
  padic->add_option("--p", prime, "prime")->required();
  padic->add_option("--sample", sample, "comma-separated rationals")->required();
  padic->add_option("-o,--output", output, "matrix CSV (default stdout)");

  auto* dplus_cmd = app.add_subcommand("dplus", "finite sample of (R+, d+)");
  dplus_cmd->add_option("--sample", sample, "comma-separated non-negative rationals")->required();
  dplus_cmd->add_option("-o,--output", output, "matrix CSV (default stdout)");

  auto* isut = app.add_subcommand("is-ut", "search for a labeled tree generating the space (n <= 6)");
  isut->add_option("matrix", input, "matrix CSV")->required();

  auto* random = app.add_subcommand("random-tree", "random non-degenerate labeled tree");
  random->add_option("--n", n, "number of vertices")->required();
  random->add_option("--seed", seed, "seed")->required();
  random->add_option("--pool", pool, "comma-separated label pool");
  random->add_option("-o,--output", output, "tree JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      const LabeledTree t = load_tree(input);
      if (const auto nd = is_nondegenerate(t); !nd) {
        out << "degenerate: edge {" << t.id(nd.violating_edge->first) << ", " << t.id(nd.violating_edge->second)
            << "} has both labels 0\n";
        return kFailed;
      }
      out << "valid: " << t.size() << " vertices, " << t.edges().size() << " edges, non-degenerate\n";
    } else if (*distances) {
      emit(out, output, matrix_to_csv(distance_matrix(load_tree(input))));
    } else if (*canonical) {
      emit(out, output, tree_to_json(canonical_labeling(load_tree(input))));
    } else if (*center) {
      out << center_of_distances(load_input(input).space).str() << "\n";
    } else if (*diametrical) {
      const FiniteUltrametricSpace s = load_input(input).space;
      const DiametricalGraph g(s);
      out << "diameter: " << diameter(s) << "\n";
      out << "edges: " << g.edges().size() << "\n";
      for (const auto& [u, v] : g.edges()) out << "  " << s.point(u) << " -- " << s.point(v) << "\n";
      if (s.size() >= 2) {
        const auto parts = multipartite_parts(g);
        const auto star = spanning_star(g);
        out << "parts: " << detail::parts_string(s, parts) << "\n";
        out << "star center: " << (star ? s.point(star->center) : "none") << "\n";
      }
      if (!dot.empty()) emit(out, dot, diametrical_dot(s));
    } else if (*spheres) {
      const FiniteUltrametricSpace s = load_input(input).space;
      if (subsets) {
        std::size_t yes = 0;
        const auto verdicts = scan_subsets_for_spheres(s);
        for (const auto& v : verdicts) {
          out << s.describe(v.subset);
          if (v.certificate) {
            ++yes;
            out << " sphere (center " << s.point(v.certificate->center) << ", radius " << v.certificate->radius << ")\n";
          } else {
            out << " not a sphere\n";
          }
        }
        out << yes << " of " << verdicts.size() << " non-empty subsets are centered spheres\n";
      } else {
        const auto all = enumerate_centered_spheres(s);
        for (const auto& c : all)
          out << s.describe(c.subset) << " (center " << s.point(c.center) << ", radius " << c.radius << ")\n";
        out << all.size() << " centered spheres\n";
      }
    } else if (*suite) {
      const Input in = load_input(input);
      const CampaignReport r = check_theorem_suite(in.space, ut || in.tree.has_value());
      emit(out, output, report_to_json(r));
      if (!r.all_passed()) {
        for (const auto& c : r.checks)
          if (c.verdict() == Verdict::Fail) err << "FAIL " << c.name << ": " << c.witness->description << "\n";
        return kFailed;
      }
    } else if (*enumerate) {
      CampaignReport r;
      if (random_count > 0) {
        if (check != "closed-balls") throw Error(ErrorKind::InvalidInput, "--random applies to --check closed-balls only");
        RandomCorpus corpus;
        corpus.count = random_count;
        corpus.min_n = std::min<std::size_t>(2, n);
        corpus.max_n = n;
        corpus.pool = parse_list(pool);
        corpus.base_seed = seed;
        r = check_closed_balls(corpus, jobs);
      } else if (check == "con3") {
        r = check_con3(n, jobs);
      } else if (check == "hol") {
        r = check_hol(n, jobs);
      } else if (check == "closed-balls") {
        r = check_closed_balls(n, jobs);
      } else {
        r = check_suite_enumerated(n, jobs);
      }
      emit(out, output, report_to_json(r));
      if (!r.all_passed()) {
        for (const auto& c : r.checks)
          if (c.verdict() == Verdict::Fail) err << "FAIL " << c.name << ": " << c.witness->description << "\n";
        return kFailed;
      }
    } else if (*padic) {
      emit(out, output, matrix_to_csv(sample_space(parse_list(sample), PAdicMetric{prime})));
    } else if (*dplus_cmd) {
      emit(out, output, matrix_to_csv(sample_space(parse_list(sample), DPlusMetric{})));
    } else if (*isut) {
      const FiniteUltrametricSpace s = load_input(input).space;
      if (const auto t = is_ut(s)) {
        out << "UT-space: generated by\n" << tree_to_json(*t);
      } else {
        out << "not a UT-space\n";
      }
    } else if (*random) {
      emit(out, output, tree_to_json(random_labeled_tree(n, parse_list(pool), seed)));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? kCapacity : kFailed;
  }
  return kOk;
}

}  // namespace ultratree::cli
