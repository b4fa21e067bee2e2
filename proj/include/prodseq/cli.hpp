// Command-line front end. Exit codes: 0 success, 1 property violation,
// 2 bad flags or invalid input, 3 desk-scale guard.
#pragma once

#include "prodseq/parse.hpp"
#include "prodseq/report.hpp"
#include "prodseq/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace prodseq::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kBadInput = 2, kGuard = 3 };

namespace detail {

inline void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <ExactNumber T>
int run_lucas_bound(const std::vector<T>& elements, const SequenceId& seq, const std::string& out_path,
                    std::ostream& out) {
  const BaseSet<T> base(elements);
  const auto rep = lucas_count_check(base, seq);
  emit(out, dump(to_json(rep, seq, base.size())), out_path);
  return rep.ok && rep.high_index_ok ? kOk : kViolation;
}

template <ExactNumber T>
int run_graph(const std::vector<T>& elements, const SequenceId& seq, GraphMode mode, const std::string& dump_path,
              std::ostream& out) {
  const BaseSet<T> base(elements);
  const auto table = std::make_shared<const TermIndex>(seq, max_product(base));
  const auto members = sequence_members(build_product_set(base), term_membership(table));
  const auto g = build_aux_graph(base, members, mode);
  if (!dump_path.empty()) {
    std::ostringstream csv;
    write_edge_csv(csv, g);
    write_file_atomic(dump_path, csv.str());
  }
  Json j = to_json(g);
  j["sequence"] = seq.name();
  out << dump(j);
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequence terms in product sets: experiments and checks", "prodseq"};
  app.require_subcommand(1);

  unsigned universe = 0, size = 0, threads = 1;
  std::string out_path;
  auto* extremal = app.add_subcommand("fib-extremal", "Exhaustive maximum of Fibonacci numbers in B.B");
  extremal->add_option("--universe", universe, "B ranges over subsets of {1..N}")->required();
  extremal->add_option("--size", size, "|B|")->required();
  extremal->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  extremal->add_option("--out", out_path, "write the JSON report here");

  std::string set_text, seq_text = "lucasV";
  auto* lucas = app.add_subcommand("lucas-bound", "Count sequence terms in B.B against 2|B| + 30");
  lucas->add_option("--set", set_text, "comma-separated elements of B (integers or p/q)")->required();
  lucas->add_option("--seq", seq_text, "fib | lucasV | lucasU:P,Q | lucasV:P,Q");
  lucas->add_option("--out", out_path, "write the JSON report here");

  std::string mode_text = "one", dump_path;
  auto* graph = app.add_subcommand("graph", "Representation graph of sequence terms in B.B");
  graph->add_option("--set", set_text, "comma-separated elements of B")->required();
  graph->add_option("--seq", seq_text, "fib | lucasV | lucasU:P,Q | lucasV:P,Q");
  graph->add_option("--mode", mode_text, "one | two")->check(CLI::IsMember({"one", "two"}));
  graph->add_option("--dump", dump_path, "write edges as b1,b2,value CSV");

  std::string poly_text, filter_text = "above", residue_text, r_text = "0";
  std::size_t window = 0;
  auto* win = app.add_subcommand("window", "Per-term largest prime factors over a polynomial window");
  win->add_option("--poly", poly_text, "coefficients, constant term first")->required();
  win->add_option("--r", r_text, "window offset r >= 0");
  win->add_option("--R", window, "window length")->required();
  win->add_option("--filter", filter_text, "above | mid")->check(CLI::IsMember({"above", "mid"}));
  win->add_option("--residue", residue_text, "auto: restrict to x = a mod M and divide by d")
      ->check(CLI::IsMember({"auto"}));
  win->add_option("--out", out_path, "write the CSV here");

  std::string factors_text;
  double gamma = 2.0;
  auto* wit = app.add_subcommand("witness", "Prime/term witness and the implied lower bound on |B|");
  wit->add_option("--poly-factors", factors_text, "irreducible factors 'c0,c1,..[^m];...'")->required();
  wit->add_option("--r", r_text, "window offset r >= 0");
  wit->add_option("--R", window, "window length")->required();
  wit->add_option("--gamma", gamma, "case split exponent (> 1)");
  wit->add_option("--out", out_path, "write the JSON report here");

  std::string graph_path;
  auto* cover = app.add_subcommand("cover", "Fresh-neighbour cover sequence of a bipartite graph");
  cover->add_option("--graph", graph_path, "file with one 'a,b' edge per line")->required()->check(CLI::ExistingFile);

  auto* selftest = app.add_subcommand("selftest", "Run every acceptance check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*extremal) {
      const auto result = max_fib_count(universe, size, threads);
      detail::emit(out, detail::dump(to_json(result)), out_path);
      return result.max_count <= size ? kOk : kViolation;
    }
    if (*lucas || *graph) {
      const auto seq = parse::sequence(seq_text);
      const GraphMode mode = mode_text == "two" ? GraphMode::kTwoClass : GraphMode::kOneClass;
      if (parse::has_fraction(set_text)) {
        const auto el = parse::rational_list(set_text);
        return *lucas ? detail::run_lucas_bound(el, seq, out_path, out) : detail::run_graph(el, seq, mode, dump_path, out);
      }
      const auto el = parse::natural_list(set_text);
      return *lucas ? detail::run_lucas_bound(el, seq, out_path, out) : detail::run_graph(el, seq, mode, dump_path, out);
    }
    if (*win) {
      const auto f = parse::polynomial(poly_text);
      const auto filter = filter_text == "mid" ? PrimeFilter::kMidRange : PrimeFilter::kAboveR;
      std::optional<AdmissibleResidue> residue;
      if (!residue_text.empty()) residue = admissible_residue(f);
      const auto stats = window_stats(f, parse::integer(r_text), window, filter, residue);
      std::ostringstream csv;
      write_window_csv(csv, stats);
      detail::emit(out, csv.str(), out_path);
      return kOk;
    }
    if (*wit) {
      const auto factors = parse::poly_factors(factors_text);
      const auto report = window_witness(factors, parse::integer(r_text), window, gamma);
      detail::emit(out, detail::dump(to_json(report)), out_path);
      return kOk;
    }
    if (*cover) {
      std::ifstream in(graph_path);
      const auto lg = parse::bipartite_edges(in);
      const auto seq = cover_sequence(lg.graph);
      Json labels = Json::array();
      for (std::size_t b : seq) labels.push_back(lg.b_labels[b]);
      const bool valid = verify_cover(lg.graph, seq);
      out << detail::dump(Json{{"degree_bound", lg.graph.degree_bound()},
                               {"b_count", lg.graph.b_count()},
                               {"k", seq.size()},
                               {"valid", valid},
                               {"sequence", labels}});
      return valid && seq.size() * lg.graph.degree_bound() >= lg.graph.b_count() ? kOk : kViolation;
    }
    if (*selftest) {
      bool all = true;
      for (const auto& check : verify::all_criteria()) {
        const auto r = verify::timed(check);
        out << verify::format_line(r) << "\n" << std::flush;
        all = all && r.passed;
      }
      return all ? kOk : kViolation;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kGuard;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace prodseq::cli
