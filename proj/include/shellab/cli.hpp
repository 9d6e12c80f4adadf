// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shellab/classes.hpp"
#include "shellab/codim_graph.hpp"
#include "shellab/complex.hpp"
#include "shellab/h_assignment.hpp"
#include "shellab/io.hpp"
#include "shellab/monomial.hpp"
#include "shellab/poset.hpp"
#include "shellab/shelling.hpp"

namespace shellab::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitInternalError = 4;

inline int exit_code(Answer a) {
  switch (a) {
    case Answer::yes: return kExitYes;
    case Answer::no: return kExitNo;
    case Answer::undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

struct Args {
  std::string command;
  std::string file;
  bool strong = false;
  bool as_listed = false;
  bool dot = false;
  bool linear_quotients = false;
  std::vector<std::size_t> order;
  std::vector<int> counts;
  std::vector<int> ranks;
  std::vector<int> interval;
  std::uint64_t max_nodes = 0;
  unsigned threads = 1;
};

namespace detail {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

inline SearchOptions options(const Args& a) { return {a.max_nodes, a.threads}; }

template <class T>
Certificate certificate(std::string question, const SearchOutcome<T>& o, double millis) {
  Certificate c;
  c.question = std::move(question);
  c.answer = o.answer;
  c.nodes = o.nodes;
  c.millis = millis;
  return c;
}

template <std::size_t W>
int run_complex(const Args& a, const std::string& text, std::ostream& out, std::ostream& err) {
  auto parsed = parse_complex<W>(text, &err);
  const auto& c = parsed.complex;
  const auto opts = options(a);
  Stopwatch clock;

  if (a.command == "check-order") {
    FacetOrder ord;
    if (a.as_listed) {
      if (!parsed.dropped.empty())
        throw InputError("--as-listed needs a file without non-maximal sets");
      ord = parsed.listed;
    } else {
      ord = FacetOrder(a.order);
    }
    Certificate cert;
    cert.question = a.strong ? "strong_shelling_order" : "shelling_order";
    cert.answer = (a.strong ? is_strong_shelling_order(c, ord) : is_shelling_order(c, ord))
                      ? Answer::yes
                      : Answer::no;
    cert.order = ord;
    cert.millis = clock.millis();
    out << to_json(cert, c).dump(2) << "\n";
    return exit_code(cert.answer);
  }

  if (a.command == "search") {
    const auto o = a.strong ? search_strong_shelling_order(c, opts)
                            : search_shelling_order(c, opts);
    auto cert = certificate(a.strong ? "strongly_shellable" : "shellable", o, clock.millis());
    cert.order = o.witness;
    out << to_json(cert, c).dump(2) << "\n";
    return exit_code(cert.answer);
  }

  if (a.command == "h-decide") {
    const auto o = a.strong ? decide_strongly_shellable_via_h(c, opts)
                            : decide_shellable_via_h(c, opts);
    auto cert = certificate(a.strong ? "strongly_shellable" : "shellable", o, clock.millis());
    if (o.witness) {
      cert.order = o.witness->order;
      cert.h_assignment = o.witness->assignment;
    }
    auto j = to_json(cert, c);
    if (o.witness) j["removal"] = o.witness->removal;
    out << j.dump(2) << "\n";
    return exit_code(cert.answer);
  }

  if (a.command == "gamma") {
    const auto g = build_gamma(c);
    const auto m = graph_metrics(g.graph);
    const bool harmonious = harmonious_violations(c, g).empty();
    if (a.dot) {
      out << "// harmonious=" << (harmonious ? "true" : "false") << " girth=" << m.girth
          << " diameter=" << (m.diameter ? std::to_string(*m.diameter) : "inf") << "\n";
      out << to_dot(c, g);
    } else {
      nlohmann::json j;
      j["question"] = "harmonious";
      j["answer"] = harmonious ? "yes" : "no";
      j["facets"] = facets_json(c);
      auto edges = nlohmann::json::array();
      for (std::size_t i = 0; i < g.size(); ++i)
        for (auto k : g.graph.neighbors(i))
          if (i < k) edges.push_back({i, k});
      j["edges"] = edges;
      j["connected"] = m.connected;
      j["girth"] = m.girth;
      j["diameter"] = m.diameter ? nlohmann::json(*m.diameter) : nlohmann::json(nullptr);
      out << j.dump(2) << "\n";
    }
    return harmonious ? kExitYes : kExitNo;
  }

  if (a.command == "classify") {
    const auto r = classify(c, opts);
    nlohmann::json j;
    j["facets"] = facets_json(c);
    j["pure"] = r.pure;
    for (const auto& [name, v] : r.flags()) j["flags"][name] = std::string(to_string(v));
    j["weakly_matroid_vacuous_pairs"] = r.weakly_matroid_vacuous_pairs;
    j["stats"] = {{"millis", clock.millis()}};
    out << j.dump(2) << "\n";
    return kExitYes;
  }

  if (a.command == "ideal") {
    const auto ideal = facet_ideal(c);
    nlohmann::json j;
    auto gens = nlohmann::json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    j["generators"] = gens;
    if (!a.linear_quotients) {
      out << j.dump(2) << "\n";
      return kExitYes;
    }
    const auto o = search_linear_quotient_order(ideal, opts);
    j["question"] = "linear_quotients";
    j["answer"] = std::string(to_string(o.answer));
    if (o.witness) j["order"] = o.witness->indices();
    j["stats"] = {{"nodes", o.nodes}, {"millis", clock.millis()}};
    out << j.dump(2) << "\n";
    return exit_code(o.answer);
  }

  if (a.command == "expand") {
    if (a.counts.size() != static_cast<std::size_t>(c.n()))
      throw InputError("--counts needs exactly n = " + std::to_string(c.n()) + " entries");
    int total = 0;
    for (int s : a.counts) total += s > 0 ? s : 0;
    if (total > BasicFace<W>::kMaxVertex)
      throw InputError("expansion needs " + std::to_string(total) +
                       " vertices, more than this width supports");
    out << serialize(expansion(c, std::span<const int>(a.counts)));
    return kExitYes;
  }

  throw InputError("unknown command " + a.command);
}

inline int run_poset(const Args& a, const std::string& text, std::ostream& out) {
  auto p = parse_poset(text);
  if (!a.ranks.empty()) p = rank_selected(p, std::set<int>(a.ranks.begin(), a.ranks.end()));
  if (!a.interval.empty()) {
    if (a.interval.size() != 2) throw InputError("--interval needs two elements");
    p = interval(p, a.interval[0], a.interval[1]);
  }
  if (p.size() > Face::kMaxVertex) throw InputError("poset too large");
  Stopwatch clock;
  const auto c = order_complex(p);
  const auto o = search_strong_shelling_order(c, options(a));
  auto cert = certificate("strongly_shellable", o, clock.millis());
  cert.order = o.witness;
  auto j = to_json(cert, c);
  j["poset_size"] = p.size();
  j["pure"] = p.is_pure();
  out << j.dump(2) << "\n";
  return exit_code(o.answer);
}

inline std::uint64_t env_budget() {
  const char* s = std::getenv("SHELLAB_MAX_NODES");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  const auto v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("SHELLAB_MAX_NODES must be a positive integer");
  return v;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Args a;
  CLI::App app{"Shellability toolkit for simplicial complexes", "shellab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::uint64_t max_nodes = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", a.file, "input file, or - for stdin")->required();
    sub->add_option("--max-nodes", max_nodes, "search node budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* check = app.add_subcommand("check-order", "verify a facet order");
  add_common(check);
  check->add_flag("--strong", a.strong, "check the strong conditions");
  auto* order_opt = check->add_option("--order", a.order, "canonical facet indices")
                        ->delimiter(',');
  auto* listed_opt = check->add_flag("--as-listed", a.as_listed, "use the file's facet order");
  order_opt->excludes(listed_opt);

  auto* search = app.add_subcommand("search", "search a (strong) shelling order");
  add_common(search);
  search->add_flag("--strong", a.strong, "search a strong shelling order");

  auto* gamma = app.add_subcommand("gamma", "codimension one graph");
  add_common(gamma);
  gamma->add_flag("--dot", a.dot, "write Graphviz DOT");

  auto* cls = app.add_subcommand("classify", "class membership report");
  add_common(cls);

  auto* hd = app.add_subcommand("h-decide", "decide via h-assignments (pure input)");
  add_common(hd);
  hd->add_flag("--strong", a.strong, "remove strong candidates only");

  auto* ideal = app.add_subcommand("ideal", "facet ideal");
  add_common(ideal);
  ideal->add_flag("--linear-quotients", a.linear_quotients, "search a linear quotients order");

  auto* poset = app.add_subcommand("poset", "strong shellability of a poset (cover list)");
  add_common(poset);
  poset->add_option("--ranks", a.ranks, "rank selection, e.g. 1,3")->delimiter(',');
  poset->add_option("--interval", a.interval, "interval x,y")->delimiter(',');

  auto* expand = app.add_subcommand("expand", "(s_1,...,s_n)-expansion");
  add_common(expand);
  expand->add_option("--counts", a.counts, "positive counts s_1,...,s_n")
      ->delimiter(',')
      ->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  a.command = app.get_subcommands().front()->get_name();
  try {
    a.max_nodes = max_nodes != 0 ? max_nodes : detail::env_budget();
    if (a.command == "check-order" && a.order.empty() && !a.as_listed)
      throw InputError("check-order needs --order or --as-listed");
    const auto text = detail::read_input(a.file, in);
    if (a.command == "poset") return detail::run_poset(a, text, out);
    std::istringstream probe(text);
    const int n = read_raw_complex(probe).n;
    if (n <= BasicFace<2>::kMaxVertex) return detail::run_complex<2>(a, text, out, err);
    if (n <= BasicFace<8>::kMaxVertex) return detail::run_complex<8>(a, text, out, err);
    throw InputError("vertex count " + std::to_string(n) + " exceeds 512");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace shellab::cli
