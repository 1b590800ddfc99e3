#pragma once

// Subcommand bodies for the wheelfree CLI, written against streams so the
// test suites can drive them without spawning a process.
//
// Exit codes: 0 free / success, 1 not free / verification failed, 2 usage,
// parse or IO error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "wheelfree/documents.hpp"
#include "wheelfree/wheelfree.hpp"

namespace wheelfree::cli {

inline constexpr int exit_free = 0;
inline constexpr int exit_not_free = 1;
inline constexpr int exit_error = 2;

enum class GraphFormat { graph6, edgelist };

inline GraphFormat parse_format(const std::string& s) {
  if (s == "graph6" || s == "g6") return GraphFormat::graph6;
  if (s == "edgelist" || s == "edges") return GraphFormat::edgelist;
  throw std::invalid_argument("unknown format '" + s + "' (expected graph6 or edgelist)");
}

/// --jobs default: WHEELFREE_JOBS if set and positive, else 1.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("WHEELFREE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// One entry per input graph: the graph or the reason it could not be read.
using GraphOrError = std::variant<Graph, std::string>;

inline std::vector<GraphOrError> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<GraphOrError> out;
  if (format == GraphFormat::edgelist) {
    try {
      out.emplace_back(parse_edge_list(in));
    } catch (const std::exception& e) {
      out.emplace_back(std::string(e.what()));
    }
    return out;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.emplace_back(parse_graph6(line));
    } catch (const std::exception& e) {
      out.emplace_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) out.emplace_back(std::string("no graph in input"));
  return out;
}

inline std::string join(const std::vector<Vertex>& vs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? sep : "") + std::to_string(vs[i]);
  return s;
}

inline std::string summary_line(const Classification& c) {
  if (!c.is_free()) {
    const auto& w = std::get<WheelWitness>(c.certificate);
    return std::string("not-free ") + (w.in_complement ? "antiwheel" : "wheel") + " hole=" +
           join(w.hole.cycle, "-") + " hub=" + std::to_string(w.hub);
  }
  return "free " + std::string(c.verdict()) + (c.complemented ? " (complement)" : "");
}

struct ClassifyOptions {
  GraphFormat format = GraphFormat::graph6;
  bool json = false;
  bool quiet = false;
  unsigned jobs = 1;
};

inline int cmd_classify(std::istream& in, const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto inputs = read_graphs(in, opt.format);
  std::vector<std::optional<Classification>> results(inputs.size());
  std::vector<std::string> failures(inputs.size());

  auto work = [&](std::size_t i) {
    if (const auto* msg = std::get_if<std::string>(&inputs[i])) {
      failures[i] = *msg;
      return;
    }
    try {
      results[i] = classify(std::get<Graph>(inputs[i]));
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(inputs.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < inputs.size(); i += jobs) work(i);
      });
  }

  int code = exit_free;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!results[i]) {
      err << "error: " << failures[i] << '\n';
      code = exit_error;
      continue;
    }
    const auto& c = *results[i];
    if (!c.is_free() && code != exit_error) code = exit_not_free;
    if (opt.quiet) continue;
    if (opt.json)
      out << certificate_document(std::get<Graph>(inputs[i]).order(), c).dump() << '\n';
    else
      out << summary_line(c) << '\n';
  }
  return code;
}

/// Verifies the certificate document in cert_in against the first graph of graph_in.
inline int cmd_verify(std::istream& graph_in, GraphFormat format, std::istream& cert_in, std::ostream& out,
                      std::ostream& err) {
  const auto graphs = read_graphs(graph_in, format);
  if (const auto* msg = std::get_if<std::string>(&graphs.front())) {
    err << "error: " << *msg << '\n';
    return exit_error;
  }
  const Graph& g = std::get<Graph>(graphs.front());
  Classification c;
  std::size_t n = 0;
  try {
    c = parse_certificate_document(json::parse(cert_in), &n);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  if (n != g.order()) {
    out << "rejected: certificate is for n=" << n << " but the graph has n=" << g.order() << '\n';
    return exit_not_free;
  }
  const auto r = verify_classification(g, c);
  if (!r) {
    out << "rejected: " << r.reason << '\n';
    return exit_not_free;
  }
  out << "ok " << c.verdict() << '\n';
  return exit_free;
}

struct GenOptions {
  std::string kind;  // class-a, class-b, class-c, split, random, chain
  std::size_t x = 1;
  std::size_t y = 2;
  std::string apex = "none";
  std::size_t h = 1;
  std::vector<std::size_t> xs{2};
  std::vector<std::size_t> ys{2};
  std::size_t z = 0;
  std::size_t w = 0;
  std::size_t n = 8;
  double p = 0.5;
  Seed seed = 0;
  bool shuffle = false;
  GraphFormat format = GraphFormat::graph6;
};

inline Graph generate(const GenOptions& o) {
  Graph g;
  if (o.kind == "class-a") {
    ApexMode mode = o.apex == "c" ? ApexMode::c : o.apex == "d" ? ApexMode::d : ApexMode::none;
    if (o.apex != "none" && o.apex != "c" && o.apex != "d") throw std::invalid_argument("--e must be none, c or d");
    g = gen_class_a(o.x, mode);
  } else if (o.kind == "class-b") {
    g = gen_class_b(o.h, o.xs, o.ys, o.z, o.w);
  } else if (o.kind == "class-c") {
    g = gen_class_c(o.x, o.y);
  } else if (o.kind == "split") {
    g = gen_split(o.n, o.p, o.seed);
  } else if (o.kind == "random") {
    g = gen_random(o.n, o.p, o.seed);
  } else if (o.kind == "chain") {
    g = gen_chain(o.h, o.xs, o.ys);
  } else {
    throw std::invalid_argument("unknown generator '" + o.kind + "'");
  }
  return o.shuffle ? shuffled(g, o.seed) : g;
}

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = generate(o);
    if (o.format == GraphFormat::graph6) out << serialize_graph6(g) << '\n';
    else write_edge_list(out, g);
    return exit_free;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
}

struct CheckOptions {
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> sample_n;
  std::uint64_t sample_count = 0;
  double sample_p = 0.5;
  std::optional<std::string> corpus;
  Seed seed = 0;
  unsigned jobs = 1;
};

inline int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  try {
    AgreementReport report;
    if (o.max_n) report.merge(run_exhaustive(*o.max_n, o.jobs));
    if (o.sample_n) report.merge(run_sampled(*o.sample_n, o.sample_count, o.sample_p, o.seed, o.jobs));
    if (o.corpus) {
      std::ifstream f(*o.corpus);
      if (!f) throw std::runtime_error("cannot open " + *o.corpus);
      std::vector<Graph> graphs;
      for (auto& item : read_graphs(f, GraphFormat::graph6)) {
        if (auto* msg = std::get_if<std::string>(&item)) throw ParseError(*msg);
        graphs.push_back(std::move(std::get<Graph>(item)));
      }
      report.merge(run_corpus(graphs, o.jobs));
    }
    std::sort(report.disagreements.begin(), report.disagreements.end());
    out << report_document(report).dump(2) << '\n';
    return report.ok() ? exit_free : exit_not_free;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
}

}  // namespace wheelfree::cli
