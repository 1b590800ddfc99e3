// wheelfree: classify graphs as (wheel, antiwheel)-free with certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace {

using namespace wheelfree::cli;

// Opens path, or returns std::cin for "-" / empty.
std::istream& open_input(const std::string& path, std::ifstream& holder) {
  if (path.empty() || path == "-") return std::cin;
  holder.open(path);
  if (!holder) throw std::runtime_error("cannot open " + path);
  return holder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize graphs with no induced wheel or antiwheel"};
  app.require_subcommand(1);

  std::string format = "graph6";
  const unsigned env_jobs = default_jobs();

  // classify
  auto* classify = app.add_subcommand("classify", "Classify graphs (graph6 lines or one edge list)");
  std::string classify_input;
  ClassifyOptions copt;
  copt.jobs = env_jobs;
  classify->add_option("input", classify_input, "Input file, '-' or omitted for stdin");
  classify->add_option("--format", format, "graph6 | edgelist")->capture_default_str();
  classify->add_flag("--json", copt.json, "Emit one JSON certificate document per graph");
  classify->add_flag("--quiet,-q", copt.quiet, "No output, exit code only");
  classify->add_option("--jobs,-j", copt.jobs, "Worker threads for batch input (default $WHEELFREE_JOBS or 1)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a JSON certificate against a graph");
  std::string graph_path;
  std::string cert_path;
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();
  verify->add_option("--format", format, "graph6 | edgelist")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph from a structural class");
  GenOptions gopt;
  gen->add_option("class", gopt.kind, "class-a | class-b | class-c | split | random | chain")->required();
  gen->add_option("--x", gopt.x, "class-a: |X|; class-c: size of the first clique");
  gen->add_option("--y", gopt.y, "class-c: size of the second clique");
  gen->add_option("--e", gopt.apex, "class-a: apex neighbor in {c,d}: none | c | d");
  gen->add_option("--blocks", gopt.h, "class-b / chain: number of staircase blocks");
  gen->add_option("--xs", gopt.xs, "class-b / chain: X block sizes")->delimiter(',');
  gen->add_option("--ys", gopt.ys, "class-b / chain: Y block sizes")->delimiter(',');
  gen->add_option("--z", gopt.z, "class-b: |Z|");
  gen->add_option("--w", gopt.w, "class-b: |W|");
  gen->add_option("--n", gopt.n, "split / random: vertex count");
  gen->add_option("--p", gopt.p, "split / random: edge probability");
  gen->add_option("--seed", gopt.seed, "Random seed");
  gen->add_flag("--shuffle", gopt.shuffle, "Relabel vertices with a random permutation drawn from --seed");
  gen->add_option("--format", format, "graph6 | edgelist")->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "Check the three equivalent conditions on small graphs");
  CheckOptions kopt;
  kopt.jobs = env_jobs;
  std::size_t max_n = 0;
  std::vector<std::string> sample;
  std::string corpus;
  auto* max_opt = check->add_option("--max-n", max_n, "Enumerate every labeled graph with n <= N (N <= 7)");
  auto* sample_opt = check->add_option("--sample", sample, "Sample COUNT graphs G(n, p): --sample n count p")
                         ->expected(3);
  auto* corpus_opt = check->add_option("--corpus", corpus, "File of graph6 lines to check");
  check->add_option("--seed", kopt.seed, "Random seed for --sample");
  check->add_option("--jobs,-j", kopt.jobs, "Worker threads (default $WHEELFREE_JOBS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  try {
    if (*classify) {
      copt.format = parse_format(format);
      std::ifstream holder;
      return cmd_classify(open_input(classify_input, holder), copt, std::cout, std::cerr);
    }
    if (*verify) {
      std::ifstream gf;
      std::ifstream cf;
      return cmd_verify(open_input(graph_path, gf), parse_format(format), open_input(cert_path, cf), std::cout,
                        std::cerr);
    }
    if (*gen) {
      gopt.format = parse_format(format);
      return cmd_gen(gopt, std::cout, std::cerr);
    }
    if (*check) {
      if (*max_opt) kopt.max_n = max_n;
      if (*sample_opt) {
        kopt.sample_n = std::stoul(sample[0]);
        kopt.sample_count = std::stoull(sample[1]);
        kopt.sample_p = std::stod(sample[2]);
      }
      if (*corpus_opt) kopt.corpus = corpus;
      if (!kopt.max_n && !kopt.sample_n && !kopt.corpus) {
        std::cerr << "check: give --max-n, --sample or --corpus\n";
        return exit_error;
      }
      return cmd_check(kopt, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
