#include "cadiv/commands.hpp"

#include <iostream>
#include <vector>

#include "CLI11.hpp"

int main(int argc, char** argv) {
  using namespace cadiv::io;

  CLI::App app{"Exact analysis of surface germs behind divisorial contractions over cA points"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cadiv 0.1.0");

  AnalyzeOptions analyze;
  std::vector<std::int64_t> axial;
  auto* a = app.add_subcommand("analyze", "Analyze a graph document and check the class conditions");
  a->add_option("file", analyze.path, "Graph document (JSON)")->required();
  a->add_option("--class", analyze.cls, "Neighborhood class")
      ->check(CLI::IsMember({"auto", "normal", "nonnormal", "semistable"}));
  a->add_flag("--json", analyze.json, "Machine-readable report");
  a->add_option("--axial", axial, "Axial multiplicities k,k' (semistable)")->delimiter(',')->expected(2);

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "Write a bounded catalog");
  e->add_option("kind", enumerate.kind, "semistable | normal")
      ->required()
      ->check(CLI::IsMember({"semistable", "normal"}));
  e->add_option("--k", enumerate.k, "dd' for semistable data (X is cA_{k-1})");
  e->add_option("--bound", enumerate.bound, "Pell search bound on |y|");
  e->add_option("--max-n", enumerate.max_n, "Largest index n (normal)");
  e->add_option("--max-d", enumerate.max_d, "Largest d (normal)");
  e->add_option("--max-chain", enumerate.max_chain, "Longest DuVal tail (normal)");
  e->add_option("--out", enumerate.out, "Output path (default: standard output)");

  std::vector<std::int64_t> fraction;
  std::string chain;
  auto* h = app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/a, or recognition of a chain");
  h->add_option("n_a", fraction, "n a")->expected(2);
  h->add_option("--chain", chain, "Comma-separated chain, e.g. 2,5");

  std::string dot_path;
  auto* d = app.add_subcommand("dot", "Render a graph document in DOT");
  d->add_option("file", dot_path, "Graph document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*a) {
    if (!axial.empty()) analyze.axial = std::pair{axial[0], axial[1]};
    return cmd_analyze(analyze, std::cout, std::cerr);
  }
  if (*e) {
    if (enumerate.kind == "semistable" && enumerate.k < 2) {
      std::cerr << "cadiv: enumerate semistable needs --k >= 2\n";
      return kExitInputError;
    }
    return cmd_enumerate(enumerate, std::cout, std::cerr);
  }
  if (*h) {
    HjOptions opt;
    if (!fraction.empty()) opt.fraction = std::pair{fraction[0], fraction[1]};
    if (!chain.empty()) opt.chain = chain;
    return cmd_hj(opt, std::cout, std::cerr);
  }
  return cmd_dot(dot_path, std::cout, std::cerr);
}
