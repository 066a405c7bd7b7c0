#include "krorb/cli.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "krorb/decomposition.hpp"
#include "krorb/group.hpp"
#include "krorb/kr_graph.hpp"
#include "krorb/orbits.hpp"
#include "krorb/realization.hpp"

namespace krorb {
namespace {

// Whole treefile contents; "-" means standard input.
std::string read_tree_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Wreath-product calculus and Kronrod-Reeb orbit verifier", "krorb"};
  app.require_subcommand(1);

  std::string word;
  std::string treefile;
  std::string format = "text";
  int fuzz_n = 0;
  int fuzz_depth = 0;
  std::uint64_t fuzz_seed = 0;
  int fuzz_children = 3;
  int fuzz_m = 3;

  CLI::App* parse_cmd = app.add_subcommand("parse", "Print the canonical form of a word");
  parse_cmd->add_option("word", word, "realization word")->required();

  CLI::App* beta1_cmd = app.add_subcommand("beta1", "Print the first Betti number of a word");
  beta1_cmd->add_option("word", word, "realization word")->required();

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "Print the normalized form of a word");
  normalize_cmd->add_option("word", word, "realization word")->required();

  CLI::App* group_cmd =
      app.add_subcommand("group", "Print the raw and normalized stabilizer group of a tree");
  group_cmd->add_option("treefile", treefile, "tree file, or - for standard input")->required();

  CLI::App* orbits_cmd =
      app.add_subcommand("orbits", "Print the internal-edge orbit partition and both counts");
  orbits_cmd->add_option("treefile", treefile, "tree file, or - for standard input")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check beta1 against both orbit counts; exit 1 on mismatch");
  verify_cmd->add_option("treefile", treefile, "tree file, or - for standard input")->required();
  verify_cmd->add_option("--format", format, "text or record")
      ->check(CLI::IsMember({"text", "record"}));

  CLI::App* fuzz_cmd =
      app.add_subcommand("fuzz", "Verify random trees; exit 1 and dump reproducers on failure");
  fuzz_cmd->add_option("--n", fuzz_n, "number of trees")->required()->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--depth", fuzz_depth, "maximum tree depth")
      ->required()
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz_seed, "campaign seed")->required();
  fuzz_cmd->add_option("--max-children", fuzz_children, "children per atom bound")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-m", fuzz_m, "multiplicity bound")->check(CLI::PositiveNumber);

  CLI::App* dot_cmd = app.add_subcommand("dot", "Emit the Kronrod-Reeb graph as DOT");
  dot_cmd->add_option("treefile", treefile, "tree file, or - for standard input")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) {
      out << render(parse_realization(word)) << "\n";
      return 0;
    }
    if (beta1_cmd->parsed()) {
      out << beta1(parse_realization(word)) << "\n";
      return 0;
    }
    if (normalize_cmd->parsed()) {
      out << render(normalize(parse_realization(word))) << "\n";
      return 0;
    }
    if (group_cmd->parsed()) {
      const DecompositionTree tree = parse_tree(read_tree_text(treefile, in));
      const GroupExpr g = stabilizer_group(tree);
      out << "raw: " << render(g) << "\n";
      out << "normalized: " << render(normalize(g)) << "\n";
      return 0;
    }
    if (orbits_cmd->parsed()) {
      const DecompositionTree tree = parse_tree(read_tree_text(treefile, in));
      const KRGraph graph = build_kr_graph(tree);
      const std::vector<std::vector<int>> orbits =
          edge_orbits(graph, rotation_generators(tree, graph));
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        out << "orbit " << i << ":";
        for (int e : orbits[i]) out << " e" << e;
        out << "\n";
      }
      out << "orbits_bruteforce: " << orbits.size() << "\n";
      out << "orbits_recursive: " << orbit_count_recursive(tree) << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      const DecompositionTree tree = parse_tree(read_tree_text(treefile, in));
      const VerificationReport report = verify_tree(tree);
      if (format == "record") {
        out << report.record_line() << "\n";
      } else {
        out << report.text_block();
      }
      return report.pass ? 0 : 1;
    }
    if (fuzz_cmd->parsed()) {
      // Per-tree seeds are drawn up front so report order is the index
      // order no matter how verification is scheduled.
      std::mt19937_64 master(fuzz_seed);
      std::vector<std::uint64_t> seeds(static_cast<std::size_t>(fuzz_n));
      for (std::uint64_t& s : seeds) s = master();
      int passed = 0;
      for (int i = 0; i < fuzz_n; ++i) {
        const DecompositionTree tree =
            random_tree(fuzz_depth, fuzz_children, fuzz_m, seeds[static_cast<std::size_t>(i)]);
        const VerificationReport report = verify_tree(tree);
        if (report.pass) {
          ++passed;
        } else {
          out << "fail index=" << i << " seed=" << seeds[static_cast<std::size_t>(i)] << "\t"
              << report.record_line() << "\n";
        }
      }
      out << passed << "/" << fuzz_n << " pass\n";
      return passed == fuzz_n ? 0 : 1;
    }
    if (dot_cmd->parsed()) {
      const DecompositionTree tree = parse_tree(read_tree_text(treefile, in));
      out << export_dot(build_kr_graph(tree));
      return 0;
    }
  } catch (const ParseError& e) {
    err << e.positioned() << "\n";
    return 2;
  } catch (const TreeError& e) {
    err << e.path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace krorb
