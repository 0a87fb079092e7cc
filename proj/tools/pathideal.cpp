#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pathideal/closed_forms.hpp"
#include "pathideal/oracle.hpp"
#include "pathideal/resolution.hpp"
#include "pathideal/tree_io.hpp"

namespace {

using namespace pathideal;

RootedForest line_forest(long long n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return RootedForest::from_edges(edges, {1});
}

void print_table(const BettiTable& table, const std::string& format) {
  if (format == "json") {
    std::cout << table.to_json() << '\n';
  } else {
    std::cout << table.to_tsv();
  }
}

int run_check_linear(const RootedForest& forest, int t) {
  bool linear = has_linear_resolution(forest, t);
  std::cout << "linear\t" << (linear ? "true" : "false") << '\n';
  std::vector<RootedForest> active;
  for (const RootedForest& comp : forest.components()) {
    if (compute_metrics(comp).height >= t - 1) active.push_back(comp);
  }
  if (active.empty()) {
    std::cout << "clean-empty\ttrue\n";
  } else if (active.size() == 1) {
    RootedForest clean = clean_form(active.front(), t);
    BroomResult br = is_broom(clean, t);
    std::cout << "clean-broom\t" << (br.broom ? "true" : "false") << '\n';
    if (br.broom) std::cout << "clean-handle\t" << br.handle_length << '\n';
    std::cout << "clean-height\t" << compute_metrics(clean).height << '\n';
  } else {
    std::cout << "components\t" << active.size() << '\n';
  }
  return 0;
}

int run_line(long long n, int t, bool verify) {
  std::cout << "pd\t" << line_pd(n, t) << '\n';
  std::cout << "reg\t" << line_reg(n, t) << '\n';
  std::cout << "betti_iit\t";
  bool first = true;
  for (long long i = 0;; ++i) {
    Count value = line_betti_linear(n, t, i);
    if (i > 0 && value == 0) break;
    std::cout << (first ? "" : " ") << value;
    first = false;
  }
  std::cout << '\n';
  if (!verify) return 0;
  if (n > 30) {
    std::cout << "verify\tskipped\n";
    return 0;
  }
  BettiTable table = betti(line_forest(n), t);
  bool ok = table.projective_dimension() == line_pd(n, t) &&
            table.regularity() == line_reg(n, t);
  int pd = table.projective_dimension();
  for (long long i = 0; i <= pd + 1 && ok; ++i) {
    ok = table.at(static_cast<int>(i), static_cast<int>(i * t)) ==
         line_betti_linear(n, t, i);
  }
  for (int i = 0; i <= pd && ok; ++i) {
    for (int j = 0; j <= n && ok; ++j) {
      ok = (table.at(i, j) != 0) == line_nonzero(n, t, i, j);
    }
  }
  std::cout << "verify\t" << (ok ? "ok" : "mismatch") << '\n';
  return ok ? 0 : 1;
}

int run_compare(const RootedForest& forest, int t, int characteristic) {
  BettiTable recursion = betti(forest, t);
  BettiTable oracle =
      hochster_betti(SquarefreeIdeal::path_ideal(forest, t), characteristic);
  if (recursion == oracle) {
    std::cout << "match\n";
    return 0;
  }
  std::map<BettiTable::Key, int> keys;
  for (const auto& [k, c] : recursion.entries()) keys[k] = 1;
  for (const auto& [k, c] : oracle.entries()) keys[k] = 1;
  for (const auto& [k, unused] : keys) {
    if (recursion.at(k.first, k.second) != oracle.at(k.first, k.second)) {
      std::cout << "mismatch\t" << k.first << '\t' << k.second << '\t'
                << recursion.at(k.first, k.second) << '\t'
                << oracle.at(k.first, k.second) << '\n';
      break;
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path ideal calculator for rooted forests"};
  app.require_subcommand(1);

  std::string file;
  int t = 2;
  long long n = 0;
  long long strand_index = 1;
  int characteristic = 0;
  std::string format = "tsv";
  bool verify = false;

  auto add_tree_verb = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "tree file")->required();
    sub->add_option("--t", t, "path vertex count")
        ->required()
        ->check(CLI::PositiveNumber);
    return sub;
  };

  CLI::App* generators =
      add_tree_verb("generators", "list the path ideal generators");
  CLI::App* betti_cmd =
      add_tree_verb("betti", "graded Betti table of the quotient");
  betti_cmd->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  CLI::App* reg_cmd = add_tree_verb("reg", "regularity of the quotient");
  CLI::App* pd_cmd = add_tree_verb("pd", "projective dimension");
  CLI::App* reg_bound_cmd =
      add_tree_verb("reg-bound", "leaf and packing regularity bound");
  CLI::App* strand_cmd =
      add_tree_verb("linear-strand", "linear strand entry of the ideal");
  strand_cmd->add_option("--i", strand_index, "strand index, i >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::App* check_linear_cmd =
      add_tree_verb("check-linear", "linear resolution classification");
  CLI::App* clean_cmd = add_tree_verb("clean", "print the clean form");
  CLI::App* broom_cmd = add_tree_verb("broom", "broom classification");
  CLI::App* oracle_cmd =
      add_tree_verb("oracle", "Betti table from simplicial homology");
  oracle_cmd->add_option("--char", characteristic, "0 or a prime")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  CLI::App* compare_cmd =
      add_tree_verb("compare", "recursion versus homology oracle");
  compare_cmd->add_option("--char", characteristic, "0 or a prime")
      ->check(CLI::NonNegativeNumber);

  CLI::App* line_cmd =
      app.add_subcommand("line", "closed forms for path graphs");
  line_cmd->add_option("--n", n, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  line_cmd->add_option("--t", t, "path vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  line_cmd->add_flag("--verify", verify,
                     "also run the recursion when n <= 30");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*line_cmd) return run_line(n, t, verify);

    RootedForest forest = load_tree_file(file);
    if (*generators) {
      for (const VertexList& path : enumerate_paths(forest, t)) {
        for (std::size_t k = 0; k < path.size(); ++k) {
          std::cout << (k ? " " : "") << path[k];
        }
        std::cout << '\n';
      }
      return 0;
    }
    if (*betti_cmd) {
      print_table(betti(forest, t), format);
      return 0;
    }
    if (*reg_cmd) {
      std::cout << betti(forest, t).regularity() << '\n';
      return 0;
    }
    if (*pd_cmd) {
      std::cout << betti(forest, t).projective_dimension() << '\n';
      return 0;
    }
    if (*reg_bound_cmd) {
      std::cout << regularity_bound(forest, t) << '\n';
      return 0;
    }
    if (*strand_cmd) {
      std::cout << linear_strand(forest, t, strand_index) << '\n';
      return 0;
    }
    if (*check_linear_cmd) return run_check_linear(forest, t);
    if (*clean_cmd) {
      std::cout << format_tree(clean_form(forest, t));
      return 0;
    }
    if (*broom_cmd) {
      BroomResult br = is_broom(forest, t);
      std::cout << "broom\t" << (br.broom ? "true" : "false") << '\n';
      if (br.broom) std::cout << "handle\t" << br.handle_length << '\n';
      return 0;
    }
    if (*oracle_cmd) {
      print_table(hochster_betti(SquarefreeIdeal::path_ideal(forest, t),
                                 characteristic),
                  format);
      return 0;
    }
    if (*compare_cmd) return run_compare(forest, t, characteristic);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
