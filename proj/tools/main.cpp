// qcrystal: crystal combinatorics for words and shifted decomposition
// tableaux.  Subcommands cover enumeration, operator application, extremal
// vectors, insertion, the word correspondence, tensor decompositions, graph
// export, and the self-verification suite.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "qcrystal/core.hpp"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/json_io.hpp"
#include "qcrystal/lr.hpp"
#include "qcrystal/tableaux.hpp"
#include "qcrystal/verify.hpp"

namespace {

using nlohmann::json;
using namespace qcrystal;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  std::string shape;
  std::string word;
  std::string format = "text";
  std::string op;
  std::string direction = "f";
  int length = 0;
  std::string tableau;
  std::string tableau2;
  std::string letters;
  bool right = false;
  std::string p_text;
  std::string q_text;
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string method = "lattice";
  bool show_words = false;
  bool include_bar = false;
  std::string level = "quick";
  unsigned seed = 20240915;
};

int cmd_enumerate(const Options& opt) {
  StrictPartition shape = StrictPartition::parse(opt.shape);
  auto all = enumerate_ssdt(shape, opt.n);
  if (opt.format == "json") {
    json out = json::array();
    for (const Ssdt& t : all) out.push_back(to_json(t));
    std::cout << json{{"tableaux", out}, {"count", all.size()}}.dump(2) << "\n";
  } else {
    for (const Ssdt& t : all) std::cout << t.str() << "\n";
    std::cout << "count " << all.size() << "\n";
  }
  return kExitOk;
}

int cmd_apply(const Options& opt) {
  Word w = Word::parse(opt.word, opt.n);
  OperatorIndex op = OperatorIndex::parse(opt.op);
  std::optional<Word> result;
  if (opt.direction == "f")
    result = apply_f(w, op);
  else if (opt.direction == "e")
    result = apply_e(w, op);
  else
    throw std::invalid_argument("--dir must be f or e");
  if (opt.format == "json") {
    json out{{"input", to_json(w)}, {"op", op.str()}, {"dir", opt.direction}};
    out["result"] = result ? to_json(*result) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (result ? result->str() : "none") << "\n";
  }
  return kExitOk;
}

int cmd_extremal(const Options& opt, bool lowest) {
  if (!opt.word.empty()) {
    Word w = Word::parse(opt.word, opt.n);
    bool flag = lowest ? is_lowest(w) : is_highest(w);
    std::cout << (flag ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (opt.length < 1) throw std::invalid_argument("--N must be positive when no --word is given");
  std::vector<Word> found;
  if (lowest) {
    // filter all words of the given length through the suffix criterion
    std::vector<int> letters(static_cast<std::size_t>(opt.length), 1);
    while (true) {
      Word w(letters, opt.n);
      if (is_lowest(w)) found.push_back(w);
      int pos = opt.length - 1;
      while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == opt.n)
        letters[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++letters[static_cast<std::size_t>(pos)];
    }
  } else {
    found = highest_weight_vectors(opt.n, opt.length);
  }
  for (const Word& w : found) std::cout << w.str() << "\n";
  std::cout << "count " << found.size() << "\n";
  return kExitOk;
}

int cmd_insert(const Options& opt) {
  Ssdt t = Ssdt::parse(opt.tableau, opt.n);
  if (!opt.tableau2.empty()) {
    Ssdt other = Ssdt::parse(opt.tableau2, opt.n);
    if (opt.right) {
      RightInsertion result = insert_tableau_right(t, other);
      if (opt.format == "json") {
        std::cout << json{{"product", to_json(result.product)},
                          {"recording", to_json(result.recording)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << result.product.str() << "\n";
        std::cout << "recording:\n" << result.recording.str() << "\n";
      }
    } else {
      Ssdt result = insert_tableau_left(t, other);
      if (opt.format == "json")
        std::cout << json{{"product", to_json(result)}}.dump(2) << "\n";
      else
        std::cout << result.str() << "\n";
    }
    return kExitOk;
  }
  Word letters = Word::parse(opt.letters, opt.n);
  if (opt.format == "json") {
    json steps = json::array();
    Ssdt cur = t;
    for (int x : letters.letters()) {
      InsertionTrace trace = insert_letter(cur, x);
      steps.push_back(json{{"letter", x},
                           {"row", trace.cell.row},
                           {"col", trace.cell.col},
                           {"result", to_json(trace.result)}});
      cur = trace.result;
    }
    std::cout << json{{"steps", steps}, {"result", to_json(cur)}}.dump(2) << "\n";
  } else {
    std::cout << insert_word(t, letters).str() << "\n";
  }
  return kExitOk;
}

int cmd_rsk(const Options& opt) {
  Word u = Word::parse(opt.word, opt.n);
  RskPair pair = rsk(u);
  if (opt.format == "json") {
    std::cout << json{{"p", to_json(pair.p)}, {"q", to_json(pair.q)}}.dump(2) << "\n";
  } else {
    std::cout << "P " << pair.p.str() << "\n";
    std::cout << "Q " << pair.q.str() << "\n";
  }
  return kExitOk;
}

int cmd_unrsk(const Options& opt) {
  Ssdt p = Ssdt::parse(opt.p_text, opt.n);
  StandardShiftedTableau q = StandardShiftedTableau::parse(opt.q_text);
  Word u = inverse_rsk(p, q);
  if (opt.format == "json")
    std::cout << json{{"word", to_json(u)}}.dump(2) << "\n";
  else
    std::cout << u.str() << "\n";
  return kExitOk;
}

json decomposition_json(const Decomposition& d) {
  json rows = json::array();
  for (const auto& [shape, mult] : d)
    rows.push_back(json{{"nu", shape.parts()}, {"multiplicity", mult}});
  return rows;
}

int cmd_lr(const Options& opt) {
  StrictPartition lambda = StrictPartition::parse(opt.lambda);
  StrictPartition mu = StrictPartition::parse(opt.mu);
  std::optional<StrictPartition> nu;
  if (!opt.nu.empty()) nu = StrictPartition::parse(opt.nu);

  Decomposition table;
  bool agree = true;
  if (opt.method == "all") {
    auto all = decompose_tensor_all(lambda, mu, opt.n);
    table = all[0].second;
    for (const auto& [m, d] : all) {
      if (d != table) {
        agree = false;
        std::cout << "method " << method_name(m) << " disagrees\n";
      }
    }
  } else {
    table = decompose_tensor(lambda, mu, opt.n, parse_method(opt.method));
  }
  if (nu) {
    Decomposition filtered;
    if (auto it = table.find(*nu); it != table.end()) filtered.insert(*it);
    table = filtered;
  }

  if (opt.format == "json") {
    json out{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"n", opt.n},
             {"method", opt.method},     {"table", decomposition_json(table)}};
    if (opt.method == "all") out["agree"] = agree;
    if (opt.show_words && nu) {
      json words = json::array();
      for (const Word& w : lr_set(lambda, mu, *nu, opt.n)) words.push_back(w.str());
      out["words"] = words;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [shape, mult] : table) std::cout << shape.str() << " " << mult << "\n";
    if (opt.show_words && nu)
      for (const Word& w : lr_set(lambda, mu, *nu, opt.n)) std::cout << "word " << w.str() << "\n";
    if (opt.method == "all") std::cout << (agree ? "methods agree" : "METHODS DISAGREE") << "\n";
  }
  return agree ? kExitOk : kExitVerifyFailed;
}

int cmd_decompose_power(const Options& opt) {
  Decomposition table = decompose_power(opt.n, opt.length);
  if (opt.format == "json") {
    std::cout << json{{"n", opt.n}, {"N", opt.length}, {"table", decomposition_json(table)}}.dump(2)
              << "\n";
  } else {
    for (const auto& [shape, mult] : table) std::cout << shape.str() << " " << mult << "\n";
  }
  return kExitOk;
}

int cmd_graph(const Options& opt) {
  Word start(opt.n);
  if (!opt.word.empty())
    start = Word::parse(opt.word, opt.n);
  else if (!opt.shape.empty())
    start = highest_tableau(StrictPartition::parse(opt.shape), opt.n).reading_word();
  else
    throw std::invalid_argument("graph needs --word or --shape");
  std::cout << to_dot(component(start, opt.include_bar));
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  VerifyLevel level;
  if (opt.level == "quick")
    level = VerifyLevel::quick;
  else if (opt.level == "full")
    level = VerifyLevel::full;
  else
    throw std::invalid_argument("--level must be quick or full");
  std::cout << "seed " << opt.seed << "\n";
  VerifyReport report = run_verification(level, opt.seed);
  for (const CheckResult& check : report.checks) {
    std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "  [" << check.range
              << "]";
    if (!check.pass) std::cout << "  counterexample: " << check.detail;
    std::cout << "\n";
  }
  std::cout << (report.all_pass() ? "all checks passed" : "verification failed") << "\n";
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crystal combinatorics for words and shifted decomposition tableaux"};
  app.require_subcommand(1);
  Options opt;

  auto add_rank = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "alphabet rank (n >= 2)")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "text or json")->default_str("text");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all tableaux of a shape");
  add_rank(enumerate);
  add_format(enumerate);
  enumerate->add_option("--shape", opt.shape, "strict partition, e.g. 3,1")->required();

  CLI::App* apply = app.add_subcommand("apply", "apply a crystal operator to a word");
  add_rank(apply);
  add_format(apply);
  apply->add_option("--word", opt.word, "input word")->required();
  apply->add_option("--op", opt.op, "operator index: 1..n-1 or 1bar..(n-1)bar")->required();
  apply->add_option("--dir", opt.direction, "f (lower) or e (raise)")->default_str("f");

  CLI::App* hw = app.add_subcommand("hw", "highest weight vectors, or test a word");
  add_rank(hw);
  hw->add_option("--word", opt.word, "word to test");
  hw->add_option("--N", opt.length, "word length to enumerate");

  CLI::App* lw = app.add_subcommand("lw", "lowest weight vectors, or test a word");
  add_rank(lw);
  lw->add_option("--word", opt.word, "word to test");
  lw->add_option("--N", opt.length, "word length to enumerate");

  CLI::App* insert = app.add_subcommand("insert", "bumping insertion into a tableau");
  add_rank(insert);
  add_format(insert);
  insert->add_option("--tableau", opt.tableau, "target tableau, rows joined by /")->required();
  insert->add_option("--letters", opt.letters, "letters to insert, as a word");
  insert->add_option("--tableau2", opt.tableau2, "tableau whose reading word is inserted");
  insert->add_flag("--right", opt.right, "wrap the first tableau around the second from the right");

  CLI::App* rsk_cmd = app.add_subcommand("rsk", "word to (insertion, recording) pair");
  add_rank(rsk_cmd);
  add_format(rsk_cmd);
  rsk_cmd->add_option("--word", opt.word, "input word")->required();

  CLI::App* unrsk = app.add_subcommand("unrsk", "pair back to the word");
  add_rank(unrsk);
  add_format(unrsk);
  unrsk->add_option("--p", opt.p_text, "insertion tableau")->required();
  unrsk->add_option("--q", opt.q_text, "recording tableau")->required();

  CLI::App* lr = app.add_subcommand("lr", "tensor product multiplicities");
  add_rank(lr);
  add_format(lr);
  lr->add_option("--lambda", opt.lambda, "left shape")->required();
  lr->add_option("--mu", opt.mu, "right shape")->required();
  lr->add_option("--nu", opt.nu, "restrict the table to one target shape");
  lr->add_option("--method", opt.method, "all|lattice|insertion|tableaux|components")
      ->default_str("lattice");
  lr->add_flag("--show-words", opt.show_words,
               "list the words behind the coefficient (needs --nu)");

  CLI::App* power = app.add_subcommand("decompose-power", "decompose the length-N word space");
  add_rank(power);
  add_format(power);
  power->add_option("--N", opt.length, "tensor power")->required();

  CLI::App* graph = app.add_subcommand("graph", "connected component as DOT text");
  add_rank(graph);
  graph->add_option("--word", opt.word, "start from this word");
  graph->add_option("--shape", opt.shape, "start from the highest tableau of this shape");
  graph->add_flag("--include-bar", opt.include_bar, "also emit the derived dashed edges");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant sweeps");
  verify->add_option("--level", opt.level, "quick or full")->default_str("quick");
  verify->add_option("--seed", opt.seed, "seed for the randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(opt);
    if (app.got_subcommand(apply)) return cmd_apply(opt);
    if (app.got_subcommand(hw)) return cmd_extremal(opt, false);
    if (app.got_subcommand(lw)) return cmd_extremal(opt, true);
    if (app.got_subcommand(insert)) return cmd_insert(opt);
    if (app.got_subcommand(rsk_cmd)) return cmd_rsk(opt);
    if (app.got_subcommand(unrsk)) return cmd_unrsk(opt);
    if (app.got_subcommand(lr)) return cmd_lr(opt);
    if (app.got_subcommand(power)) return cmd_decompose_power(opt);
    if (app.got_subcommand(graph)) return cmd_graph(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
