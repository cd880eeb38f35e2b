// Acceptance suite: runs the headline criteria end to end and prints one
// PASS/FAIL line per criterion.  Exit code 0 only when everything passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcrystal/core.hpp"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/lr.hpp"
#include "qcrystal/tableaux.hpp"

using namespace qcrystal;

namespace {

Word W(const std::string& text, int n) { return Word::parse(text, n); }
StrictPartition P(const std::string& text) { return StrictPartition::parse(text); }

struct Suite {
  bool all_pass = true;

  void run(int number, const std::string& title, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    all_pass = all_pass && ok;
  }
};

void for_each_word(int n, int len, const std::function<void(const Word&)>& fn) {
  std::vector<int> letters(static_cast<std::size_t>(len), 1);
  while (true) {
    fn(Word(letters, n));
    int pos = len - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == n)
      letters[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++letters[static_cast<std::size_t>(pos)];
  }
}

std::vector<StrictPartition> shapes_up_to(int max_size, int max_rows) {
  std::vector<StrictPartition> out;
  for (int s = 1; s <= max_size; ++s)
    for (const StrictPartition& p : strict_partitions(s, static_cast<std::size_t>(max_rows)))
      out.push_back(p);
  return out;
}

bool tensor_table(const std::string& lambda, const std::string& mu, int n,
                  const Decomposition& expect, std::string& detail) {
  auto all = decompose_tensor_all(P(lambda), P(mu), n);
  for (const auto& [method, table] : all) {
    if (table != expect) {
      detail = "method " + method_name(method) + " returned a different table";
      return false;
    }
  }
  if (all.size() != 4) {
    detail = "expected all four methods to run";
    return false;
  }
  return true;
}

std::optional<std::string> run_cli(const std::string& args) {
  const char* cli = std::getenv("QCRYSTAL_CLI");
  if (!cli) return std::nullopt;
  std::string command = std::string(cli) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  if (pclose(pipe) != 0) return std::nullopt;
  return output;
}

// The eight exchange cases, restated for the partition count.
int matching_cases(int a, int b, int c, int d) {
  int count = 0;
  count += (d <= b && b <= a && a < c) ? 1 : 0;
  count += (b < d && d <= a && a < c) ? 1 : 0;
  count += (b <= a && a < d && d <= c) ? 1 : 0;
  count += (a < b && b < d && d <= c) ? 1 : 0;
  count += (b < d && d <= c && c <= a) ? 1 : 0;
  count += (d <= b && b < c && c <= a) ? 1 : 0;
  count += (a < d && d <= b && b < c) ? 1 : 0;
  count += (d <= a && a < b && b < c) ? 1 : 0;
  return count;
}

}  // namespace

int main() {
  Suite suite;

  suite.run(1, "rank-3 product of (2) and (3,1), all four methods, under 1s", 1.0,
            [](std::string& detail) {
              Decomposition expect{{P("3,2,1"), 1}, {P("4,2"), 2}, {P("5,1"), 1}};
              return tensor_table("2", "3,1", 3, expect, detail);
            });

  suite.run(2, "rank-3 square of (3,1) with its skew tableau count, under 10s", 10.0,
            [](std::string& detail) {
              Decomposition expect{{P("4,3,1"), 2}, {P("5,2,1"), 2}, {P("5,3"), 2}, {P("6,2"), 1}};
              if (!tensor_table("3,1", "3,1", 3, expect, detail)) return false;
              auto st = enumerate_standard_shifted(ShiftedShape(P("4,3,1"), P("3,1")));
              if (st.size() != 5) {
                detail = "expected 5 standard fillings of (4,3,1)/(3,1)";
                return false;
              }
              auto picked = lr_tilde_tableaux(P("3,1"), P("3,1"), P("4,3,1"), 3);
              std::set<std::string> got;
              for (const auto& q : picked) got.insert(q.str());
              StandardShiftedTableau first(ShiftedShape(P("4,3,1"), P("3,1")),
                                           {{0, 0, 0, 1}, {0, 2, 3}, {4}});
              StandardShiftedTableau second(ShiftedShape(P("4,3,1"), P("3,1")),
                                            {{0, 0, 0, 3}, {0, 1, 4}, {2}});
              if (got != std::set<std::string>{first.str(), second.str()}) {
                detail = "picked tableaux differ from the expected pair";
                return false;
              }
              return true;
            });

  suite.run(3, "insertion golden values", 0, [](std::string& detail) {
    if (insert_letter(Ssdt::parse("66135/324", 6), 2).result.str() != "66325/421/3") {
      detail = "letter insertion";
      return false;
    }
    RskPair a = rsk(W("2321", 3));
    if (a.p.str() != "321/2" || a.q.str() != "124/3") {
      detail = "pair of 2321";
      return false;
    }
    RskPair b = rsk(W("1223333444444", 4));
    if (!(b.p == lowest_tableau(P("6,4,2,1"), 4)) ||
        b.q.str() != "1,2,4,7,8,13/3,5,9,12/6,10/11") {
      detail = "pair of the long lowest word";
      return false;
    }
    RightInsertion r1 = insert_tableau_right(Ssdt::parse("12", 3), Ssdt::parse("333/2", 3));
    if (r1.product.str() != "333/22/1" ||
        r1.recording.cell_of(1) != std::pair<std::size_t, int>{2, 3} ||
        r1.recording.cell_of(2) != std::pair<std::size_t, int>{3, 3}) {
      detail = "first pair insertion";
      return false;
    }
    RightInsertion r2 = insert_tableau_right(Ssdt::parse("312/2", 3), Ssdt::parse("322/1", 3));
    if (r2.product.str() != "3322/221/1" ||
        r2.recording.cell_of(1) != std::pair<std::size_t, int>{2, 3} ||
        r2.recording.cell_of(2) != std::pair<std::size_t, int>{3, 3} ||
        r2.recording.cell_of(3) != std::pair<std::size_t, int>{1, 4} ||
        r2.recording.cell_of(4) != std::pair<std::size_t, int>{2, 4}) {
      detail = "second pair insertion";
      return false;
    }
    return true;
  });

  suite.run(4, "extremal tableaux and their uniqueness", 0, [](std::string& detail) {
    if (highest_tableau(P("6,4,2,1"), 4).str() != "432211/3211/21/1" ||
        lowest_tableau(P("6,4,2,1"), 4).str() != "444444/3333/22/1") {
      detail = "closed forms at (6,4,2,1)";
      return false;
    }
    for (const StrictPartition& shape : shapes_up_to(5, 3)) {
      int highs = 0, lows = 0;
      for (const Ssdt& t : enumerate_ssdt(shape, 3)) {
        Word w = t.reading_word();
        if (is_highest(w)) {
          ++highs;
          if (!(t == highest_tableau(shape, 3))) {
            detail = "highest of " + shape.str() + " is not the closed form";
            return false;
          }
        }
        if (is_lowest(w)) {
          ++lows;
          if (!(t == lowest_tableau(shape, 3))) {
            detail = "lowest of " + shape.str() + " is not the closed form";
            return false;
          }
        }
      }
      if (highs != 1 || lows != 1) {
        detail = "shape " + shape.str() + " has " + std::to_string(highs) + " highest and " +
                 std::to_string(lows) + " lowest";
        return false;
      }
    }
    return true;
  });

  suite.run(5, "closure, uniqueness and connectivity sweeps, under 2min", 120.0,
            [](std::string& detail) {
              auto sweep = [&](int n, int bound) {
                for (const StrictPartition& shape : shapes_up_to(bound, n)) {
                  std::set<Word> expected;
                  auto all = enumerate_ssdt(shape, n);
                  for (const Ssdt& t : all) {
                    Word w = t.reading_word();
                    expected.insert(w);
                    for (OperatorIndex op : operator_labels(n, true)) {
                      for (auto moved : {apply_f(w, op), apply_e(w, op)}) {
                        if (moved && !Ssdt::from_reading_word(*moved, shape)) {
                          detail = "closure broke at " + t.str() + " op " + op.str();
                          return false;
                        }
                      }
                    }
                  }
                  CrystalGraph graph = component(highest_tableau(shape, n).reading_word());
                  if (std::set<Word>(graph.vertices.begin(), graph.vertices.end()) != expected) {
                    detail = "component of " + shape.str() + " misses tableaux";
                    return false;
                  }
                }
                return true;
              };
              return sweep(3, 5) && sweep(4, 4);
            });

  suite.run(6, "word correspondence is a bijection for rank 3 up to length 5", 0,
            [](std::string& detail) {
              bool ok = true;
              long long words = 0;
              for (int len = 1; len <= 5; ++len) {
                for_each_word(3, len, [&](const Word& u) {
                  if (!ok) return;
                  ++words;
                  RskPair pair = rsk(u);
                  if (inverse_rsk(pair.p, pair.q) != u) {
                    detail = "round trip broke at " + u.str();
                    ok = false;
                  }
                });
                // count pairs per shape
                long long total = 0;
                for (const StrictPartition& shape : strict_partitions(len, 3))
                  total += static_cast<long long>(enumerate_ssdt(shape, 3).size()) *
                           static_cast<long long>(
                               enumerate_standard_shifted(ShiftedShape(shape)).size());
                long long count = 1;
                for (int i = 0; i < len; ++i) count *= 3;
                if (total != count) {
                  detail = "pair count mismatch at length " + std::to_string(len);
                  ok = false;
                }
              }
              if (ok && words != 363) {
                detail = "expected 363 words in the sweep";
                ok = false;
              }
              return ok;
            });

  suite.run(7, "insertion and recording commute with every operator", 0, [](std::string& detail) {
    bool ok = true;
    for (int len = 1; len <= 5 && ok; ++len) {
      for_each_word(3, len, [&](const Word& u) {
        if (!ok) return;
        RskPair pair = rsk(u);
        for (OperatorIndex op : operator_labels(3)) {
          for (bool lowering : {true, false}) {
            auto moved = lowering ? apply_f(u, op) : apply_e(u, op);
            auto moved_p = lowering ? apply_f(pair.p.reading_word(), op)
                                    : apply_e(pair.p.reading_word(), op);
            if (moved.has_value() != moved_p.has_value()) {
              detail = "partial maps differ at " + u.str() + " op " + op.str();
              ok = false;
              return;
            }
            if (!moved) continue;
            RskPair moved_pair = rsk(*moved);
            if (moved_pair.p.reading_word() != *moved_p || !(moved_pair.q == pair.q)) {
              detail = "commutation broke at " + u.str() + " op " + op.str();
              ok = false;
              return;
            }
          }
        }
      });
    }
    return ok;
  });

  suite.run(8, "counting identities", 0, [](std::string& detail) {
    std::map<std::pair<int, StrictPartition>, long long> sizes;
    auto size_of = [&](int n, const StrictPartition& shape) {
      auto key = std::make_pair(n, shape);
      auto it = sizes.find(key);
      if (it == sizes.end())
        it = sizes.emplace(key, static_cast<long long>(enumerate_ssdt(shape, n).size())).first;
      return it->second;
    };
    for (int n = 2; n <= 4; ++n) {
      for (int len = 1; len <= 6; ++len) {
        long long total = 0;
        for (const auto& [shape, mult] : decompose_power(n, len)) total += mult * size_of(n, shape);
        long long expect = 1;
        for (int i = 0; i < len; ++i) expect *= n;
        if (total != expect) {
          detail = "power identity failed at n=" + std::to_string(n) + " N=" + std::to_string(len);
          return false;
        }
      }
    }
    std::vector<StrictPartition> shapes = shapes_up_to(8, 3);
    shapes.push_back(StrictPartition());
    for (const StrictPartition& lambda : shapes) {
      for (const StrictPartition& mu : shapes) {
        if (lambda.size() + mu.size() > 8) continue;
        long long total = 0;
        for (const auto& [nuShape, mult] : decompose_tensor(lambda, mu, 3))
          total += mult * size_of(3, nuShape);
        if (total != size_of(3, lambda) * size_of(3, mu)) {
          detail = "pair identity failed at " + lambda.str() + " x " + mu.str();
          return false;
        }
      }
    }
    return true;
  });

  suite.run(9, "four-letter exchange suite at rank 4", 0, [](std::string& detail) {
    bool ok = true;
    std::set<Word> image;
    std::size_t domain = 0, image_count = 0;
    for_each_word(4, 4, [&](const Word& w) {
      if (in_knuth_image(w)) ++image_count;
    });
    for_each_word(4, 4, [&](const Word& w) {
      if (!ok || !in_knuth_domain(w)) return;
      ++domain;
      if (matching_cases(w.at(0), w.at(1), w.at(2), w.at(3)) != 1) {
        detail = "cases do not partition at " + w.str();
        ok = false;
        return;
      }
      Word out = knuth_psi(w);
      if (!in_knuth_image(out) || !image.insert(out).second) {
        detail = "image fault at " + w.str();
        ok = false;
        return;
      }
      for (OperatorIndex op : operator_labels(4, true)) {
        for (bool lowering : {true, false}) {
          auto lhs = lowering ? apply_f(w, op) : apply_e(w, op);
          auto rhs = lowering ? apply_f(out, op) : apply_e(out, op);
          if (lhs.has_value() != rhs.has_value() || (lhs && knuth_psi(*lhs) != *rhs)) {
            detail = "operator " + op.str() + " not intertwined at " + w.str();
            ok = false;
            return;
          }
        }
      }
    });
    if (ok && (domain != image.size() || domain != image_count)) {
      detail = "domain and image sizes differ";
      ok = false;
    }
    return ok;
  });

  suite.run(10, "two-row component matches the brute-force count and stable export", 0,
            [](std::string& detail) {
              // brute-force oracle: all fillings of (3,1), membership by the
              // subword route
              int brute = 0;
              for_each_word(3, 4, [&](const Word& w) {
                std::vector<Word> rows{w.subword(1, 3), w.subword(0, 1)};
                if (is_hook_word(rows[0]) && is_hook_word(rows[1]) && is_ssdt_by_subword(rows))
                  ++brute;
              });
              if (brute != 24) {
                detail = "brute count is " + std::to_string(brute);
                return false;
              }
              if (enumerate_ssdt(P("3,1"), 3).size() != 24) {
                detail = "enumeration disagrees with the oracle";
                return false;
              }
              CrystalGraph graph = component(highest_tableau(P("3,1"), 3).reading_word());
              if (graph.vertices.size() != 24) {
                detail = "component has " + std::to_string(graph.vertices.size()) + " vertices";
                return false;
              }
              auto first = run_cli("graph --shape 3,1 --n 3");
              if (first) {
                auto second = run_cli("graph --shape 3,1 --n 3");
                if (!second || *first != *second) {
                  detail = "command line export not byte-identical";
                  return false;
                }
                if (first->find("\"1211\"") == std::string::npos) {
                  detail = "export misses the top vertex";
                  return false;
                }
              } else if (to_dot(graph) != to_dot(component(highest_tableau(P("3,1"), 3).reading_word()))) {
                detail = "library export not stable";
                return false;
              }
              return true;
            });

  std::printf("%s\n", suite.all_pass ? "acceptance: all criteria passed"
                                     : "acceptance: some criteria FAILED");
  return suite.all_pass ? 0 : 1;
}
