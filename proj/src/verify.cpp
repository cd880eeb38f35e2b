#include "qcrystal/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "qcrystal/core.hpp"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/lr.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

namespace {

// ---------------------------------------------------------------------------
// sweep helpers

void for_each_word(int n, int len, const std::function<void(const Word&)>& fn) {
  std::vector<int> letters(static_cast<std::size_t>(len), 1);
  if (len == 0) {
    fn(Word(n));
    return;
  }
  while (true) {
    fn(Word(letters, n));
    int pos = len - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == n) {
      letters[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++letters[static_cast<std::size_t>(pos)];
  }
}

void for_each_word_up_to(int n, int max_len, const std::function<void(const Word&)>& fn) {
  for (int len = 0; len <= max_len; ++len) for_each_word(n, len, fn);
}

std::vector<StrictPartition> shapes_up_to(int max_size, int max_rows) {
  std::vector<StrictPartition> out;
  for (int s = 1; s <= max_size; ++s)
    for (const StrictPartition& p : strict_partitions(s, static_cast<std::size_t>(max_rows)))
      out.push_back(p);
  return out;
}

std::string describe(const Word& w) { return "word " + w.str() + " (n=" + std::to_string(w.rank()) + ")"; }

// ---------------------------------------------------------------------------
// independent oracles

// Two-factor tensor rule unrolled recursively; the production code uses the
// one-pass cancellation scan instead, so agreement is meaningful.
std::optional<Word> oracle_apply(const Word& w, OperatorIndex op, bool lowering);

int oracle_eps(const Word& w, OperatorIndex op) {
  int count = 0;
  std::optional<Word> cur = w;
  while ((cur = oracle_apply(*cur, op, false))) ++count;
  return count;
}

int oracle_phi(const Word& w, OperatorIndex op) {
  int count = 0;
  std::optional<Word> cur = w;
  while ((cur = oracle_apply(*cur, op, true))) ++count;
  return count;
}

std::optional<Word> oracle_apply(const Word& w, OperatorIndex op, bool lowering) {
  if (w.empty()) return std::nullopt;
  if (w.size() == 1) {
    int x = w.at(0);
    int i = op.index();
    if (op.is_even()) {
      if (lowering && x == i) return Word({i + 1}, w.rank());
      if (!lowering && x == i + 1) return Word({i}, w.rank());
      return std::nullopt;
    }
    if (lowering && x == 1) return Word({2}, w.rank());
    if (!lowering && x == 2) return Word({1}, w.rank());
    return std::nullopt;
  }
  Word head = w.subword(0, 1);
  Word tail = w.subword(1, w.size() - 1);
  bool act_left;
  if (op.is_even()) {
    int phi1 = oracle_phi(head, op);
    int eps2 = oracle_eps(tail, op);
    act_left = lowering ? (phi1 > eps2) : (phi1 >= eps2);
  } else {
    Weight wt = weight_of(tail);
    act_left = wt.coords[0] == 0 && wt.coords[1] == 0;
  }
  if (act_left) {
    auto moved = oracle_apply(head, op, lowering);
    if (!moved) return std::nullopt;
    return concat(*moved, tail);
  }
  auto moved = oracle_apply(tail, op, lowering);
  if (!moved) return std::nullopt;
  return concat(head, *moved);
}

// Exponential scan over all subsequences.
int brute_hook_subword(const Word& w) {
  const std::size_t len = w.size();
  int best = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << len); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < len; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(w.at(i));
    if (is_hook_word(Word(sub, w.rank()))) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

// Brute-force standard fillings: every assignment of 1..m to the cells,
// kept when rows and columns increase.
std::vector<StandardShiftedTableau> brute_standard(const ShiftedShape& shape) {
  std::vector<std::pair<std::size_t, int>> cells;
  for (std::size_t r = 1; r <= shape.row_count(); ++r)
    for (int c = shape.row_first_col(r); c <= shape.row_last_col(r); ++c) cells.emplace_back(r, c);
  std::vector<int> values(cells.size());
  std::iota(values.begin(), values.end(), 1);
  std::vector<StandardShiftedTableau> out;
  do {
    std::map<std::pair<std::size_t, int>, int> grid;
    for (std::size_t i = 0; i < cells.size(); ++i) grid[cells[i]] = values[i];
    bool ok = true;
    for (std::size_t i = 0; i < cells.size() && ok; ++i) {
      auto [r, c] = cells[i];
      auto left = grid.find({r, c - 1});
      if (left != grid.end() && left->second >= values[i]) ok = false;
      auto above = grid.find({r - 1, c});
      if (above != grid.end() && above->second >= values[i]) ok = false;
    }
    if (!ok) continue;
    std::vector<std::vector<int>> rows(shape.row_count());
    for (std::size_t r = 1; r <= shape.row_count(); ++r)
      rows[r - 1].assign(static_cast<std::size_t>(shape.outer().part(r)), 0);
    for (std::size_t i = 0; i < cells.size(); ++i)
      rows[cells[i].first - 1][static_cast<std::size_t>(cells[i].second) - cells[i].first] =
          values[i];
    out.emplace_back(shape, std::move(rows));
  } while (std::next_permutation(values.begin(), values.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> hook_words(int n, int len) {
  std::vector<Word> out;
  for_each_word(n, len, [&](const Word& w) {
    if (is_hook_word(w)) out.push_back(w);
  });
  return out;
}

// ---------------------------------------------------------------------------
// check registry

struct Ranges {
  int op_rank_max;       // ranks swept for operator identities
  int op_len_max;        // word lengths for operator identities
  int lowest_len_max;    // lengths for the lowest-vector criterion
  int hw_len_max;        // lengths for the highest-vector recursion
  int closure_size_n3;   // |shape| bound for rank-3 tableau sweeps
  int closure_size_n4;   // |shape| bound for rank-4 tableau sweeps
  int rsk_len_max;       // word lengths for the correspondence sweeps
  int knuth_rank_max;    // ranks for the four-letter exchange sweep
  int pair_sum_max;      // |lambda|+|mu| bound for tensor decompositions
  int power_len_max;     // lengths for the power decomposition
  int power_rank_max;
  int dp_exhaustive_len; // exhaustive bound for the hook-subword DP
  int dp_random_len;     // randomized bound (seeded)
  int roundtrip_size;    // |shape| bound for parse/render sweeps
};

Ranges ranges_for(VerifyLevel level) {
  if (level == VerifyLevel::quick)
    return Ranges{3, 4, 4, 4, 4, 0, 4, 3, 6, 4, 3, 5, 8, 5};
  return Ranges{4, 5, 6, 6, 5, 4, 5, 4, 8, 6, 4, 6, 10, 8};
}

struct Runner {
  VerifyReport report;
  Ranges r;
  std::mt19937 gen;

  void add(const std::string& name, const std::string& range,
           const std::function<std::optional<std::string>()>& body) {
    CheckResult res;
    res.name = name;
    res.range = range;
    try {
      auto fail = body();
      res.pass = !fail.has_value();
      if (fail) res.detail = *fail;
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(res));
  }

  Word random_word(int n, int len) {
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& x : letters) x = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
    return Word(std::move(letters), n);
  }
};

using Fail = std::optional<std::string>;

// ---------------------------------------------------------------------------

void register_core_checks(Runner& run) {
  const Ranges& R = run.r;

  run.add("weight-additivity", "n=3, |u|,|v| <= " + std::to_string(R.op_len_max - 1), [&]() -> Fail {
    Fail fail;
    for_each_word_up_to(3, R.op_len_max - 1, [&](const Word& u) {
      if (fail) return;
      for_each_word_up_to(3, R.op_len_max - 1, [&](const Word& v) {
        if (fail) return;
        if (!(weight_of(concat(u, v)) == weight_of(u) + weight_of(v)))
          fail = describe(u) + " + " + describe(v);
      });
    });
    return fail;
  });

  run.add("standard-enumeration-vs-brute", "straight and skew shapes, <= 7 cells", [&]() -> Fail {
    std::vector<ShiftedShape> shapes;
    for (const StrictPartition& outer : shapes_up_to(7, 4)) {
      shapes.emplace_back(outer);
      for (const StrictPartition& inner : shapes_up_to(outer.size() - 1, 4))
        if (outer.contains(inner) && outer.size() - inner.size() <= 7)
          shapes.emplace_back(outer, inner);
    }
    for (const ShiftedShape& shape : shapes) {
      auto fast = enumerate_standard_shifted(shape);
      std::sort(fast.begin(), fast.end());
      if (fast != brute_standard(shape))
        return "shape " + shape.outer().str() + "/" + shape.inner().str();
    }
    return std::nullopt;
  });

  run.add("parse-render-round-trip", "n <= 4, |shape| <= " + std::to_string(R.roundtrip_size),
          [&]() -> Fail {
            for (int n = 2; n <= 4; ++n) {
              for (const StrictPartition& shape : shapes_up_to(R.roundtrip_size, n)) {
                if (shape.size() > R.roundtrip_size) continue;
                for (const Ssdt& t : enumerate_ssdt(shape, n)) {
                  if (Ssdt::parse(t.str(), n) != t) return "tableau " + t.str();
                  Word w = t.reading_word();
                  if (Word::parse(w.str(), n) != w) return describe(w);
                }
                for (const StandardShiftedTableau& q :
                     enumerate_standard_shifted(ShiftedShape(shape)))
                  if (StandardShiftedTableau::parse(q.str()) != q) return "standard " + q.str();
              }
            }
            return std::nullopt;
          });
}

void register_crystal_checks(Runner& run) {
  const Ranges& R = run.r;
  const std::string op_range =
      "n <= " + std::to_string(R.op_rank_max) + ", len <= " + std::to_string(R.op_len_max);

  run.add("operator-vs-tensor-rule-oracle", op_range, [&]() -> Fail {
    Fail fail;
    for (int n = 2; n <= R.op_rank_max; ++n) {
      int len_max = n == R.op_rank_max ? std::min(R.op_len_max, 4) : R.op_len_max;
      for_each_word_up_to(n, len_max, [&](const Word& w) {
        if (fail) return;
        for (OperatorIndex op : operator_labels(n)) {
          if (apply_f(w, op) != oracle_apply(w, op, true)) fail = describe(w) + " f_" + op.str();
          if (apply_e(w, op) != oracle_apply(w, op, false)) fail = describe(w) + " e_" + op.str();
          if (op.is_even()) {
            if (eps(w, op.index()) != oracle_eps(w, op)) fail = describe(w) + " eps_" + op.str();
            if (phi(w, op.index()) != oracle_phi(w, op)) fail = describe(w) + " phi_" + op.str();
          }
        }
      });
    }
    return fail;
  });

  run.add("partial-inverse", op_range, [&]() -> Fail {
    Fail fail;
    for (int n = 2; n <= R.op_rank_max; ++n) {
      for_each_word_up_to(n, R.op_len_max, [&](const Word& w) {
        if (fail) return;
        for (OperatorIndex op : operator_labels(n, true)) {
          if (auto v = apply_f(w, op); v && apply_e(*v, op) != w)
            fail = describe(w) + " f_" + op.str() + " not inverted";
          if (auto v = apply_e(w, op); v && apply_f(*v, op) != w)
            fail = describe(w) + " e_" + op.str() + " not inverted";
        }
      });
    }
    return fail;
  });

  run.add("weight-shift", op_range, [&]() -> Fail {
    Fail fail;
    for (int n = 2; n <= R.op_rank_max; ++n) {
      for_each_word_up_to(n, R.op_len_max, [&](const Word& w) {
        if (fail) return;
        for (OperatorIndex op : operator_labels(n, true)) {
          auto v = apply_f(w, op);
          if (!v) continue;
          // odd(i) shifts the weight by the i-th simple root, same as even(i)
          int i = op.index();
          Weight expect = weight_of(w);
          --expect.coords[static_cast<std::size_t>(i - 1)];
          ++expect.coords[static_cast<std::size_t>(i)];
          if (!(weight_of(*v) == expect)) fail = describe(w) + " f_" + op.str();
        }
      });
    }
    return fail;
  });

  run.add("odd-square-vanishing", op_range, [&]() -> Fail {
    Fail fail;
    for (int n = 2; n <= R.op_rank_max; ++n) {
      for_each_word_up_to(n, R.op_len_max, [&](const Word& w) {
        if (fail) return;
        OperatorIndex op = OperatorIndex::odd(1);
        if (auto v = apply_f(w, op); v && apply_f(*v, op)) fail = describe(w) + " f1bar^2";
        if (auto v = apply_e(w, op); v && apply_e(*v, op)) fail = describe(w) + " e1bar^2";
      });
    }
    return fail;
  });

  run.add("odd-even-commutation", "n=4, len <= 4, i=3", [&]() -> Fail {
    Fail fail;
    const int n = 4;
    for_each_word_up_to(n, std::min(R.op_len_max, 4), [&](const Word& w) {
      if (fail) return;
      for (int i = 3; i <= n - 1; ++i) {
        OperatorIndex odd1 = OperatorIndex::odd(1);
        OperatorIndex ev = OperatorIndex::even(i);
        auto lhs = apply_f(w, odd1);
        if (lhs) lhs = apply_f(*lhs, ev);
        auto rhs = apply_f(w, ev);
        if (rhs) rhs = apply_f(*rhs, odd1);
        if (lhs != rhs) fail = describe(w) + " f1bar/f" + std::to_string(i);
        auto lhse = apply_e(w, odd1);
        if (lhse) lhse = apply_e(*lhse, ev);
        auto rhse = apply_e(w, ev);
        if (rhse) rhse = apply_e(*rhse, odd1);
        if (lhse != rhse) fail = describe(w) + " e1bar/e" + std::to_string(i);
        if (auto v = apply_e(w, odd1); v) {
          if (eps(*v, i) != eps(w, i) || phi(*v, i) != phi(w, i))
            fail = describe(w) + " statistics moved under e1bar";
        }
      }
    });
    return fail;
  });

  run.add("subword-recursion", "n=3, len <= 4", [&]() -> Fail {
    // when a lowering step lands inside a factor, the same step happens on
    // any contiguous subword containing that position
    Fail fail;
    const int n = 3;
    for_each_word_up_to(n, std::min(R.op_len_max, 4), [&](const Word& w) {
      if (fail || w.empty()) return;
      for (OperatorIndex op : operator_labels(n)) {
        auto v = apply_f(w, op);
        if (!v) continue;
        std::size_t k = 0;
        while (w.at(k) == v->at(k)) ++k;
        for (std::size_t j = 0; j <= k && !fail; ++j) {
          for (std::size_t m = k; m < w.size() && !fail; ++m) {
            Word piece = w.subword(j, m - j + 1);
            auto moved = apply_f(piece, op);
            if (!moved || moved->at(k - j) != v->at(k))
              fail = describe(w) + " split " + std::to_string(j) + ".." + std::to_string(m) +
                     " op " + op.str();
          }
        }
      }
    });
    return fail;
  });

  run.add("weyl-well-defined", "two longest-element words, S3 and S4", [&]() -> Fail {
    Fail fail;
    const std::vector<int> a3{1, 2, 1}, b3{2, 1, 2};
    for_each_word_up_to(3, 3, [&](const Word& w) {
      if (!fail && weyl_w(w, a3) != weyl_w(w, b3)) fail = describe(w);
    });
    if (fail) return fail;
    const std::vector<int> a4{1, 2, 1, 3, 2, 1}, b4{3, 2, 3, 1, 2, 3};
    for_each_word_up_to(4, 3, [&](const Word& w) {
      if (!fail && weyl_w(w, a4) != weyl_w(w, b4)) fail = describe(w);
    });
    if (fail) return fail;
    // involution and weight transport
    for_each_word_up_to(3, 3, [&](const Word& w) {
      if (fail) return;
      for (int i = 1; i <= 2; ++i) {
        if (weyl_s(weyl_s(w, i), i) != w) fail = describe(w) + " s" + std::to_string(i);
        Weight wt = weight_of(w), moved = weight_of(weyl_s(w, i));
        std::swap(wt.coords[static_cast<std::size_t>(i - 1)], wt.coords[static_cast<std::size_t>(i)]);
        if (!(moved == wt)) fail = describe(w) + " weight s" + std::to_string(i);
      }
    });
    return fail;
  });

  run.add("lowest-criterion-agreement",
          "n <= " + std::to_string(R.op_rank_max) + ", len <= " + std::to_string(R.lowest_len_max),
          [&]() -> Fail {
            Fail fail;
            for (int n = 2; n <= R.op_rank_max; ++n) {
              for_each_word_up_to(n, R.lowest_len_max, [&](const Word& w) {
                if (fail) return;
                if (is_strict_reverse_lattice(w) != is_lowest_by_weyl(w)) fail = describe(w);
              });
            }
            return fail;
          });

  run.add("highest-recursion-vs-filter",
          "n <= 3, N <= " + std::to_string(R.hw_len_max), [&]() -> Fail {
            for (int n = 2; n <= 3; ++n) {
              for (int len = 1; len <= R.hw_len_max; ++len) {
                std::set<Word> brute;
                for_each_word(n, len, [&](const Word& w) {
                  if (is_highest(w)) brute.insert(w);
                });
                std::vector<Word> fast = highest_weight_vectors(n, len);
                if (std::set<Word>(fast.begin(), fast.end()) != brute)
                  return Fail("n=" + std::to_string(n) + " N=" + std::to_string(len));
                for (const Word& w : fast) {
                  Weight wt = weight_of(w);
                  if (!is_dominant_weight(wt.coords))
                    return Fail(describe(w) + " weight not a strict partition");
                }
              }
            }
            return std::nullopt;
          });
}

void register_tableau_checks(Runner& run) {
  const Ranges& R = run.r;

  run.add("hook-subword-dp-vs-brute",
          "exhaustive n <= 4 len <= " + std::to_string(R.dp_exhaustive_len) + ", seeded len <= " +
              std::to_string(R.dp_random_len),
          [&]() -> Fail {
            Fail fail;
            for (int n = 2; n <= 4 && !fail; ++n) {
              for_each_word_up_to(n, R.dp_exhaustive_len, [&](const Word& w) {
                if (fail || w.empty()) return;
                if (max_hook_subword_len(w) != brute_hook_subword(w)) fail = describe(w);
              });
            }
            for (int n = 2; n <= 4 && !fail; ++n) {
              for (int len = R.dp_exhaustive_len + 1; len <= R.dp_random_len && !fail; ++len) {
                for (int trial = 0; trial < 400; ++trial) {
                  Word w = run.random_word(n, len);
                  if (max_hook_subword_len(w) != brute_hook_subword(w)) {
                    fail = describe(w);
                    break;
                  }
                }
              }
            }
            return fail;
          });

  run.add("ssdt-criterion-agreement", "hook pairs, lengths <= (5,4), n <= 4", [&]() -> Fail {
    for (int n = 2; n <= 4; ++n) {
      for (int lu = 2; lu <= 5; ++lu) {
        for (int ll = 1; ll < lu && ll <= 4; ++ll) {
          for (const Word& upper : hook_words(n, lu)) {
            for (const Word& lower : hook_words(n, ll)) {
              std::vector<Word> rows{upper, lower};
              if (is_ssdt(rows) != is_ssdt_by_subword(rows))
                return Fail("rows " + upper.str() + "/" + lower.str());
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  auto sweep_shapes = [&](int n) {
    int bound = n == 3 ? R.closure_size_n3 : R.closure_size_n4;
    return shapes_up_to(bound, n);
  };

  run.add("tableau-closure",
          "n=3 |shape| <= " + std::to_string(R.closure_size_n3) + "; n=4 |shape| <= " +
              std::to_string(R.closure_size_n4),
          [&]() -> Fail {
            for (int n : {3, 4}) {
              for (const StrictPartition& shape : sweep_shapes(n)) {
                for (const Ssdt& t : enumerate_ssdt(shape, n)) {
                  Word w = t.reading_word();
                  for (OperatorIndex op : operator_labels(n, true)) {
                    for (auto moved : {apply_f(w, op), apply_e(w, op)}) {
                      if (moved && !Ssdt::from_reading_word(*moved, shape))
                        return Fail("shape " + shape.str() + " " + describe(w) + " op " + op.str());
                    }
                  }
                }
              }
            }
            return std::nullopt;
          });

  run.add("extremal-uniqueness", "same shape sweep", [&]() -> Fail {
    for (int n : {3, 4}) {
      for (const StrictPartition& shape : sweep_shapes(n)) {
        std::vector<Word> highs, lows;
        for (const Ssdt& t : enumerate_ssdt(shape, n)) {
          Word w = t.reading_word();
          if (is_highest(w)) highs.push_back(w);
          if (is_lowest(w)) lows.push_back(w);
        }
        if (highs.size() != 1 || highs[0] != highest_tableau(shape, n).reading_word())
          return Fail("highest of " + shape.str() + " n=" + std::to_string(n));
        if (lows.size() != 1 || lows[0] != lowest_tableau(shape, n).reading_word())
          return Fail("lowest of " + shape.str() + " n=" + std::to_string(n));
      }
    }
    return std::nullopt;
  });

  run.add("component-connectivity", "same shape sweep", [&]() -> Fail {
    for (int n : {3, 4}) {
      for (const StrictPartition& shape : sweep_shapes(n)) {
        if (n == 4 && shape.size() > 3) continue;  // keep the graph sweep modest
        std::set<Word> expected;
        for (const Ssdt& t : enumerate_ssdt(shape, n)) expected.insert(t.reading_word());
        CrystalGraph graph = component(highest_tableau(shape, n).reading_word());
        std::set<Word> got(graph.vertices.begin(), graph.vertices.end());
        if (got != expected) return Fail("shape " + shape.str() + " n=" + std::to_string(n));
      }
    }
    return std::nullopt;
  });
}

void register_insertion_checks(Runner& run) {
  const Ranges& R = run.r;

  run.add("insertion-operator-commutation",
          "n=3, N <= " + std::to_string(R.rsk_len_max), [&]() -> Fail {
            Fail fail;
            const int n = 3;
            for_each_word_up_to(n, R.rsk_len_max, [&](const Word& u) {
              if (fail || u.empty()) return;
              RskPair pair = rsk(u);
              for (OperatorIndex op : operator_labels(n)) {
                for (bool lowering : {true, false}) {
                  auto moved = lowering ? apply_f(u, op) : apply_e(u, op);
                  auto moved_p = lowering ? apply_f(pair.p.reading_word(), op)
                                          : apply_e(pair.p.reading_word(), op);
                  if (moved.has_value() != moved_p.has_value()) {
                    fail = describe(u) + " op " + op.str() + " defined-ness";
                    return;
                  }
                  if (!moved) continue;
                  RskPair moved_pair = rsk(*moved);
                  if (moved_pair.p.reading_word() != *moved_p)
                    fail = describe(u) + " op " + op.str() + " insertion image";
                  if (!(moved_pair.q == pair.q))
                    fail = describe(u) + " op " + op.str() + " recording changed";
                }
              }
            });
            return fail;
          });

  run.add("rsk-bijectivity", "n=3, N <= " + std::to_string(R.rsk_len_max), [&]() -> Fail {
    Fail fail;
    const int n = 3;
    std::map<std::pair<StrictPartition, int>, long long> by_shape;
    for_each_word_up_to(n, R.rsk_len_max, [&](const Word& u) {
      if (fail || u.empty()) return;
      RskPair pair = rsk(u);
      if (!(pair.p.shape() == pair.q.shape().outer())) {
        fail = describe(u) + " shape mismatch";
        return;
      }
      if (inverse_rsk(pair.p, pair.q) != u) fail = describe(u) + " round trip";
      ++by_shape[{pair.p.shape(), static_cast<int>(u.size())}];
    });
    if (fail) return fail;
    // surjectivity: every same-shape pair is hit exactly once
    for (int len = 1; len <= R.rsk_len_max; ++len) {
      for (const StrictPartition& shape : strict_partitions(len, 3)) {
        long long pairs =
            static_cast<long long>(enumerate_ssdt(shape, n).size()) *
            static_cast<long long>(enumerate_standard_shifted(ShiftedShape(shape)).size());
        long long hit = 0;
        if (auto it = by_shape.find({shape, len}); it != by_shape.end()) hit = it->second;
        if (pairs != hit)
          return Fail("shape " + shape.str() + " N=" + std::to_string(len) + ": " +
                      std::to_string(hit) + " words for " + std::to_string(pairs) + " pairs");
      }
    }
    return std::nullopt;
  });

  run.add("knuth-cases", "n <= " + std::to_string(R.knuth_rank_max), [&]() -> Fail {
    Fail fail;
    for (int n = 2; n <= R.knuth_rank_max && !fail; ++n) {
      std::set<Word> image;
      std::size_t domain_size = 0, image_size = 0;
      for_each_word(n, 4, [&](const Word& w) {
        if (in_knuth_image(w)) ++image_size;
      });
      for_each_word(n, 4, [&](const Word& w) {
        if (fail || !in_knuth_domain(w)) return;
        ++domain_size;
        Word out = knuth_psi(w);
        if (!in_knuth_image(out)) {
          fail = describe(w) + " image off target";
          return;
        }
        if (!image.insert(out).second) {
          fail = describe(w) + " image collision";
          return;
        }
        for (OperatorIndex op : operator_labels(n, true)) {
          auto lhs = apply_f(w, op);
          auto rhs = apply_f(out, op);
          if (lhs.has_value() != rhs.has_value() ||
              (lhs && (!in_knuth_domain(*lhs) || knuth_psi(*lhs) != *rhs))) {
            fail = describe(w) + " f_" + op.str() + " not intertwined";
            return;
          }
          auto lhse = apply_e(w, op);
          auto rhse = apply_e(out, op);
          if (lhse.has_value() != rhse.has_value() ||
              (lhse && (!in_knuth_domain(*lhse) || knuth_psi(*lhse) != *rhse))) {
            fail = describe(w) + " e_" + op.str() + " not intertwined";
            return;
          }
        }
      });
      if (!fail && domain_size != image_size)
        fail = Fail("n=" + std::to_string(n) + ": domain " + std::to_string(domain_size) +
                    " vs image " + std::to_string(image_size));
    }
    return fail;
  });

  run.add("insert-letter-validity", "n=3, |shape| <= 5, all letters", [&]() -> Fail {
    const int n = 3;
    for (const StrictPartition& shape : shapes_up_to(5, n)) {
      for (const Ssdt& t : enumerate_ssdt(shape, n)) {
        for (int x = 1; x <= n; ++x) {
          InsertionTrace trace = insert_letter(t, x);  // Ssdt construction re-validates
          if (trace.result.shape().size() != shape.size() + 1)
            return Fail("tableau " + t.str() + " letter " + std::to_string(x));
          if (trace.result.shape().part(trace.cell.row) != shape.part(trace.cell.row) + 1)
            return Fail("tableau " + t.str() + " letter " + std::to_string(x) + " cell row");
        }
      }
    }
    return std::nullopt;
  });

  run.add("right-left-insertion-match", "B((2)) x B((3,1)), n=3", [&]() -> Fail {
    const int n = 3;
    for (const Ssdt& t : enumerate_ssdt(StrictPartition({2}), n)) {
      for (const Ssdt& tp : enumerate_ssdt(StrictPartition({3, 1}), n)) {
        RightInsertion right = insert_tableau_right(t, tp);
        if (!(right.product == insert_tableau_left(t, tp)))
          return Fail(t.str() + " -> " + tp.str());
      }
    }
    return std::nullopt;
  });

  run.add("recording-orbit-invariance", "B((2)) x B((3,1)), n=3", [&]() -> Fail {
    // the tensor action moves one factor of the pair; the recording tableau
    // is constant along such orbits
    const int n = 3;
    for (const Ssdt& t : enumerate_ssdt(StrictPartition({2}), n)) {
      for (const Ssdt& tp : enumerate_ssdt(StrictPartition({3, 1}), n)) {
        StandardShiftedTableau q = insert_tableau_right(t, tp).recording;
        Word left = t.reading_word(), right = tp.reading_word();
        Word pair = concat(left, right);
        for (OperatorIndex op : operator_labels(n)) {
          for (auto moved : {apply_f(pair, op), apply_e(pair, op)}) {
            if (!moved) continue;
            std::size_t at = 0;
            while (pair.at(at) == moved->at(at)) ++at;
            auto mt = Ssdt::from_reading_word(moved->subword(0, left.size()), t.shape());
            auto mtp = Ssdt::from_reading_word(
                moved->subword(left.size(), right.size()), tp.shape());
            if (!mt || !mtp)
              return Fail("closure failed for " + pair.str() + " op " + op.str());
            if (!(insert_tableau_right(*mt, *mtp).recording == q))
              return Fail(pair.str() + " op " + op.str() + " at position " + std::to_string(at));
          }
        }
      }
    }
    return std::nullopt;
  });
}

void register_lr_checks(Runner& run) {
  const Ranges& R = run.r;

  auto decomposition_sizes = [](int n, const Decomposition& d,
                                std::map<StrictPartition, long long>& cache) {
    long long total = 0;
    for (const auto& [shape, mult] : d) {
      auto it = cache.find(shape);
      if (it == cache.end())
        it = cache.emplace(shape, static_cast<long long>(enumerate_ssdt(shape, n).size())).first;
      total += mult * it->second;
    }
    return total;
  };

  run.add("tensor-four-way-agreement",
          "n <= 3 all pairs |lambda|+|mu| <= " + std::to_string(R.pair_sum_max) +
              "; n=4 seeded sample",
          [&]() -> Fail {
            for (int n = 2; n <= 3; ++n) {
              std::vector<StrictPartition> shapes = shapes_up_to(R.pair_sum_max, n);
              shapes.push_back(StrictPartition());
              for (const StrictPartition& lambda : shapes) {
                for (const StrictPartition& mu : shapes) {
                  if (lambda.size() + mu.size() > R.pair_sum_max) continue;
                  auto all = decompose_tensor_all(lambda, mu, n);
                  for (std::size_t i = 1; i < all.size(); ++i) {
                    if (all[i].second != all[0].second)
                      return Fail("n=" + std::to_string(n) + " lambda=" + lambda.str() +
                                  " mu=" + mu.str() + ": " + method_name(all[i].first) +
                                  " disagrees with " + method_name(all[0].first));
                  }
                }
              }
            }
            // sampled pairs at rank 4
            std::vector<StrictPartition> pool = shapes_up_to(5, 4);
            for (int trial = 0; trial < 6; ++trial) {
              const StrictPartition& lambda = pool[run.gen() % pool.size()];
              const StrictPartition& mu = pool[run.gen() % pool.size()];
              if (lambda.size() + mu.size() > 8) continue;
              auto all = decompose_tensor_all(lambda, mu, 4);
              for (std::size_t i = 1; i < all.size(); ++i)
                if (all[i].second != all[0].second)
                  return Fail("n=4 lambda=" + lambda.str() + " mu=" + mu.str());
            }
            return std::nullopt;
          });

  run.add("tensor-cardinality-conservation",
          "n=3, |lambda|+|mu| <= " + std::to_string(R.pair_sum_max), [&]() -> Fail {
            const int n = 3;
            std::map<StrictPartition, long long> cache;
            std::vector<StrictPartition> shapes = shapes_up_to(R.pair_sum_max, n);
            shapes.push_back(StrictPartition());
            for (const StrictPartition& lambda : shapes) {
              for (const StrictPartition& mu : shapes) {
                if (lambda.size() + mu.size() > R.pair_sum_max) continue;
                Decomposition d = decompose_tensor(lambda, mu, n);
                long long lhs = decomposition_sizes(n, d, cache);
                long long rhs = static_cast<long long>(enumerate_ssdt(lambda, n).size()) *
                                static_cast<long long>(enumerate_ssdt(mu, n).size());
                if (lhs != rhs)
                  return Fail("lambda=" + lambda.str() + " mu=" + mu.str() + ": " +
                              std::to_string(lhs) + " != " + std::to_string(rhs));
              }
            }
            return std::nullopt;
          });

  run.add("power-conservation",
          "n <= " + std::to_string(R.power_rank_max) + ", N <= " + std::to_string(R.power_len_max),
          [&]() -> Fail {
            for (int n = 2; n <= R.power_rank_max; ++n) {
              std::map<StrictPartition, long long> cache;
              for (int len = 1; len <= R.power_len_max; ++len) {
                Decomposition d = decompose_power(n, len);
                long long total = decomposition_sizes(n, d, cache);
                long long expect = 1;
                for (int i = 0; i < len; ++i) expect *= n;
                if (total != expect)
                  return Fail("n=" + std::to_string(n) + " N=" + std::to_string(len) + ": " +
                              std::to_string(total) + " != " + std::to_string(expect));
                // independent route: count lowest vectors per weight
                Decomposition by_lowest;
                for_each_word(n, len, [&](const Word& w) {
                  if (!is_lowest(w)) return;
                  std::vector<int> coords = weight_of(w).coords;
                  std::vector<int> reversed(coords.rbegin(), coords.rend());
                  while (!reversed.empty() && reversed.back() == 0) reversed.pop_back();
                  ++by_lowest[StrictPartition(reversed)];
                });
                if (by_lowest != d)
                  return Fail("n=" + std::to_string(n) + " N=" + std::to_string(len) +
                              ": lowest-vector scan disagrees");
              }
            }
            return std::nullopt;
          });

  run.add("lowest-vector-reconstruction", "n=3, |lambda|+|mu| <= 6", [&]() -> Fail {
    const int n = 3;
    std::vector<StrictPartition> shapes = shapes_up_to(6, n);
    shapes.push_back(StrictPartition());
    for (const StrictPartition& lambda : shapes) {
      for (const StrictPartition& mu : shapes) {
        if (lambda.size() + mu.size() > 6) continue;
        for (const StrictPartition& nu : strict_partitions(lambda.size() + mu.size(), n)) {
          if (!nu.contains(mu)) continue;
          for (const StandardShiftedTableau& q : lr_tilde_tableaux(lambda, mu, nu, n)) {
            std::vector<int> letters;
            for (int value = lambda.size(); value >= 1; --value)
              letters.push_back(n - static_cast<int>(q.row_of(value)) + 1);
            auto t = Ssdt::from_reading_word(Word(letters, n), lambda);
            if (!t) return Fail("type word invalid for nu=" + nu.str());
            RightInsertion right = insert_tableau_right(*t, lowest_tableau(mu, n));
            if (!(right.product == lowest_tableau(nu, n)) || !(right.recording == q))
              return Fail("lambda=" + lambda.str() + " mu=" + mu.str() + " nu=" + nu.str());
          }
        }
      }
    }
    return std::nullopt;
  });

  run.add("chain-lowest-equivalence", "n=3, |lambda| <= 4, |mu| <= 4", [&]() -> Fail {
    const int n = 3;
    std::vector<StrictPartition> shapes = shapes_up_to(4, n);
    shapes.push_back(StrictPartition());
    for (const StrictPartition& lambda : shapes) {
      for (const StrictPartition& mu : shapes) {
        Word low = lowest_tableau(mu, n).reading_word();
        for (const Ssdt& t : enumerate_ssdt(lambda, n)) {
          Word u = t.reading_word();
          bool chain_ok = chain_from_word(u, mu, n).has_value();
          bool lowest_ok = is_lowest(concat(u, low));
          if (chain_ok != lowest_ok)
            return Fail("lambda=" + lambda.str() + " mu=" + mu.str() + " u=" + u.str());
        }
      }
    }
    return std::nullopt;
  });
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verification(VerifyLevel level, unsigned seed) {
  Runner run{VerifyReport{}, ranges_for(level), std::mt19937(seed)};
  run.report.seed = seed;
  register_core_checks(run);
  register_crystal_checks(run);
  register_tableau_checks(run);
  register_insertion_checks(run);
  register_lr_checks(run);
  return run.report;
}

}  // namespace qcrystal
