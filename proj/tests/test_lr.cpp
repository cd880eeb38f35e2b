#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/lr.hpp"

using namespace qcrystal;

namespace {

Word W(const std::string& text, int n) { return Word::parse(text, n); }
StrictPartition P(const std::string& text) { return StrictPartition::parse(text); }

std::set<std::string> word_texts(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const Word& w : words) out.insert(w.str());
  return out;
}

}  // namespace

TEST_CASE("cell chains") {
  auto chain = chain_from_word(W("12", 3), P("3,1"), 3);
  REQUIRE(chain.has_value());
  CHECK(chain->rows == std::vector<int>{2, 3});
  CHECK(chain->result == P("3,2,1"));

  // a trailing 1 adds at the bottom row and breaks strictness
  CHECK_FALSE(chain_from_word(W("21", 3), P("3,1"), 3).has_value());
  CHECK_FALSE(chain_from_word(W("11", 3), P("3,1"), 3).has_value());

  auto empty = chain_from_word(Word(3), P("3,1"), 3);
  REQUIRE(empty.has_value());
  CHECK(empty->result == P("3,1"));
}

TEST_CASE("coefficient word sets") {
  CHECK(word_texts(lr_set(P("2"), P("3,1"), P("3,2,1"), 3)) == std::set<std::string>{"12"});
  CHECK(word_texts(lr_set(P("2"), P("3,1"), P("4,2"), 3)) == std::set<std::string>{"23", "32"});
  CHECK(word_texts(lr_set(P("2"), P("3,1"), P("5,1"), 3)) == std::set<std::string>{"33"});
  CHECK(lr_set(P("2"), P("3,1"), P("4,1"), 3).empty());

  CHECK(lr_coefficient(P("2"), P("3,1"), P("4,2"), 3) == 2);
  // incompatible shapes count zero rather than erroring
  CHECK(lr_coefficient(P("2"), P("3,1"), P("6,1"), 3) == 0);
  CHECK(lr_coefficient(P("2"), P("3,1"), P("2,1"), 3) == 0);
}

TEST_CASE("tensor decomposition worked examples") {
  Decomposition expect{{P("3,2,1"), 1}, {P("4,2"), 2}, {P("5,1"), 1}};
  for (auto method : {DecomposeMethod::lattice_words, DecomposeMethod::insertion,
                      DecomposeMethod::lr_tableaux, DecomposeMethod::components})
    CHECK(decompose_tensor(P("2"), P("3,1"), 3, method) == expect);

  Decomposition square{{P("4,3,1"), 2}, {P("5,2,1"), 2}, {P("5,3"), 2}, {P("6,2"), 1}};
  for (auto& [method, result] : decompose_tensor_all(P("3,1"), P("3,1"), 3)) {
    CAPTURE(method_name(method));
    CHECK(result == square);
  }

  // empty tensor factors
  CHECK(decompose_tensor(P("-"), P("3,1"), 3) == Decomposition{{P("3,1"), 1}});
  CHECK(decompose_tensor(P("2"), P("-"), 3) == Decomposition{{P("2"), 1}});
}

TEST_CASE("skew tableau descriptions") {
  // of the five standard fillings of (4,3,1)/(3,1), exactly two pass
  auto picked = lr_tilde_tableaux(P("3,1"), P("3,1"), P("4,3,1"), 3);
  REQUIRE(picked.size() == 2);
  std::set<std::string> got;
  for (const auto& q : picked) got.insert(q.str());
  // frozen from the membership rule: entry rows (1,2,2,3) and (2,3,1,2)
  StandardShiftedTableau first(ShiftedShape(P("4,3,1"), P("3,1")), {{0, 0, 0, 1}, {0, 2, 3}, {4}});
  StandardShiftedTableau second(ShiftedShape(P("4,3,1"), P("3,1")), {{0, 0, 0, 3}, {0, 1, 4}, {2}});
  CHECK(got == std::set<std::string>{first.str(), second.str()});

  auto single = lr_tilde_tableaux(P("2"), P("3,1"), P("5,1"), 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].cell_of(1) == std::pair<std::size_t, int>{1, 4});
  CHECK(single[0].cell_of(2) == std::pair<std::size_t, int>{1, 5});

  // empty type: the empty filling of mu/mu
  auto trivial = lr_tilde_tableaux(P("-"), P("3,1"), P("3,1"), 3);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].empty());

  CHECK_THROWS_AS(lr_tilde_tableaux(P("2"), P("3,1"), P("2,1"), 3), std::invalid_argument);
}

TEST_CASE("power decomposition") {
  for (int n : {2, 3, 4}) CHECK(decompose_power(n, 2) == Decomposition{{P("2"), 1}});
  for (int n : {2, 3, 4})
    CHECK(decompose_power(n, 4) == Decomposition{{P("3,1"), 2}, {P("4"), 1}});
  CHECK(decompose_power(3, 3) == Decomposition{{P("2,1"), 1}, {P("3"), 1}});

  // multiplicities equal the lowest-vector counts per weight
  for (int n : {2, 3}) {
    for (int len = 1; len <= 5; ++len) {
      Decomposition by_lowest;
      std::vector<int> letters(static_cast<std::size_t>(len), 1);
      while (true) {
        Word w(letters, n);
        if (is_lowest(w)) {
          std::vector<int> coords = weight_of(w).coords;
          std::vector<int> rev(coords.rbegin(), coords.rend());
          while (!rev.empty() && rev.back() == 0) rev.pop_back();
          ++by_lowest[StrictPartition(rev)];
        }
        int pos = len - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == n)
          letters[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
      }
      CHECK(by_lowest == decompose_power(n, len));
    }
  }
}

TEST_CASE("conservation of cardinalities") {
  const int n = 3;
  for (const auto& [lambda, mu] :
       std::vector<std::pair<StrictPartition, StrictPartition>>{
           {P("2"), P("3,1")}, {P("3,1"), P("3,1")}, {P("2,1"), P("2")}, {P("3"), P("2,1")}}) {
    Decomposition d = decompose_tensor(lambda, mu, n);
    long long total = 0;
    for (const auto& [nu, mult] : d)
      total += mult * static_cast<long long>(enumerate_ssdt(nu, n).size());
    long long expect = static_cast<long long>(enumerate_ssdt(lambda, n).size()) *
                       static_cast<long long>(enumerate_ssdt(mu, n).size());
    CHECK(total == expect);
  }
}

TEST_CASE("lowest vector reconstruction from skew tableaux") {
  const int n = 3;
  StrictPartition lambda = P("3,1"), mu = P("3,1");
  for (const StrictPartition& nu : strict_partitions(lambda.size() + mu.size(), n)) {
    if (!nu.contains(mu)) continue;
    for (const StandardShiftedTableau& q : lr_tilde_tableaux(lambda, mu, nu, n)) {
      std::vector<int> letters;
      for (int value = lambda.size(); value >= 1; --value)
        letters.push_back(n - static_cast<int>(q.row_of(value)) + 1);
      auto t = Ssdt::from_reading_word(Word(letters, n), lambda);
      REQUIRE(t.has_value());
      RightInsertion right = insert_tableau_right(*t, lowest_tableau(mu, n));
      CHECK(right.product == lowest_tableau(nu, n));
      CHECK(right.recording == q);
    }
  }
}

TEST_CASE("components oracle is size guarded") {
  CHECK_THROWS_AS(decompose_tensor(P("6,4,2"), P("3,2,1"), 4, DecomposeMethod::components),
                  std::invalid_argument);
  // shapes taller than the rank are rejected up front
  CHECK_THROWS_AS(decompose_tensor(P("3,2,1"), P("2"), 2, DecomposeMethod::lattice_words),
                  std::invalid_argument);
}
