#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcrystal/core.hpp"

namespace qcrystal {

/// Operator label: even(i) for 1 <= i <= n-1, or odd(i) for the odd
/// operators, odd(1) being the basic one and odd(i >= 2) its Weyl conjugate.
class OperatorIndex {
public:
  static OperatorIndex even(int i) { return OperatorIndex(false, i); }
  static OperatorIndex odd(int i) { return OperatorIndex(true, i); }
  /// "2" -> even(2), "2bar" -> odd(2).
  static OperatorIndex parse(std::string_view token);

  bool is_even() const noexcept { return !odd_; }
  bool is_odd() const noexcept { return odd_; }
  int index() const noexcept { return index_; }
  std::string str() const;

  friend bool operator==(const OperatorIndex&, const OperatorIndex&) = default;
  friend std::strong_ordering operator<=>(const OperatorIndex&, const OperatorIndex&) = default;

private:
  OperatorIndex(bool odd, int index) : odd_(odd), index_(index) {}

  bool odd_;
  int index_;
};

/// even(1..n-1) followed by odd(1), and odd(2..n-1) as well when
/// `include_bar` is set.
std::vector<OperatorIndex> operator_labels(int n, bool include_bar = false);

/// Lowering operator on words; empty optional when the operator vanishes.
std::optional<Word> apply_f(const Word& w, OperatorIndex op);
/// Raising operator; exact partial inverse of apply_f.
std::optional<Word> apply_e(const Word& w, OperatorIndex op);

/// Statistics for the even operators: eps counts raises, phi counts lowers.
int eps(const Word& w, int i);
int phi(const Word& w, int i);

/// Weyl reflection along the i-th simple root; an involution on words.
Word weyl_s(const Word& w, int i);
/// Composite action for a reduced word s_{a_1} ... s_{a_k}: the rightmost
/// generator acts first.  Well-definedness across reduced expressions of the
/// same group element is checked by the verification suite.
Word weyl_w(const Word& w, std::span<const int> reduced_word);
/// Fixed reduced word for the longest element: (1)(2 1)(3 2 1)...
std::vector<int> longest_element_word(int n);

/// Suffix-counting criterion: in every suffix, letter i occurs strictly more
/// often than i-1 whenever i-1 occurs at all.
bool is_strict_reverse_lattice(const Word& w);
/// No raising operator (even or odd) applies.
bool is_highest(const Word& w);
/// Fast path via is_strict_reverse_lattice.
bool is_lowest(const Word& w);
/// Definitional route: the longest-element image is highest.  Agreement with
/// is_lowest is part of the verification suite.
bool is_lowest_by_weyl(const Word& w);

/// All highest weight vectors of the given length, built by the recursive
/// construction (prepend 1, lower down the added column); equals the
/// brute-force filter of is_highest.
std::vector<Word> highest_weight_vectors(int n, int length);

struct CrystalEdge {
  Word from;
  OperatorIndex label;
  Word to;

  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
  friend std::strong_ordering operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

/// Connected component as a plain graph artifact.  Vertices sorted
/// lexicographically; edges are the lowering arrows, sorted.
struct CrystalGraph {
  std::vector<Word> vertices;
  std::vector<CrystalEdge> edges;

  friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
};

/// Closure of `w` under the even operators and odd(1), in both directions.
/// odd(i >= 2) edges are derived data; they join the edge set only when
/// `include_bar_edges` is set and never enlarge the vertex set.
CrystalGraph component(const Word& w, bool include_bar_edges = false);

/// Deterministic DOT text: solid edges labeled "1".."n-1", dashed edges
/// labeled "1bar" (and "2bar", ... when present).
std::string to_dot(const CrystalGraph& graph);

}  // namespace qcrystal
