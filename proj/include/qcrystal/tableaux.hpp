#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcrystal/core.hpp"

namespace qcrystal {

/// Split of a hook word u_1 >= ... >= u_k < u_{k+1} < ... < u_N: `pivot` is
/// the 1-based k.  The split is unique when it exists, and k is the length of
/// the maximal weakly decreasing prefix.
struct HookSplit {
  std::size_t pivot;
};

/// Empty optional when `w` is not a hook word; throws on the empty word.
std::optional<HookSplit> hook_split(const Word& w);
bool is_hook_word(const Word& w);

/// Length of the longest subsequence of `w` that is a hook word, by a
/// dynamic program over (last letter, phase) states.
int max_hook_subword_len(const Word& w);

/// True iff the rows (top to bottom, strictly decreasing lengths) form a
/// semistandard decomposition tableau: every row is a hook word and no row
/// pair admits a longer hook subword.  This route runs the pairwise
/// obstruction scan; throws if the lengths do not strictly decrease.
bool is_ssdt(const std::vector<Word>& rows);
/// Same predicate through max_hook_subword_len; kept as an independent route.
bool is_ssdt_by_subword(const std::vector<Word>& rows);

/// Semistandard decomposition tableau of a shifted straight shape.
class Ssdt {
public:
  explicit Ssdt(int rank);  // empty tableau

  /// Validates and adopts rows listed top to bottom.
  static Ssdt from_rows(std::vector<Word> rows);
  static std::optional<Ssdt> try_from_rows(std::vector<Word> rows);
  /// Cuts `w` into rows of the given shape (bottom row first) and validates;
  /// empty optional when the filling is not a tableau.  Throws when the
  /// lengths do not match.
  static std::optional<Ssdt> from_reading_word(const Word& w, const StrictPartition& shape);
  /// Rows joined by "/", e.g. "66325/421/3".
  static Ssdt parse(std::string_view text, int rank);

  int rank() const noexcept { return rank_; }
  const StrictPartition& shape() const noexcept { return shape_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  /// 1-based row access, top to bottom.
  const Word& row(std::size_t i) const { return rows_.at(i - 1); }
  const std::vector<Word>& rows() const noexcept { return rows_; }

  /// Bottom row first, each row left to right.
  Word reading_word() const;
  std::string str() const;

  friend bool operator==(const Ssdt&, const Ssdt&) = default;
  friend std::strong_ordering operator<=>(const Ssdt& a, const Ssdt& b);

private:
  Ssdt(StrictPartition shape, std::vector<Word> rows, int rank);

  StrictPartition shape_;
  std::vector<Word> rows_;
  int rank_;
};

Weight weight_of(const Ssdt& t);

/// All tableaux of the given shape over {1..n}, ordered lexicographically by
/// reading word.
std::vector<Ssdt> enumerate_ssdt(const StrictPartition& shape, int n);

/// The unique extremal tableaux: row k of the highest one is
/// (r-k+1)^{s_r} (r-k)^{s_{r-1}} ... 1^{s_k} with s_j = shape_j - shape_{j+1},
/// and row k of the lowest one is (n-k+1)^{shape_k}.
Ssdt highest_tableau(const StrictPartition& shape, int n);
Ssdt lowest_tableau(const StrictPartition& shape, int n);

}  // namespace qcrystal
