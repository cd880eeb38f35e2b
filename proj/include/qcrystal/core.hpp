#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcrystal {

/// Parse failure carrying the offending position (0-based) in the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A word over the alphabet {1, ..., n}, stored left to right.  The leftmost
/// letter is the first tensor factor.
class Word {
public:
  explicit Word(int rank);
  Word(std::vector<int> letters, int rank);

  /// Text form: a digit string when rank <= 9 ("2321"), comma-separated
  /// integers otherwise ("12,3,11").  Rank <= 9 also accepts the comma form.
  static Word parse(std::string_view text, int rank);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int at(std::size_t i) const { return letters_.at(i); }
  const std::vector<int>& letters() const noexcept { return letters_; }

  /// Contiguous subword starting at 0-based position `first`, `count` letters.
  Word subword(std::size_t first, std::size_t count) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  std::vector<int> letters_;
  int rank_;
};

Word concat(const Word& u, const Word& v);

/// Integer vector of length n; coords[i] is the multiplicity of letter i+1.
struct Weight {
  std::vector<int> coords;

  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight weight_of(const Word& w);

/// True if coords, read as a weight, is dominant: weakly decreasing with
/// equal entries allowed only at zero (so the nonzero prefix is a strict
/// partition).
bool is_dominant_weight(const std::vector<int>& coords);

/// Strictly decreasing sequence of positive integers; may be empty.
class StrictPartition {
public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  /// Comma-separated parts ("6,4,2,1"); "-" or the empty string parse to the
  /// empty partition.
  static StrictPartition parse(std::string_view text);

  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept;
  /// 1-based part access; rows beyond the length read as 0.
  int part(std::size_t i) const noexcept;
  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part-wise containment (the shifted layout shares row offsets, so skew
  /// containment reduces to part-wise inequalities).
  bool contains(const StrictPartition& inner) const;

  std::string str() const;  // "6,4,2,1"; "-" when empty

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b);

private:
  std::vector<int> parts_;
};

/// All strict partitions of `total` with at most `max_length` parts, in
/// lexicographically increasing part order.
std::vector<StrictPartition> strict_partitions(int total, std::size_t max_length);

/// Shifted (possibly skew) shape: row r occupies absolute columns
/// r .. r + outer_r - 1, of which the first inner_r cells are removed.
class ShiftedShape {
public:
  ShiftedShape() = default;
  explicit ShiftedShape(StrictPartition outer);
  ShiftedShape(StrictPartition outer, StrictPartition inner);

  const StrictPartition& outer() const noexcept { return outer_; }
  const StrictPartition& inner() const noexcept { return inner_; }
  bool skew() const noexcept { return !inner_.empty(); }
  std::size_t row_count() const noexcept { return outer_.length(); }
  std::size_t cell_count() const noexcept;

  /// Absolute 1-based column bounds of the cells present in row r (1-based).
  int row_first_col(std::size_t r) const;  // r + inner_r
  int row_last_col(std::size_t r) const;   // r + outer_r - 1
  bool has_cell(std::size_t r, int col) const;
  bool is_inner(std::size_t r, int col) const;

  friend bool operator==(const ShiftedShape&, const ShiftedShape&) = default;

private:
  StrictPartition outer_;
  StrictPartition inner_;
};

/// Filling of a shifted (skew) shape with 1..m, each once, strictly
/// increasing along rows and columns.
class StandardShiftedTableau {
public:
  StandardShiftedTableau() = default;  // empty shape, no entries
  explicit StandardShiftedTableau(ShiftedShape shape);  // requires 0 cells
  /// `rows` has one vector per outer row; inner cells hold 0.
  StandardShiftedTableau(ShiftedShape shape, std::vector<std::vector<int>> rows);

  /// Straight-shape row text: "124/3", or comma form "1,2,4/3" for entries
  /// beyond 9.
  static StandardShiftedTableau parse(std::string_view text);

  const ShiftedShape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Entry at (1-based row, absolute 1-based column); 0 for inner cells.
  int entry(std::size_t row, int col) const;
  /// 1-based row containing entry `value`.
  std::size_t row_of(int value) const;
  std::pair<std::size_t, int> cell_of(int value) const;  // (row, abs column)

  /// Straight shapes render as slash-joined rows; skew shapes as a grid with
  /// "." for inner cells.
  std::string str() const;

  friend bool operator==(const StandardShiftedTableau&, const StandardShiftedTableau&) = default;
  friend std::strong_ordering operator<=>(const StandardShiftedTableau& a,
                                          const StandardShiftedTableau& b);

private:
  ShiftedShape shape_;
  std::vector<std::vector<int>> rows_;
  std::size_t count_ = 0;
};

/// All standard fillings of the given shifted (skew) shape, in a fixed
/// deterministic order.
std::vector<StandardShiftedTableau> enumerate_standard_shifted(const ShiftedShape& shape);

}  // namespace qcrystal
