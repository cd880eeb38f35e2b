#include "qcrystal/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qcrystal {

namespace {

void check_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2, got " + std::to_string(rank));
}

// Splits "a,b,c" into integers, reporting the position of a bad token.
std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("expected an integer, got \"" + std::string(token) + "\"", pos);
    values.push_back(value);
    if (next == text.size()) break;
    pos = next + 1;
  }
  return values;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(std::vector<int> letters, int rank) : letters_(std::move(letters)), rank_(rank) {
  check_rank(rank);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > rank_)
      throw std::invalid_argument("letter " + std::to_string(letters_[i]) + " at index " +
                                  std::to_string(i) + " is outside 1.." + std::to_string(rank_));
  }
}

Word Word::parse(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<int> letters;
  if (text.empty()) return Word(rank);
  if (text.find(',') != std::string_view::npos) {
    letters = parse_int_list(text);
  } else if (rank <= 9) {
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '1' || c > '9') throw ParseError(std::string("expected a digit 1-9, got '") + c + "'", i);
      letters.push_back(c - '0');
    }
  } else {
    // rank > 9 without commas: a single integer letter
    letters = parse_int_list(text);
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1 || letters[i] > rank)
      throw ParseError("letter " + std::to_string(letters[i]) + " is outside 1.." + std::to_string(rank), i);
  }
  return Word(std::move(letters), rank);
}

Word Word::subword(std::size_t first, std::size_t count) const {
  if (first + count > letters_.size()) throw std::out_of_range("subword out of range");
  return Word(std::vector<int>(letters_.begin() + static_cast<long>(first),
                               letters_.begin() + static_cast<long>(first + count)),
              rank_);
}

std::string Word::str() const {
  std::string out;
  if (rank_ <= 9) {
    for (int x : letters_) out.push_back(static_cast<char>('0' + x));
  } else {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
  return a.rank_ <=> b.rank_;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("concat: rank mismatch");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(letters), u.rank());
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("weight size mismatch");
  Weight out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Weight weight_of(const Word& w) {
  Weight wt{std::vector<int>(static_cast<std::size_t>(w.rank()), 0)};
  for (int x : w.letters()) ++wt.coords[static_cast<std::size_t>(x - 1)];
  return wt;
}

bool is_dominant_weight(const std::vector<int>& coords) {
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    if (coords[i] < coords[i + 1]) return false;
    if (coords[i] == coords[i + 1] && coords[i] != 0) return false;
  }
  return coords.empty() || coords.back() >= 0;
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition part " + std::to_string(parts_[i]) + " is not positive");
    if (i > 0 && parts_[i - 1] <= parts_[i])
      throw std::invalid_argument("partition parts must strictly decrease");
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  if (text.empty() || text == "-") return StrictPartition();
  return StrictPartition(parse_int_list(text));
}

int StrictPartition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int StrictPartition::part(std::size_t i) const noexcept {
  return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
}

bool StrictPartition::contains(const StrictPartition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string StrictPartition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b) {
  return a.parts_ <=> b.parts_;
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::size_t slots_left,
                           std::vector<int>& acc, std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (slots_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // the remaining slots must be able to absorb what is left
    acc.push_back(p);
    strict_partitions_rec(remaining - p, p - 1, slots_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions(int total, std::size_t max_length) {
  std::vector<StrictPartition> out;
  if (total < 0) return out;
  std::vector<int> acc;
  strict_partitions_rec(total, total, max_length, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

ShiftedShape::ShiftedShape(StrictPartition outer) : outer_(std::move(outer)) {}

ShiftedShape::ShiftedShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape " + inner_.str() + " is not contained in " + outer_.str());
}

std::size_t ShiftedShape::cell_count() const noexcept {
  return static_cast<std::size_t>(outer_.size() - inner_.size());
}

int ShiftedShape::row_first_col(std::size_t r) const {
  return static_cast<int>(r) + inner_.part(r);
}

int ShiftedShape::row_last_col(std::size_t r) const {
  return static_cast<int>(r) + outer_.part(r) - 1;
}

bool ShiftedShape::has_cell(std::size_t r, int col) const {
  return r >= 1 && r <= row_count() && col >= static_cast<int>(r) && col <= row_last_col(r);
}

bool ShiftedShape::is_inner(std::size_t r, int col) const {
  return has_cell(r, col) && col < row_first_col(r);
}

StandardShiftedTableau::StandardShiftedTableau(ShiftedShape shape) : shape_(std::move(shape)) {
  if (shape_.cell_count() != 0)
    throw std::invalid_argument("entries required for a nonempty shape");
  rows_.assign(shape_.row_count(), {});
  for (std::size_t r = 1; r <= shape_.row_count(); ++r)
    rows_[r - 1].assign(static_cast<std::size_t>(shape_.outer().part(r)), 0);
}

StandardShiftedTableau::StandardShiftedTableau(ShiftedShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.row_count())
    throw std::invalid_argument("row count does not match the shape");
  count_ = shape_.cell_count();
  std::vector<bool> seen(count_ + 1, false);
  for (std::size_t r = 1; r <= shape_.row_count(); ++r) {
    const auto& row = rows_[r - 1];
    if (row.size() != static_cast<std::size_t>(shape_.outer().part(r)))
      throw std::invalid_argument("row " + std::to_string(r) + " length does not match the shape");
    int prev = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      int col = static_cast<int>(r) + static_cast<int>(j);
      if (shape_.is_inner(r, col)) {
        if (row[j] != 0)
          throw std::invalid_argument("inner cell of row " + std::to_string(r) + " must hold 0");
        continue;
      }
      int v = row[j];
      if (v < 1 || v > static_cast<int>(count_) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("entries must be exactly 1.." + std::to_string(count_));
      seen[static_cast<std::size_t>(v)] = true;
      if (prev != 0 && v <= prev)
        throw std::invalid_argument("row " + std::to_string(r) + " is not strictly increasing");
      prev = v;
      if (r > 1) {
        int above = entry(r - 1, col);
        if (above != 0 && above >= v)
          throw std::invalid_argument("column " + std::to_string(col) + " is not strictly increasing");
      }
    }
  }
}

StandardShiftedTableau StandardShiftedTableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  bool comma = text.find(',') != std::string_view::npos;
  while (pos <= text.size()) {
    std::size_t next = text.find('/', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    std::vector<int> row;
    if (comma) {
      try {
        row = parse_int_list(token);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos + e.position());
      }
    } else {
      for (std::size_t i = 0; i < token.size(); ++i) {
        char c = token[i];
        if (c < '1' || c > '9')
          throw ParseError(std::string("expected a digit 1-9, got '") + c + "'", pos + i);
        row.push_back(c - '0');
      }
    }
    if (row.empty()) throw ParseError("empty tableau row", pos);
    rows.push_back(std::move(row));
    if (next == text.size()) break;
    pos = next + 1;
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return StandardShiftedTableau(ShiftedShape(StrictPartition(parts)), std::move(rows));
}

int StandardShiftedTableau::entry(std::size_t row, int col) const {
  if (!shape_.has_cell(row, col)) throw std::out_of_range("no cell at that position");
  return rows_[row - 1][static_cast<std::size_t>(col - static_cast<int>(row))];
}

std::pair<std::size_t, int> StandardShiftedTableau::cell_of(int value) const {
  for (std::size_t r = 1; r <= shape_.row_count(); ++r) {
    const auto& row = rows_[r - 1];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] == value) return {r, static_cast<int>(r) + static_cast<int>(j)};
  }
  throw std::out_of_range("entry " + std::to_string(value) + " not present");
}

std::size_t StandardShiftedTableau::row_of(int value) const { return cell_of(value).first; }

std::string StandardShiftedTableau::str() const {
  if (!shape_.skew()) {
    std::string out;
    bool comma = count_ > 9;
    for (std::size_t r = 1; r <= shape_.row_count(); ++r) {
      if (r > 1) out.push_back('/');
      const auto& row = rows_[r - 1];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (comma && j) out.push_back(',');
        out += std::to_string(row[j]);
      }
    }
    return out;
  }
  // grid render: one line per row, cells padded to a fixed width, "." for
  // inner cells
  std::size_t width = std::to_string(count_).size();
  std::ostringstream os;
  for (std::size_t r = 1; r <= shape_.row_count(); ++r) {
    if (r > 1) os << '\n';
    for (int col = 1; col <= shape_.row_last_col(r); ++col) {
      if (col > 1) os << ' ';
      std::string cell;
      if (!shape_.has_cell(r, col))
        cell = "";
      else if (shape_.is_inner(r, col))
        cell = ".";
      else
        cell = std::to_string(entry(r, col));
      os << cell << std::string(width - std::min(width, cell.size()), ' ');
    }
  }
  return os.str();
}

std::strong_ordering operator<=>(const StandardShiftedTableau& a, const StandardShiftedTableau& b) {
  if (auto c = a.shape_.outer() <=> b.shape_.outer(); c != 0) return c;
  if (auto c = a.shape_.inner() <=> b.shape_.inner(); c != 0) return c;
  return a.rows_ <=> b.rows_;
}

namespace {

// Places entries 1..m one by one; a row can take the next entry once the
// cell above its frontier is settled (inner, absent, or already filled).
void enumerate_standard_rec(const ShiftedShape& shape, std::vector<std::size_t>& filled,
                            std::vector<std::vector<int>>& rows, int next, int total,
                            std::vector<StandardShiftedTableau>& out) {
  if (next > total) {
    out.emplace_back(shape, rows);
    return;
  }
  for (std::size_t r = 1; r <= shape.row_count(); ++r) {
    int col = shape.row_first_col(r) + static_cast<int>(filled[r - 1]);
    if (col > shape.row_last_col(r)) continue;  // row full
    if (r > 1) {
      // the cell above is always inside the outer shape here
      bool above_settled = shape.is_inner(r - 1, col) ||
                           col < shape.row_first_col(r - 1) + static_cast<int>(filled[r - 2]);
      if (!above_settled) continue;
    }
    rows[r - 1][static_cast<std::size_t>(col - static_cast<int>(r))] = next;
    ++filled[r - 1];
    enumerate_standard_rec(shape, filled, rows, next + 1, total, out);
    --filled[r - 1];
    rows[r - 1][static_cast<std::size_t>(col - static_cast<int>(r))] = 0;
  }
}

}  // namespace

std::vector<StandardShiftedTableau> enumerate_standard_shifted(const ShiftedShape& shape) {
  std::vector<StandardShiftedTableau> out;
  std::vector<std::vector<int>> rows(shape.row_count());
  for (std::size_t r = 1; r <= shape.row_count(); ++r)
    rows[r - 1].assign(static_cast<std::size_t>(shape.outer().part(r)), 0);
  std::vector<std::size_t> filled(shape.row_count(), 0);
  enumerate_standard_rec(shape, filled, rows, 1, static_cast<int>(shape.cell_count()), out);
  return out;
}

}  // namespace qcrystal
