#include "qcrystal/insertion.hpp"

namespace qcrystal {

namespace {

using Rows = std::vector<std::vector<int>>;

Rows to_rows(const Ssdt& t) {
  Rows rows;
  rows.reserve(t.row_count());
  for (const Word& row : t.rows()) rows.push_back(row.letters());
  return rows;
}

Ssdt to_ssdt(const Rows& rows, int rank) {
  if (rows.empty()) return Ssdt(rank);
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const auto& row : rows) words.push_back(Word(row, rank));
  return Ssdt::from_rows(std::move(words));
}

std::size_t split_of(const std::vector<int>& row) {
  std::size_t k = 1;
  while (k < row.size() && row[k - 1] >= row[k]) ++k;
  return k;  // rows of a tableau are hook words, so the suffix is increasing
}

struct RowStep {
  bool appended;
  int bumped;
};

// One bumping step.  Appending keeps the row a hook word exactly when the
// increasing part is empty or x exceeds its last letter; otherwise x lands on
// the leftmost increasing-part letter >= x, whose value bumps the leftmost
// strictly smaller decreasing-part letter out of the row.
RowStep row_insert(std::vector<int>& row, int x) {
  std::size_t k = split_of(row);
  if (k == row.size() || x > row.back()) {
    row.push_back(x);
    return {true, 0};
  }
  std::size_t j = k;
  while (row[j] < x) ++j;
  int displaced = row[j];
  row[j] = x;
  std::size_t i = 0;
  while (row[i] >= displaced) ++i;  // stops before k: row[k-1] < displaced
  int bumped = row[i];
  row[i] = displaced;
  return {false, bumped};
}

NewCell rows_insert(Rows& rows, int x) {
  int carry = x;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    RowStep step = row_insert(rows[r], carry);
    if (step.appended)
      return NewCell{r + 1, static_cast<int>(r + rows[r].size())};
    carry = step.bumped;
  }
  rows.push_back({carry});
  return NewCell{rows.size(), static_cast<int>(rows.size())};
}

// Reverse bumping step: the incoming letter re-enters the row from below.
// Mirrors row_insert exactly; throws when the row cannot have produced it.
int row_reverse_insert(std::vector<int>& row, int incoming) {
  std::size_t k = split_of(row);
  if (k == 1 || incoming >= row[0])
    throw std::invalid_argument("pair is not in the image of the correspondence");
  std::size_t i = k - 1;
  while (row[i - 1] <= incoming) --i;  // rightmost strictly greater, excluding the pivot
  int lifted = row[i - 1];
  row[i - 1] = incoming;
  std::size_t j = row.size();
  while (row[j - 1] > lifted) --j;  // rightmost <= lifted in the tail from the pivot on
  int out = row[j - 1];
  row[j - 1] = lifted;
  return out;
}

// The single cell by which `outer` exceeds `inner`.
NewCell added_cell(const StrictPartition& outer, const StrictPartition& inner) {
  std::size_t where = 0;
  for (std::size_t r = 1; r <= outer.length(); ++r) {
    int diff = outer.part(r) - inner.part(r);
    if (diff == 0) continue;
    if (diff != 1 || where != 0)
      throw std::logic_error("shapes do not differ by a single cell");
    where = r;
  }
  if (where == 0) throw std::logic_error("shapes do not differ by a single cell");
  return NewCell{where, static_cast<int>(where) + outer.part(where) - 1};
}

StandardShiftedTableau recording_from_cells(const StrictPartition& outer,
                                            const StrictPartition& inner,
                                            const std::vector<NewCell>& cells) {
  ShiftedShape shape(outer, inner);
  std::vector<std::vector<int>> grid(shape.row_count());
  for (std::size_t r = 1; r <= shape.row_count(); ++r)
    grid[r - 1].assign(static_cast<std::size_t>(outer.part(r)), 0);
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const NewCell& cell = cells[idx];
    grid[cell.row - 1][static_cast<std::size_t>(cell.col - static_cast<int>(cell.row))] =
        static_cast<int>(idx + 1);
  }
  return StandardShiftedTableau(std::move(shape), std::move(grid));
}

}  // namespace

InsertionTrace insert_letter(const Ssdt& t, int letter) {
  if (letter < 1 || letter > t.rank())
    throw std::invalid_argument("letter " + std::to_string(letter) + " is outside 1.." +
                                std::to_string(t.rank()));
  Rows rows = to_rows(t);
  NewCell cell = rows_insert(rows, letter);
  return InsertionTrace{to_ssdt(rows, t.rank()), cell};
}

Ssdt insert_word(const Ssdt& t, const Word& w) {
  if (w.rank() != t.rank()) throw std::invalid_argument("rank mismatch");
  Rows rows = to_rows(t);
  for (int x : w.letters()) rows_insert(rows, x);
  return to_ssdt(rows, t.rank());
}

Ssdt insert_tableau_left(const Ssdt& t, const Ssdt& other) {
  return insert_word(t, other.reading_word());
}

RightInsertion insert_tableau_right(const Ssdt& t, const Ssdt& into) {
  if (t.rank() != into.rank()) throw std::invalid_argument("rank mismatch");
  const int n = t.rank();
  Word u = t.reading_word();
  Ssdt cur = into;
  std::vector<StrictPartition> shapes{into.shape()};
  for (std::size_t idx = u.size(); idx >= 1; --idx) {
    Ssdt single = Ssdt::from_rows({Word({u.at(idx - 1)}, n)});
    cur = insert_word(single, cur.reading_word());
    shapes.push_back(cur.shape());
  }
  std::vector<NewCell> cells;
  cells.reserve(u.size());
  for (std::size_t j = 1; j < shapes.size(); ++j) cells.push_back(added_cell(shapes[j], shapes[j - 1]));
  return RightInsertion{cur, recording_from_cells(cur.shape(), into.shape(), cells)};
}

RskPair rsk(const Word& u) {
  Rows rows;
  std::vector<NewCell> cells;
  cells.reserve(u.size());
  for (int x : u.letters()) cells.push_back(rows_insert(rows, x));
  Ssdt p = to_ssdt(rows, u.rank());
  return RskPair{p, recording_from_cells(p.shape(), StrictPartition(), cells)};
}

Word inverse_rsk(const Ssdt& p, const StandardShiftedTableau& q) {
  if (q.shape().skew()) throw std::invalid_argument("recording tableau must have straight shape");
  if (p.shape() != q.shape().outer())
    throw std::invalid_argument("tableau shapes differ: " + p.shape().str() + " vs " +
                                q.shape().outer().str());
  Rows rows = to_rows(p);
  const int total = static_cast<int>(q.size());
  std::vector<int> letters(static_cast<std::size_t>(total), 0);
  for (int value = total; value >= 1; --value) {
    auto [r, col] = q.cell_of(value);
    if (r > rows.size() || col != static_cast<int>(r) + static_cast<int>(rows[r - 1].size()) - 1)
      throw std::invalid_argument("recording tableau does not match the insertion order");
    int carry = rows[r - 1].back();
    rows[r - 1].pop_back();
    if (rows[r - 1].empty()) {
      if (r != rows.size()) throw std::invalid_argument("recording tableau emptied a middle row");
      rows.pop_back();
    }
    for (std::size_t row = r - 1; row >= 1; --row) carry = row_reverse_insert(rows[row - 1], carry);
    letters[static_cast<std::size_t>(value - 1)] = carry;
  }
  return Word(std::move(letters), p.rank());
}

bool in_knuth_domain(const Word& w) {
  if (w.size() != 4) return false;
  return w.at(1) < w.at(2) && w.at(2) >= w.at(3);
}

bool in_knuth_image(const Word& w) {
  if (w.size() != 4) return false;
  return w.at(0) < w.at(1) && w.at(1) >= w.at(2);
}

Word knuth_psi(const Word& w) {
  if (!in_knuth_domain(w))
    throw std::invalid_argument("word is not a four-letter hook of the exchange domain");
  const int a = w.at(0), b = w.at(1), c = w.at(2), d = w.at(3);
  const int n = w.rank();
  auto make = [n](int x, int y, int z, int t) { return Word({x, y, z, t}, n); };
  if (d <= b && b <= a && a < c) return make(a, c, b, d);
  if (b < d && d <= a && a < c) return make(a, c, b, d);
  if (b <= a && a < d && d <= c) return make(a, c, b, d);
  if (a < b && b < d && d <= c) return make(a, c, b, d);
  if (b < d && d <= c && c <= a) return make(b, a, c, d);
  if (d <= b && b < c && c <= a) return make(b, a, c, d);
  if (a < d && d <= b && b < c) return make(a, b, d, c);
  if (d <= a && a < b && b < c) return make(a, b, d, c);
  throw std::logic_error("exchange cases failed to cover the domain");
}

}  // namespace qcrystal
