#include "qcrystal/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace qcrystal {

namespace {

// The split position of a hook word is forced: two distinct pivots k < k'
// would require u_k < u_{k+1} and u_k >= u_{k+1} at once.  So the pivot is
// the maximal weakly decreasing prefix.
std::optional<std::size_t> raw_hook_split(const std::vector<int>& w) {
  if (w.empty()) throw std::invalid_argument("hook split of the empty word");
  std::size_t k = 1;
  while (k < w.size() && w[k - 1] >= w[k]) ++k;
  for (std::size_t j = k; j + 1 <= w.size() - 1; ++j)
    if (w[j] >= w[j + 1]) return std::nullopt;
  return k;
}

// Obstruction scan for one adjacent row pair: `upper` is the longer row,
// `lower` the row below it.  The pair fails exactly when lower*upper admits a
// hook subword longer than the upper row, which happens iff one of three
// letter patterns occurs.
bool pair_ok(const std::vector<int>& upper, const std::vector<int>& lower) {
  const std::size_t ll = lower.size();
  // (i) some lower letter dominates the head of the upper row
  for (std::size_t a = 0; a < ll; ++a)
    if (upper[0] <= lower[a]) return false;
  // (ii) a weakly decreasing step of the lower row caps an upper letter
  for (std::size_t a = 0; a < ll; ++a)
    for (std::size_t b = a + 1; b < ll; ++b)
      if (lower[a] >= lower[b] && lower[b] >= upper[a + 1]) return false;
  // (iii) an upper letter fits strictly between lower[b] and upper[b+1]
  for (std::size_t a = 0; a < ll; ++a)
    for (std::size_t b = a; b < ll; ++b)
      if (lower[b] < upper[a] && upper[a] < upper[b + 1]) return false;
  return true;
}

void check_row_lengths(const std::vector<Word>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i].size() <= rows[i + 1].size())
      throw std::invalid_argument("row lengths must strictly decrease");
  for (const Word& row : rows)
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
}

}  // namespace

std::optional<HookSplit> hook_split(const Word& w) {
  auto k = raw_hook_split(w.letters());
  if (!k) return std::nullopt;
  return HookSplit{*k};
}

bool is_hook_word(const Word& w) { return !w.empty() && hook_split(w).has_value(); }

int max_hook_subword_len(const Word& w) {
  const int n = w.rank();
  // dec[c]: longest weakly decreasing subsequence ending with letter c.
  // inc[c]: longest hook subsequence already in its increasing phase, ending
  // with letter c.
  std::vector<int> dec(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> inc(static_cast<std::size_t>(n) + 1, 0);
  for (int x : w.letters()) {
    int best_dec = 0;
    for (int c = x; c <= n; ++c) best_dec = std::max(best_dec, dec[static_cast<std::size_t>(c)]);
    int best_inc = -1;
    for (int c = 1; c < x; ++c) {
      if (dec[static_cast<std::size_t>(c)] > 0)
        best_inc = std::max(best_inc, dec[static_cast<std::size_t>(c)]);
      if (inc[static_cast<std::size_t>(c)] > 0)
        best_inc = std::max(best_inc, inc[static_cast<std::size_t>(c)]);
    }
    dec[static_cast<std::size_t>(x)] = std::max(dec[static_cast<std::size_t>(x)], best_dec + 1);
    if (best_inc > 0)
      inc[static_cast<std::size_t>(x)] = std::max(inc[static_cast<std::size_t>(x)], best_inc + 1);
  }
  int best = 0;
  for (int c = 1; c <= n; ++c)
    best = std::max({best, dec[static_cast<std::size_t>(c)], inc[static_cast<std::size_t>(c)]});
  return best;
}

bool is_ssdt(const std::vector<Word>& rows) {
  check_row_lengths(rows);
  for (const Word& row : rows)
    if (!is_hook_word(row)) return false;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!pair_ok(rows[i].letters(), rows[i + 1].letters())) return false;
  return true;
}

bool is_ssdt_by_subword(const std::vector<Word>& rows) {
  check_row_lengths(rows);
  for (const Word& row : rows)
    if (!is_hook_word(row)) return false;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    Word joined = concat(rows[i + 1], rows[i]);
    if (max_hook_subword_len(joined) != static_cast<int>(rows[i].size())) return false;
  }
  return true;
}

Ssdt::Ssdt(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
}

Ssdt::Ssdt(StrictPartition shape, std::vector<Word> rows, int rank)
    : shape_(std::move(shape)), rows_(std::move(rows)), rank_(rank) {}

Ssdt Ssdt::from_rows(std::vector<Word> rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row; use Ssdt(rank)");
  int rank = rows[0].rank();
  for (const Word& row : rows)
    if (row.rank() != rank) throw std::invalid_argument("rows disagree on rank");
  if (!is_ssdt(rows)) throw std::invalid_argument("rows do not form a decomposition tableau");
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const Word& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Ssdt(StrictPartition(std::move(parts)), std::move(rows), rank);
}

std::optional<Ssdt> Ssdt::try_from_rows(std::vector<Word> rows) {
  if (rows.empty()) return std::nullopt;
  int rank = rows[0].rank();
  for (const Word& row : rows)
    if (row.rank() != rank) return std::nullopt;
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return std::nullopt;
    if (i > 0 && rows[i - 1].size() <= rows[i].size()) return std::nullopt;
    parts.push_back(static_cast<int>(rows[i].size()));
  }
  if (!is_ssdt(rows)) return std::nullopt;
  return Ssdt(StrictPartition(std::move(parts)), std::move(rows), rank);
}

std::optional<Ssdt> Ssdt::from_reading_word(const Word& w, const StrictPartition& shape) {
  if (static_cast<int>(w.size()) != shape.size())
    throw std::invalid_argument("word length does not match the shape size");
  if (shape.empty()) return Ssdt(w.rank());
  // reading order is bottom row first
  std::vector<Word> rows;
  rows.resize(shape.length(), Word(w.rank()));
  std::size_t pos = 0;
  for (std::size_t r = shape.length(); r >= 1; --r) {
    rows[r - 1] = w.subword(pos, static_cast<std::size_t>(shape.part(r)));
    pos += static_cast<std::size_t>(shape.part(r));
  }
  return try_from_rows(std::move(rows));
}

Ssdt Ssdt::parse(std::string_view text, int rank) {
  std::vector<Word> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('/', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    if (token.empty() && !(pos == 0 && next == text.size()))
      throw ParseError("empty tableau row", pos);
    try {
      rows.push_back(Word::parse(token, rank));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), pos + e.position());
    }
    if (next == text.size()) break;
    pos = next + 1;
  }
  if (rows.size() == 1 && rows[0].empty()) return Ssdt(rank);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i].size() <= rows[i + 1].size())
      throw ParseError("row lengths must strictly decrease", 0);
  if (!is_ssdt(rows)) throw ParseError("rows do not form a decomposition tableau", 0);
  return from_rows(std::move(rows));
}

Word Ssdt::reading_word() const {
  Word out(rank_);
  for (std::size_t r = rows_.size(); r >= 1; --r) out = concat(out, rows_[r - 1]);
  return out;
}

std::string Ssdt::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out.push_back('/');
    out += rows_[r].str();
  }
  return out;
}

std::strong_ordering operator<=>(const Ssdt& a, const Ssdt& b) {
  if (auto c = a.reading_word() <=> b.reading_word(); c != 0) return c;
  return a.shape_ <=> b.shape_;
}

Weight weight_of(const Ssdt& t) { return weight_of(t.reading_word()); }

namespace {

// Hook words of a fixed length over {1..n} in lexicographic order.  The
// phase switch is forced by the comparison with the previous letter, so each
// word is produced once.
void hook_words_rec(int n, std::size_t len, std::vector<int>& acc, bool increasing,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (acc.size() == len) {
    emit(acc);
    return;
  }
  for (int x = 1; x <= n; ++x) {
    if (!acc.empty()) {
      int last = acc.back();
      if (increasing && x <= last) continue;
      if (!increasing && x > last) {
        acc.push_back(x);
        hook_words_rec(n, len, acc, true, emit);
        acc.pop_back();
        continue;
      }
    }
    acc.push_back(x);
    hook_words_rec(n, len, acc, increasing, emit);
    acc.pop_back();
  }
}

void enumerate_rows_rec(const StrictPartition& shape, int n, std::size_t r,
                        std::vector<std::vector<int>>& picked, std::vector<Ssdt>& out) {
  if (r == 0) {
    // picked holds rows bottom-up
    std::vector<Word> rows;
    rows.reserve(shape.length());
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) rows.push_back(Word(*it, n));
    out.push_back(Ssdt::from_rows(std::move(rows)));
    return;
  }
  std::vector<int> acc;
  hook_words_rec(n, static_cast<std::size_t>(shape.part(r)), acc, false,
                 [&](const std::vector<int>& row) {
                   if (!picked.empty() && !pair_ok(row, picked.back())) return;
                   picked.push_back(row);
                   enumerate_rows_rec(shape, n, r - 1, picked, out);
                   picked.pop_back();
                 });
}

}  // namespace

std::vector<Ssdt> enumerate_ssdt(const StrictPartition& shape, int n) {
  std::vector<Ssdt> out;
  if (shape.empty()) {
    out.push_back(Ssdt(n));
    return out;
  }
  // rows are chosen bottom-up so the output is lexicographic in reading word
  std::vector<std::vector<int>> picked;
  enumerate_rows_rec(shape, n, shape.length(), picked, out);
  return out;
}

Ssdt highest_tableau(const StrictPartition& shape, int n) {
  if (static_cast<int>(shape.length()) > n)
    throw std::invalid_argument("shape has more rows than the rank allows");
  if (shape.empty()) return Ssdt(n);
  const std::size_t r = shape.length();
  std::vector<Word> rows;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<int> row;
    for (std::size_t j = r; j >= k; --j) {
      int count = shape.part(j) - shape.part(j + 1);
      row.insert(row.end(), static_cast<std::size_t>(count), static_cast<int>(j - k + 1));
    }
    rows.push_back(Word(std::move(row), n));
  }
  return Ssdt::from_rows(std::move(rows));
}

Ssdt lowest_tableau(const StrictPartition& shape, int n) {
  if (static_cast<int>(shape.length()) > n)
    throw std::invalid_argument("shape has more rows than the rank allows");
  if (shape.empty()) return Ssdt(n);
  std::vector<Word> rows;
  for (std::size_t k = 1; k <= shape.length(); ++k) {
    std::vector<int> row(static_cast<std::size_t>(shape.part(k)), n - static_cast<int>(k) + 1);
    rows.push_back(Word(std::move(row), n));
  }
  return Ssdt::from_rows(std::move(rows));
}

}  // namespace qcrystal
