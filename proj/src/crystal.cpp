#include "qcrystal/crystal.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace qcrystal {

namespace {

void check_index(const Word& w, OperatorIndex op) {
  if (op.index() < 1 || op.index() >= w.rank())
    throw std::invalid_argument("operator index " + op.str() + " out of range for rank " +
                                std::to_string(w.rank()));
}

// Surviving signs after cancelling (letter i, letter i+1) pairs: the
// leftover pattern is minuses then pluses.
struct SignScan {
  std::vector<std::size_t> plus;   // positions of surviving letters i
  std::vector<std::size_t> minus;  // positions of surviving letters i+1
};

SignScan sign_scan(const Word& w, int i) {
  SignScan scan;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int x = w.at(pos);
    if (x == i) {
      scan.plus.push_back(pos);
    } else if (x == i + 1) {
      if (!scan.plus.empty())
        scan.plus.pop_back();
      else
        scan.minus.push_back(pos);
    }
  }
  return scan;
}

Word with_letter(const Word& w, std::size_t pos, int letter) {
  std::vector<int> letters = w.letters();
  letters[pos] = letter;
  return Word(std::move(letters), w.rank());
}

// Position the odd operators act on: the rightmost letter in {1,2}; none when
// the word avoids both (a letter >= 3 at the front would absorb the action
// and vanish).
std::optional<std::size_t> odd_position(const Word& w) {
  for (std::size_t pos = w.size(); pos >= 1; --pos)
    if (w.at(pos - 1) <= 2) return pos - 1;
  return std::nullopt;
}

std::vector<int> conjugating_word(int i) {
  // s_2 ... s_i s_1 ... s_{i-1}: the shortest element carrying the i-th
  // simple root to the first one
  std::vector<int> word;
  for (int a = 2; a <= i; ++a) word.push_back(a);
  for (int a = 1; a <= i - 1; ++a) word.push_back(a);
  return word;
}

std::optional<Word> apply_odd(const Word& w, int i, bool lowering) {
  if (i == 1) {
    auto pos = odd_position(w);
    if (!pos) return std::nullopt;
    int x = w.at(*pos);
    if (lowering) {
      if (x != 1) return std::nullopt;
      return with_letter(w, *pos, 2);
    }
    if (x != 2) return std::nullopt;
    return with_letter(w, *pos, 1);
  }
  // conjugate through the Weyl action
  std::vector<int> wi = conjugating_word(i);
  std::vector<int> wi_inv(wi.rbegin(), wi.rend());
  Word moved = weyl_w(w, wi);
  auto acted = apply_odd(moved, 1, lowering);
  if (!acted) return std::nullopt;
  return weyl_w(*acted, wi_inv);
}

}  // namespace

OperatorIndex OperatorIndex::parse(std::string_view token) {
  bool odd_kind = false;
  if (token.size() > 3 && token.substr(token.size() - 3) == "bar") {
    odd_kind = true;
    token.remove_suffix(3);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 1)
    throw std::invalid_argument("bad operator token");
  return odd_kind ? odd(value) : even(value);
}

std::string OperatorIndex::str() const {
  return std::to_string(index_) + (odd_ ? "bar" : "");
}

std::vector<OperatorIndex> operator_labels(int n, bool include_bar) {
  std::vector<OperatorIndex> labels;
  for (int i = 1; i <= n - 1; ++i) labels.push_back(OperatorIndex::even(i));
  labels.push_back(OperatorIndex::odd(1));
  if (include_bar)
    for (int i = 2; i <= n - 1; ++i) labels.push_back(OperatorIndex::odd(i));
  return labels;
}

std::optional<Word> apply_f(const Word& w, OperatorIndex op) {
  check_index(w, op);
  if (op.is_odd()) return apply_odd(w, op.index(), /*lowering=*/true);
  SignScan scan = sign_scan(w, op.index());
  if (scan.plus.empty()) return std::nullopt;
  return with_letter(w, scan.plus.front(), op.index() + 1);
}

std::optional<Word> apply_e(const Word& w, OperatorIndex op) {
  check_index(w, op);
  if (op.is_odd()) return apply_odd(w, op.index(), /*lowering=*/false);
  SignScan scan = sign_scan(w, op.index());
  if (scan.minus.empty()) return std::nullopt;
  return with_letter(w, scan.minus.back(), op.index());
}

int eps(const Word& w, int i) {
  check_index(w, OperatorIndex::even(i));
  return static_cast<int>(sign_scan(w, i).minus.size());
}

int phi(const Word& w, int i) {
  check_index(w, OperatorIndex::even(i));
  return static_cast<int>(sign_scan(w, i).plus.size());
}

Word weyl_s(const Word& w, int i) {
  check_index(w, OperatorIndex::even(i));
  Weight wt = weight_of(w);
  int k = wt.coords[static_cast<std::size_t>(i - 1)] - wt.coords[static_cast<std::size_t>(i)];
  Word cur = w;
  for (int step = 0; step < std::abs(k); ++step) {
    auto next = k > 0 ? apply_f(cur, OperatorIndex::even(i)) : apply_e(cur, OperatorIndex::even(i));
    if (!next) throw std::logic_error("reflection ran out of string");
    cur = *next;
  }
  return cur;
}

Word weyl_w(const Word& w, std::span<const int> reduced_word) {
  Word cur = w;
  for (auto it = reduced_word.rbegin(); it != reduced_word.rend(); ++it) cur = weyl_s(cur, *it);
  return cur;
}

std::vector<int> longest_element_word(int n) {
  std::vector<int> word;
  for (int block = 1; block <= n - 1; ++block)
    for (int a = block; a >= 1; --a) word.push_back(a);
  return word;
}

bool is_strict_reverse_lattice(const Word& w) {
  const int n = w.rank();
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t pos = w.size(); pos >= 1; --pos) {
    ++counts[static_cast<std::size_t>(w.at(pos - 1))];
    for (int i = 2; i <= n; ++i)
      if (counts[static_cast<std::size_t>(i - 1)] > 0 &&
          counts[static_cast<std::size_t>(i)] <= counts[static_cast<std::size_t>(i - 1)])
        return false;
  }
  return true;
}

bool is_highest(const Word& w) {
  for (OperatorIndex op : operator_labels(w.rank(), /*include_bar=*/true))
    if (apply_e(w, op)) return false;
  return true;
}

bool is_lowest(const Word& w) { return is_strict_reverse_lattice(w); }

bool is_lowest_by_weyl(const Word& w) {
  return is_highest(weyl_w(w, longest_element_word(w.rank())));
}

std::vector<Word> highest_weight_vectors(int n, int length) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  std::vector<Word> level{Word({1}, n)};
  for (int len = 2; len <= length; ++len) {
    std::set<Word> next;
    for (const Word& b : level) {
      Weight wt = weight_of(b);
      for (int j = 1; j <= n; ++j) {
        std::vector<int> coords = wt.coords;
        ++coords[static_cast<std::size_t>(j - 1)];
        if (!is_dominant_weight(coords)) continue;
        // prepend 1 and lower it down to the j-th letter inside the tail
        std::optional<Word> tail = b;
        for (int i = j - 1; i >= 1 && tail; --i) tail = apply_f(*tail, OperatorIndex::even(i));
        if (!tail) continue;
        next.insert(concat(Word({1}, n), *tail));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

CrystalGraph component(const Word& w, bool include_bar_edges) {
  const int n = w.rank();
  std::vector<OperatorIndex> travel = operator_labels(n, /*include_bar=*/false);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (OperatorIndex op : travel) {
      for (auto next : {apply_f(cur, op), apply_e(cur, op)}) {
        if (next && !seen.contains(*next)) {
          seen.insert(*next);
          queue.push_back(*next);
        }
      }
    }
  }
  CrystalGraph graph;
  graph.vertices.assign(seen.begin(), seen.end());
  std::vector<OperatorIndex> labels = operator_labels(n, include_bar_edges);
  for (const Word& from : graph.vertices)
    for (OperatorIndex op : labels)
      if (auto to = apply_f(from, op); to) graph.edges.push_back(CrystalEdge{from, op, *to});
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

std::string to_dot(const CrystalGraph& graph) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  for (const Word& v : graph.vertices) os << "  \"" << v.str() << "\";\n";
  for (const CrystalEdge& e : graph.edges) {
    os << "  \"" << e.from.str() << "\" -> \"" << e.to.str() << "\" [label=\"" << e.label.str()
       << "\"";
    if (e.label.is_odd()) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qcrystal
