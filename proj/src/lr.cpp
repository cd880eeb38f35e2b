#include "qcrystal/lr.hpp"

#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"

namespace qcrystal {

namespace {

bool is_strict_prefix(const std::vector<int>& parts) {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) return false;
    if (parts[i] == parts[i + 1] && parts[i] != 0) return false;
  }
  return true;
}

StrictPartition from_padded(const std::vector<int>& parts) {
  std::vector<int> trimmed;
  for (int p : parts) {
    if (p == 0) break;
    trimmed.push_back(p);
  }
  return StrictPartition(std::move(trimmed));
}

// Reversed-coordinate dominance: the weight of a lowest vector, read from
// the last coordinate backwards, is a strict partition.
bool is_antidominant(const std::vector<int>& coords) {
  std::vector<int> reversed(coords.rbegin(), coords.rend());
  return is_strict_prefix(reversed);
}

// Candidate outer shapes for the product: strict partitions of the right
// size containing mu, within n rows.
std::vector<StrictPartition> candidate_shapes(const StrictPartition& mu, int extra, int n) {
  std::vector<StrictPartition> out;
  for (const StrictPartition& nu : strict_partitions(mu.size() + extra, static_cast<std::size_t>(n)))
    if (nu.contains(mu)) out.push_back(nu);
  return out;
}

Decomposition decompose_by_lattice(const StrictPartition& lambda, const StrictPartition& mu, int n) {
  Decomposition out;
  for (const Ssdt& t : enumerate_ssdt(lambda, n))
    if (auto chain = chain_from_word(t.reading_word(), mu, n)) ++out[chain->result];
  return out;
}

Decomposition decompose_by_insertion(const StrictPartition& lambda, const StrictPartition& mu, int n) {
  Decomposition out;
  Ssdt low = lowest_tableau(mu, n);
  for (const Ssdt& t : enumerate_ssdt(lambda, n)) {
    Ssdt product = insert_tableau_left(t, low);
    if (product == lowest_tableau(product.shape(), n)) ++out[product.shape()];
  }
  return out;
}

Decomposition decompose_by_lr_tableaux(const StrictPartition& lambda, const StrictPartition& mu, int n) {
  Decomposition out;
  for (const StrictPartition& nu : candidate_shapes(mu, lambda.size(), n)) {
    auto count = static_cast<long long>(lr_tilde_tableaux(lambda, mu, nu, n).size());
    if (count > 0) out[nu] = count;
  }
  return out;
}

Decomposition decompose_by_components(const StrictPartition& lambda, const StrictPartition& mu, int n) {
  if (lambda.size() + mu.size() > 10)
    throw std::invalid_argument(
        "the components method is a brute-force oracle limited to |lambda|+|mu| <= 10");
  Decomposition out;
  std::vector<Ssdt> left = enumerate_ssdt(lambda, n);
  std::vector<Ssdt> right = enumerate_ssdt(mu, n);
  for (const Ssdt& t : left) {
    Word u = t.reading_word();
    for (const Ssdt& tp : right) {
      Word w = concat(u, tp.reading_word());
      // lowest vectors are the words whose every suffix weight is
      // antidominant
      bool lowest = true;
      std::vector<int> counts(static_cast<std::size_t>(n), 0);
      for (std::size_t pos = w.size(); pos >= 1 && lowest; --pos) {
        ++counts[static_cast<std::size_t>(w.at(pos - 1) - 1)];
        lowest = is_antidominant(counts);
      }
      if (!lowest) continue;
      std::vector<int> reversed(counts.rbegin(), counts.rend());
      ++out[from_padded(reversed)];
    }
  }
  return out;
}

}  // namespace

std::optional<AddCellChain> chain_from_word(const Word& u, const StrictPartition& mu, int n) {
  if (static_cast<int>(mu.length()) > n)
    throw std::invalid_argument("shape has more rows than the rank allows");
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (std::size_t r = 1; r <= mu.length(); ++r) parts[r - 1] = mu.part(r);
  AddCellChain chain{mu, {}, mu};
  for (std::size_t pos = u.size(); pos >= 1; --pos) {
    int row = n - u.at(pos - 1) + 1;
    ++parts[static_cast<std::size_t>(row - 1)];
    if (!is_strict_prefix(parts)) return std::nullopt;
    chain.rows.push_back(row);
  }
  chain.result = from_padded(parts);
  return chain;
}

DecomposeMethod parse_method(std::string_view token) {
  if (token == "lattice") return DecomposeMethod::lattice_words;
  if (token == "insertion") return DecomposeMethod::insertion;
  if (token == "tableaux") return DecomposeMethod::lr_tableaux;
  if (token == "components") return DecomposeMethod::components;
  throw std::invalid_argument("unknown method \"" + std::string(token) +
                              "\"; expected lattice|insertion|tableaux|components");
}

std::string method_name(DecomposeMethod m) {
  switch (m) {
    case DecomposeMethod::lattice_words: return "lattice";
    case DecomposeMethod::insertion: return "insertion";
    case DecomposeMethod::lr_tableaux: return "tableaux";
    case DecomposeMethod::components: return "components";
  }
  return "?";
}

Decomposition decompose_tensor(const StrictPartition& lambda, const StrictPartition& mu, int n,
                               DecomposeMethod method) {
  if (static_cast<int>(lambda.length()) > n || static_cast<int>(mu.length()) > n)
    throw std::invalid_argument("shape has more rows than the rank allows");
  switch (method) {
    case DecomposeMethod::lattice_words: return decompose_by_lattice(lambda, mu, n);
    case DecomposeMethod::insertion: return decompose_by_insertion(lambda, mu, n);
    case DecomposeMethod::lr_tableaux: return decompose_by_lr_tableaux(lambda, mu, n);
    case DecomposeMethod::components: return decompose_by_components(lambda, mu, n);
  }
  throw std::logic_error("unreachable");
}

std::vector<std::pair<DecomposeMethod, Decomposition>> decompose_tensor_all(
    const StrictPartition& lambda, const StrictPartition& mu, int n) {
  std::vector<std::pair<DecomposeMethod, Decomposition>> out;
  for (DecomposeMethod m : {DecomposeMethod::lattice_words, DecomposeMethod::insertion,
                            DecomposeMethod::lr_tableaux, DecomposeMethod::components}) {
    if (m == DecomposeMethod::components && lambda.size() + mu.size() > 10) continue;
    out.emplace_back(m, decompose_tensor(lambda, mu, n, m));
  }
  return out;
}

std::vector<Word> lr_set(const StrictPartition& lambda, const StrictPartition& mu,
                         const StrictPartition& nu, int n) {
  std::vector<Word> out;
  for (const Ssdt& t : enumerate_ssdt(lambda, n)) {
    Word u = t.reading_word();
    if (auto chain = chain_from_word(u, mu, n); chain && chain->result == nu) out.push_back(u);
  }
  return out;
}

long long lr_coefficient(const StrictPartition& lambda, const StrictPartition& mu,
                         const StrictPartition& nu, int n) {
  if (!nu.contains(mu) || nu.size() != lambda.size() + mu.size()) return 0;
  return static_cast<long long>(lr_set(lambda, mu, nu, n).size());
}

std::vector<StandardShiftedTableau> lr_tilde_tableaux(const StrictPartition& lambda,
                                                      const StrictPartition& mu,
                                                      const StrictPartition& nu, int n) {
  if (!nu.contains(mu))
    throw std::invalid_argument("inner shape " + mu.str() + " is not contained in " + nu.str());
  std::vector<StandardShiftedTableau> out;
  if (nu.size() - mu.size() != lambda.size()) return out;
  const int total = lambda.size();
  for (const StandardShiftedTableau& q : enumerate_standard_shifted(ShiftedShape(nu, mu))) {
    // letters read off the entry rows, largest entry first
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(total));
    bool in_range = true;
    for (int value = total; value >= 1 && in_range; --value) {
      int letter = n - static_cast<int>(q.row_of(value)) + 1;
      in_range = letter >= 1 && letter <= n;
      letters.push_back(letter);
    }
    if (!in_range) continue;
    if (Ssdt::from_reading_word(Word(std::move(letters), n), lambda)) out.push_back(q);
  }
  return out;
}

Decomposition decompose_power(int n, int length) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  if (length < 1) throw std::invalid_argument("length must be positive");
  Decomposition out;
  for (const StrictPartition& shape : strict_partitions(length, static_cast<std::size_t>(n))) {
    auto count =
        static_cast<long long>(enumerate_standard_shifted(ShiftedShape(shape)).size());
    if (count > 0) out[shape] = count;
  }
  return out;
}

}  // namespace qcrystal
