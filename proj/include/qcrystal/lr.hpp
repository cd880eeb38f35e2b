#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qcrystal/core.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

/// Cells added to `base` row by row; valid only if every prefix stays a
/// strict partition.
struct AddCellChain {
  StrictPartition base;
  std::vector<int> rows;  // 1-based row per added cell, in addition order
  StrictPartition result;
};

/// The chain mu <- (n-u_N+1) <- ... <- (n-u_1+1); empty optional as soon as
/// some prefix fails to be a strict partition.
std::optional<AddCellChain> chain_from_word(const Word& u, const StrictPartition& mu, int n);

/// Multiplicity table nu -> positive count.
using Decomposition = std::map<StrictPartition, long long>;

enum class DecomposeMethod {
  lattice_words,  // cell chains over the left factor (default)
  insertion,      // T <- lowest_tableau(mu) landing on a lowest tableau
  lr_tableaux,    // skew standard tableaux passing the row-word test
  components,     // brute-force lowest-vector scan of the tensor product
};

DecomposeMethod parse_method(std::string_view token);
std::string method_name(DecomposeMethod m);

/// Tensor product multiplicities by one method.  The components method is a
/// deliberate slow oracle and refuses |lambda|+|mu| > 10.
Decomposition decompose_tensor(const StrictPartition& lambda, const StrictPartition& mu, int n,
                               DecomposeMethod method = DecomposeMethod::lattice_words);

/// All four methods in enum order (components skipped above its size guard).
std::vector<std::pair<DecomposeMethod, Decomposition>> decompose_tensor_all(
    const StrictPartition& lambda, const StrictPartition& mu, int n);

/// Words in B(lambda) whose cell chain over mu is valid and ends at nu;
/// the coefficient is the cardinality.
std::vector<Word> lr_set(const StrictPartition& lambda, const StrictPartition& mu,
                         const StrictPartition& nu, int n);

/// f^nu_{lambda,mu}; 0 for incompatible shapes.
long long lr_coefficient(const StrictPartition& lambda, const StrictPartition& mu,
                         const StrictPartition& nu, int n);

/// Standard fillings of nu/mu whose entry rows r_k make
/// (n-r_{|lambda|}+1) ... (n-r_1+1) the reading word of a tableau of shape
/// lambda.  Throws when mu is not contained in nu.
std::vector<StandardShiftedTableau> lr_tilde_tableaux(const StrictPartition& lambda,
                                                      const StrictPartition& mu,
                                                      const StrictPartition& nu, int n);

/// Decomposition of the length-N word space: multiplicity of `shape` is the
/// number of standard shifted tableaux of that shape.
Decomposition decompose_power(int n, int length);

}  // namespace qcrystal
