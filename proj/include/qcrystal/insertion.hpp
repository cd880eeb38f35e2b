#pragma once

#include <string>
#include <vector>

#include "qcrystal/core.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

/// 1-based row and absolute 1-based column of a cell.
struct NewCell {
  std::size_t row;
  int col;

  friend bool operator==(const NewCell&, const NewCell&) = default;
};

struct InsertionTrace {
  Ssdt result;
  NewCell cell;
};

/// Bumping insertion of one letter: append to the first row if the row stays
/// a hook word; otherwise replace the leftmost increasing-part letter >= x,
/// move its value onto the leftmost strictly smaller decreasing-part letter,
/// and push the displaced letter into the next row.  Adds exactly one cell.
InsertionTrace insert_letter(const Ssdt& t, int letter);

/// Left fold of the letters of `w` into `t`.
Ssdt insert_word(const Ssdt& t, const Word& w);

/// t <- other: fold the reading word of `other` into `t`.
Ssdt insert_tableau_left(const Ssdt& t, const Ssdt& other);

struct RightInsertion {
  Ssdt product;
  StandardShiftedTableau recording;  // skew shape sh(product)/sh(into)
};

/// t -> into: wrap the letters of the reading word of `t` around `into` from
/// the right, i.e. u_1 <- (u_2 <- ... (u_N <- into)).  The recording tableau
/// logs the cell each step adds; the product equals insert_tableau_left(t,
/// into).
RightInsertion insert_tableau_right(const Ssdt& t, const Ssdt& into);

struct RskPair {
  Ssdt p;
  StandardShiftedTableau q;
};

/// Word-to-pair correspondence: P is the left fold of the letters, Q records
/// the cell creation order.  Bijective onto same-shape pairs.
RskPair rsk(const Word& u);

/// Reverse bumping: recovers the unique word with rsk(word) == (p, q).
/// Throws when the shapes differ or the pair is not in the image.
Word inverse_rsk(const Ssdt& p, const StandardShiftedTableau& q);

/// Domain {abcd : b < c >= d} and image {abcd : a < b >= c} of the
/// four-letter exchange map.
bool in_knuth_domain(const Word& w);
bool in_knuth_image(const Word& w);

/// Four-letter crystal isomorphism between the two components above; the
/// eight inequality cases partition the domain.  Throws outside the domain.
Word knuth_psi(const Word& w);

}  // namespace qcrystal
