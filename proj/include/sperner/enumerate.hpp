#pragma once

#include "sperner/core.hpp"
#include "sperner/iso.hpp"
#include "sperner/minors.hpp"

namespace sperner {

struct EnumerateOptions {
  // Exhaustive enumeration is intentionally capped; raise explicitly if you
  // know what you are asking for (n = 6 already has 7828354 antichains).
  int max_ground_size = 5;
};

// All isomorphism classes of antichains over [n], including the two trivial
// ones (empty system, lone empty block), as canonical forms in display
// order. Generated by recursive insertion of pairwise-incomparable blocks
// with canonical-form deduplication, not by filtering all set systems.
std::vector<CanonicalForm> enumerate_sperner(int n, const EnumerateOptions& opts = {});

// Number of labeled antichains over [n] (including the two trivial ones).
long long count_labeled_antichains(int n, const EnumerateOptions& opts = {});

struct DeckTableRow {
  CanonicalForm system;
  Deck deck;
  std::vector<long long> cells;  // one count per column
  bool nonreconstructible = false;
};

// Decks of every nontrivial class over [n], tabulated against the
// nontrivial classes over [n-1] (the columns). Rows and columns are in
// display order; a row is flagged when another row has the same deck.
struct DeckTable {
  int n = 2;
  std::vector<CanonicalForm> columns;
  std::vector<DeckTableRow> rows;
};

DeckTable deck_table(int n, const EnumerateOptions& opts = {});

// Groups of two or more classes over [n] sharing a deck.
std::vector<std::vector<CanonicalForm>> find_nonreconstructible(int n,
                                                                const EnumerateOptions& opts = {});

// Exhaustive check: no nonisomorphic antichain over [n] has the same deck.
// Requires 2 <= n <= opts.max_ground_size and an antichain.
bool is_reconstructible(const SetSystem& s, const EnumerateOptions& opts = {});

}  // namespace sperner
