#pragma once

#include "sperner/core.hpp"
#include "sperner/iso.hpp"

namespace sperner {

// An unordered pair of distinct labels, stored as i < j.
struct IdentPair {
  int i = 1;
  int j = 2;

  friend bool operator==(const IdentPair&, const IdentPair&) = default;
  friend auto operator<=>(const IdentPair&, const IdentPair&) = default;
};

std::vector<IdentPair> all_pairs(int n);

// Label map of the quotient that identifies I = {i, j}: the merged class
// keeps label i, labels above j shift down by one, everything else is fixed.
int merge_label(IdentPair I, int e);

// Image of s under the identification of I, over [n-1]. Blocks that become
// equal are kept once.
SetSystem quotient(const SetSystem& s, IdentPair I);

// A card of the deck: minimal blocks of the quotient.
SetSystem card(const SetSystem& s, IdentPair I);

// Removes vertex v and every block containing it; labels above v shift down.
SetSystem vertex_deleted(const SetSystem& s, int v);

enum class DeckKind {
  identification,  // one card per pair of labels, via quotient + minimalize
  deletion,        // one card per vertex, via vertex_deleted
};

using Deck = Multiset<CanonicalForm>;

// Multiset of cards over all n*(n-1)/2 pairs. Requires an antichain and
// n >= 2.
Deck sperner_deck(const SetSystem& s);

// Multiset of vertex-deleted cards over all n vertices. Requires n >= 1.
Deck hypergraph_deck(const SetSystem& s);

Deck deck(const SetSystem& s, DeckKind kind);

// Equal decks.
bool hypomorphic(const SetSystem& a, const SetSystem& b, DeckKind kind = DeckKind::identification);

// Cards are isomorphic under the identity pairing: for every pair I (or
// vertex v), the I-cards of a and b are isomorphic. Implies hypomorphic.
bool strongly_hypomorphic(const SetSystem& a, const SetSystem& b,
                          DeckKind kind = DeckKind::identification);

}  // namespace sperner
