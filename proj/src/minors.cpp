#include "sperner/minors.hpp"

#include <algorithm>
#include <bit>

namespace sperner {

namespace {

void check_pair(const SetSystem& s, IdentPair I) {
  if (I.i < 1 || I.i >= I.j || I.j > s.ground_size())
    throw std::invalid_argument("identified pair out of range");
}

}  // namespace

std::vector<IdentPair> all_pairs(int n) {
  std::vector<IdentPair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

int merge_label(IdentPair I, int e) {
  if (e == I.j) return I.i;
  if (e > I.j) return e - 1;
  return e;
}

SetSystem quotient(const SetSystem& s, IdentPair I) {
  check_pair(s, I);
  int n = s.ground_size();
  std::vector<Block> mapped;
  mapped.reserve(s.block_count());
  for (Block b : s.blocks()) {
    Block out = 0;
    Block rest = b;
    while (rest) {
      int e = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      out |= Block{1} << (merge_label(I, e) - 1);
    }
    mapped.push_back(out);
  }
  std::sort(mapped.begin(), mapped.end());
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
  return SetSystem(n - 1, std::move(mapped));
}

SetSystem card(const SetSystem& s, IdentPair I) { return minimalize(quotient(s, I)); }

SetSystem vertex_deleted(const SetSystem& s, int v) {
  int n = s.ground_size();
  if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
  Block bit = Block{1} << (v - 1);
  Block low = bit - 1;
  std::vector<Block> kept;
  for (Block b : s.blocks()) {
    if (b & bit) continue;
    kept.push_back((b & low) | ((b >> 1) & ~low));
  }
  return SetSystem(n - 1, std::move(kept));
}

Deck sperner_deck(const SetSystem& s) {
  if (s.ground_size() < 2) throw std::invalid_argument("deck needs at least two elements");
  if (!is_antichain(s)) throw std::invalid_argument("deck of a non-antichain");
  Deck d;
  for (IdentPair I : all_pairs(s.ground_size())) d.add(canonical_form(card(s, I)));
  return d;
}

Deck hypergraph_deck(const SetSystem& s) {
  int n = s.ground_size();
  if (n < 1) throw std::invalid_argument("deck needs at least one vertex");
  Deck d;
  for (int v = 1; v <= n; ++v) d.add(canonical_form(vertex_deleted(s, v)));
  return d;
}

Deck deck(const SetSystem& s, DeckKind kind) {
  return kind == DeckKind::identification ? sperner_deck(s) : hypergraph_deck(s);
}

bool hypomorphic(const SetSystem& a, const SetSystem& b, DeckKind kind) {
  if (a.ground_size() != b.ground_size()) return false;
  return deck(a, kind) == deck(b, kind);
}

bool strongly_hypomorphic(const SetSystem& a, const SetSystem& b, DeckKind kind) {
  if (a.ground_size() != b.ground_size()) return false;
  int n = a.ground_size();
  if (kind == DeckKind::identification) {
    if (n < 2) throw std::invalid_argument("deck needs at least two elements");
    if (!is_antichain(a) || !is_antichain(b)) throw std::invalid_argument("deck of a non-antichain");
    for (IdentPair I : all_pairs(n)) {
      if (!isomorphic(card(a, I), card(b, I))) return false;
    }
    return true;
  }
  if (n < 1) throw std::invalid_argument("deck needs at least one vertex");
  for (int v = 1; v <= n; ++v) {
    if (!isomorphic(vertex_deleted(a, v), vertex_deleted(b, v))) return false;
  }
  return true;
}

}  // namespace sperner
