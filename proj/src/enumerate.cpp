#include "sperner/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sperner {

namespace {

void check_range(int n, const EnumerateOptions& opts) {
  if (n < 1) throw std::invalid_argument("ground size must be positive");
  if (n > opts.max_ground_size) throw limit_error("ground size beyond the enumeration cap");
}

// Walks every antichain of nonempty blocks exactly once: blocks are added in
// increasing mask order, each new block incomparable to all previous ones.
template <typename Visit>
void walk(int n, std::vector<Block>& chosen, Block least, const Visit& visit) {
  visit(chosen);
  for (Block b = least; b != 0 && b <= full_mask(n); ++b) {
    bool ok = true;
    for (Block prev : chosen) {
      if (is_subset(prev, b) || is_subset(b, prev)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(b);
    walk(n, chosen, b + 1, visit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<CanonicalForm> enumerate_sperner(int n, const EnumerateOptions& opts) {
  check_range(n, opts);
  std::set<CanonicalForm> classes;
  classes.insert(CanonicalForm{n, {}});
  classes.insert(CanonicalForm{n, {Block{0}}});
  std::vector<Block> chosen;
  walk(n, chosen, 1, [&](const std::vector<Block>& blocks) {
    if (blocks.empty()) return;
    classes.insert(canonical_form(SetSystem(n, blocks)));
  });
  std::vector<CanonicalForm> out(classes.begin(), classes.end());
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

long long count_labeled_antichains(int n, const EnumerateOptions& opts) {
  check_range(n, opts);
  long long count = 2;
  std::vector<Block> chosen;
  walk(n, chosen, 1, [&](const std::vector<Block>& blocks) {
    if (!blocks.empty()) ++count;
  });
  return count;
}

DeckTable deck_table(int n, const EnumerateOptions& opts) {
  if (n < 2) throw std::invalid_argument("ground size must be at least 2");
  check_range(n, opts);

  DeckTable table;
  table.n = n;
  for (const CanonicalForm& c : enumerate_sperner(n - 1, opts)) {
    if (!to_system(c).is_trivial()) table.columns.push_back(c);
  }
  std::map<CanonicalForm, std::size_t> column_index;
  for (std::size_t k = 0; k < table.columns.size(); ++k) column_index[table.columns[k]] = k;

  std::map<Deck, std::vector<std::size_t>> by_deck;
  for (const CanonicalForm& c : enumerate_sperner(n, opts)) {
    SetSystem s = to_system(c);
    if (s.is_trivial()) continue;
    DeckTableRow row;
    row.system = c;
    row.deck = sperner_deck(s);
    row.cells.assign(table.columns.size(), 0);
    for (const auto& [card, count] : row.deck.items()) {
      auto it = column_index.find(card);
      if (it == column_index.end()) throw std::logic_error("card is not a known class");
      row.cells[it->second] = count;
    }
    by_deck[row.deck].push_back(table.rows.size());
    table.rows.push_back(std::move(row));
  }
  for (const auto& [deck, rows] : by_deck) {
    if (rows.size() < 2) continue;
    for (std::size_t r : rows) table.rows[r].nonreconstructible = true;
  }
  return table;
}

std::vector<std::vector<CanonicalForm>> find_nonreconstructible(int n, const EnumerateOptions& opts) {
  DeckTable table = deck_table(n, opts);
  std::map<Deck, std::vector<CanonicalForm>> by_deck;
  for (const DeckTableRow& row : table.rows) by_deck[row.deck].push_back(row.system);
  std::vector<std::vector<CanonicalForm>> groups;
  for (auto& [deck, members] : by_deck) {
    if (members.size() >= 2) groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return display_less(a.front(), b.front()); });
  return groups;
}

bool is_reconstructible(const SetSystem& s, const EnumerateOptions& opts) {
  int n = s.ground_size();
  if (n < 2) throw std::invalid_argument("ground size must be at least 2");
  check_range(n, opts);
  if (!is_antichain(s)) throw std::invalid_argument("system is not an antichain");
  if (s.is_trivial()) return true;
  Deck mine = sperner_deck(s);
  CanonicalForm me = canonical_form(s);
  bool unique = true;
  std::vector<Block> chosen;
  walk(n, chosen, 1, [&](const std::vector<Block>& blocks) {
    if (!unique || blocks.empty()) return;
    SetSystem other(n, blocks);
    CanonicalForm c = canonical_form(other);
    if (c == me) return;
    if (sperner_deck(other) == mine) unique = false;
  });
  return unique;
}

}  // namespace sperner
