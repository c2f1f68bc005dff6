#include "sperner/iso.hpp"

#include <algorithm>
#include <bit>

namespace sperner {

namespace {

// Exact minimum-encoding search. New labels are handed out in increasing
// order, one original element per step. For a partial assignment every block
// has a known low part and some count of still-unassigned members, so
// packing those members into the lowest open labels gives a per-block lower
// bound; the sorted list of bounds is a lexicographic lower bound for every
// completion of the branch (order statistics are monotone). Branches whose
// bound is not strictly below the best complete encoding found so far are
// dropped, and children are explored most-promising first so the first
// descent is already greedy-optimal.
class CanonicalSearch {
 public:
  CanonicalSearch(const SetSystem& s, const std::vector<int>& used)
      : slot_count_(static_cast<int>(used.size())) {
    const auto& blocks = s.blocks();
    known_.assign(blocks.size(), 0);
    remaining_.assign(blocks.size(), 0);
    slot_blocks_.resize(used.size());
    for (std::size_t slot = 0; slot < used.size(); ++slot) {
      Block bit = Block{1} << (used[slot] - 1);
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi] & bit) {
          slot_blocks_[slot].push_back(static_cast<int>(bi));
          ++remaining_[bi];
        }
      }
    }
    // Slots lying in exactly the same blocks are interchangeable; only the
    // first open one of each class needs to be tried at any step.
    twin_.assign(used.size(), 0);
    for (std::size_t i = 0; i < used.size(); ++i) {
      twin_[i] = static_cast<int>(i);
      for (std::size_t j = 0; j < i; ++j) {
        if (slot_blocks_[j] == slot_blocks_[i]) {
          twin_[i] = twin_[j];
          break;
        }
      }
    }
    taken_.assign(used.size(), false);
    order_.reserve(used.size());
  }

  // Returns the minimal sorted block list and the slot order achieving it.
  std::pair<std::vector<Block>, std::vector<int>> run() {
    descend(0);
    return {best_, best_order_};
  }

 private:
  void descend(int depth) {
    if (depth == slot_count_) {
      std::vector<Block> leaf = known_;
      std::sort(leaf.begin(), leaf.end());
      if (!best_set_ || leaf < best_) {
        best_ = std::move(leaf);
        best_order_ = order_;
        best_set_ = true;
      }
      return;
    }

    struct Child {
      std::vector<Block> bound;
      int slot;
    };
    std::vector<Child> children;
    std::vector<bool> twin_seen(static_cast<std::size_t>(slot_count_), false);
    for (int slot = 0; slot < slot_count_; ++slot) {
      if (taken_[static_cast<std::size_t>(slot)]) continue;
      int t = twin_[static_cast<std::size_t>(slot)];
      if (twin_seen[static_cast<std::size_t>(t)]) continue;
      twin_seen[static_cast<std::size_t>(t)] = true;
      children.push_back({bound_after(slot, depth), slot});
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) { return a.bound < b.bound; });

    for (const Child& child : children) {
      if (best_set_ && !(child.bound < best_)) break;
      apply(child.slot, depth);
      descend(depth + 1);
      undo(child.slot, depth);
    }
  }

  std::vector<Block> bound_after(int slot, int depth) const {
    std::vector<Block> bound(known_.begin(), known_.end());
    for (int bi : slot_blocks_[static_cast<std::size_t>(slot)]) {
      bound[static_cast<std::size_t>(bi)] |= Block{1} << depth;
    }
    for (std::size_t bi = 0; bi < bound.size(); ++bi) {
      int left = remaining_[bi];
      if (in_slot_blocks(slot, static_cast<int>(bi))) --left;
      if (left > 0) bound[bi] |= ((Block{1} << left) - 1) << (depth + 1);
    }
    std::sort(bound.begin(), bound.end());
    return bound;
  }

  bool in_slot_blocks(int slot, int bi) const {
    const auto& v = slot_blocks_[static_cast<std::size_t>(slot)];
    return std::binary_search(v.begin(), v.end(), bi);
  }

  void apply(int slot, int depth) {
    taken_[static_cast<std::size_t>(slot)] = true;
    order_.push_back(slot);
    for (int bi : slot_blocks_[static_cast<std::size_t>(slot)]) {
      known_[static_cast<std::size_t>(bi)] |= Block{1} << depth;
      --remaining_[static_cast<std::size_t>(bi)];
    }
  }

  void undo(int slot, int depth) {
    taken_[static_cast<std::size_t>(slot)] = false;
    order_.pop_back();
    for (int bi : slot_blocks_[static_cast<std::size_t>(slot)]) {
      known_[static_cast<std::size_t>(bi)] &= ~(Block{1} << depth);
      ++remaining_[static_cast<std::size_t>(bi)];
    }
  }

  int slot_count_;
  std::vector<std::vector<int>> slot_blocks_;  // per slot: sorted block indices
  std::vector<int> twin_;
  std::vector<Block> known_;
  std::vector<int> remaining_;
  std::vector<bool> taken_;
  std::vector<int> order_;
  std::vector<Block> best_;
  std::vector<int> best_order_;
  bool best_set_ = false;
};

}  // namespace

ElementInvariant element_invariant(const SetSystem& s, int e) {
  if (e < 1 || e > s.ground_size()) throw std::invalid_argument("element out of range");
  ElementInvariant inv;
  Block bit = Block{1} << (e - 1);
  for (Block b : s.blocks()) {
    if (b & bit) {
      ++inv.occurrences;
      inv.block_sizes.push_back(block_size(b));
    }
  }
  std::sort(inv.block_sizes.begin(), inv.block_sizes.end());
  return inv;
}

std::pair<CanonicalForm, Permutation> canonical_form_with_witness(const SetSystem& s) {
  int n = s.ground_size();
  if (n > max_canonical_ground_size)
    throw limit_error("canonical form supports ground sets up to 16 elements");

  Block used_mask = essential_elements(s);
  std::vector<int> used = block_elements(used_mask);

  // Minimal encodings never waste low labels on unused elements: compacting
  // the used ones downward only shrinks every mask. So the search runs on
  // used elements alone and the unused ones take the top labels in input
  // order.
  CanonicalSearch search(s, used);
  auto [blocks, order] = search.run();

  std::vector<int> images(static_cast<std::size_t>(n), 0);
  int next = 1;
  for (int slot : order) images[static_cast<std::size_t>(used[static_cast<std::size_t>(slot)] - 1)] = next++;
  for (int e = 1; e <= n; ++e) {
    auto& img = images[static_cast<std::size_t>(e - 1)];
    if (img == 0) img = next++;
  }
  Permutation witness(std::move(images));
  return {CanonicalForm{n, std::move(blocks)}, std::move(witness)};
}

CanonicalForm canonical_form(const SetSystem& s) { return canonical_form_with_witness(s).first; }

SetSystem to_system(const CanonicalForm& c) { return SetSystem(c.n, c.blocks); }

std::optional<Permutation> find_isomorphism(const SetSystem& a, const SetSystem& b) {
  if (a.ground_size() != b.ground_size() || a.block_count() != b.block_count())
    return std::nullopt;
  auto [ca, wa] = canonical_form_with_witness(a);
  auto [cb, wb] = canonical_form_with_witness(b);
  if (ca != cb) return std::nullopt;
  Permutation p = wb.inverse().after(wa);
  if (apply_permutation(a, p) != b) throw std::logic_error("isomorphism witness failed to verify");
  return p;
}

bool isomorphic(const SetSystem& a, const SetSystem& b) {
  if (a.ground_size() != b.ground_size() || a.block_count() != b.block_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool block_display_less(Block a, Block b) {
  int sa = block_size(a);
  int sb = block_size(b);
  if (sa != sb) return sa < sb;
  Block d = a ^ b;
  if (d == 0) return false;
  Block low = d & (~d + 1);
  return (a & low) != 0;
}

bool display_less(const CanonicalForm& a, const CanonicalForm& b) {
  std::vector<Block> da = a.blocks;
  std::vector<Block> db = b.blocks;
  std::sort(da.begin(), da.end(), block_display_less);
  std::sort(db.begin(), db.end(), block_display_less);
  if (std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end(),
                                   block_display_less))
    return true;
  if (std::lexicographical_compare(db.begin(), db.end(), da.begin(), da.end(),
                                   block_display_less))
    return false;
  return a.n < b.n;
}

}  // namespace sperner
