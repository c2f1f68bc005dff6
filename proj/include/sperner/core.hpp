#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sperner {

// A block is a subset of the ground set [n] = {1, ..., n}, stored as a bit
// mask with bit i-1 representing element i. Ground sets have at most 64
// elements; size 0 is a degenerate value that only arises from vertex
// deletion over [1].
using Block = std::uint64_t;

inline constexpr int max_ground_size = 64;

// Thrown when an input exceeds a documented size cap (distinct from plain
// argument errors so callers can report "too large" separately).
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed textual input.
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Block full_mask(int n);
Block make_block(const std::vector<int>& elements, int n);
std::vector<int> block_elements(Block b);
int block_size(Block b);
bool is_subset(Block a, Block b);  // a included in b

// Bijection on the labels 1..n.
class Permutation {
 public:
  Permutation() = default;  // identity on the empty label set
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int e) const;
  Block apply(Block b) const;
  Permutation inverse() const;
  // Composition acting right-to-left: (p.after(q))(e) = p(q(e)).
  Permutation after(const Permutation& q) const;
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;  // images_[e-1] = image of label e
};

// A duplicate-free family of blocks over [n], kept sorted by mask value.
// Both the empty family and the family containing only the empty block are
// representable; is_trivial() reports them. Values are immutable.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(int n, std::vector<Block> blocks);

  int ground_size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  bool contains(Block b) const;
  bool has_empty_block() const;
  bool is_trivial() const;  // no blocks, or only the empty block

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
  friend auto operator<=>(const SetSystem&, const SetSystem&) = default;

 private:
  int n_ = 1;
  std::vector<Block> blocks_;  // sorted ascending, no duplicates
};

// True when no block includes another (Sperner property).
bool is_antichain(const SetSystem& s);

// Keeps only the inclusion-minimal blocks.
SetSystem minimalize(const SetSystem& s);

// Relabels every block through p; p must act on exactly [n].
SetSystem apply_permutation(const SetSystem& s, const Permutation& p);

// Union of all blocks: the elements that actually occur.
Block essential_elements(const SetSystem& s);

// Blockwise complement within the ground set.
SetSystem complement_system(const SetSystem& s);

// Multiset with deterministic (key-sorted) iteration order.
template <typename K>
class Multiset {
 public:
  void add(const K& key, long long count = 1) {
    auto it = counts_.find(key);
    if (it == counts_.end()) {
      counts_.emplace(key, count);
    } else if ((it->second += count) == 0) {
      counts_.erase(it);
    }
  }

  long long count(const K& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }

  long long size() const {
    long long total = 0;
    for (const auto& [key, c] : counts_) total += c;
    return total;
  }

  std::size_t distinct() const { return counts_.size(); }
  const std::map<K, long long>& items() const { return counts_; }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::map<K, long long> counts_;
};

}  // namespace sperner
