#include "sperner/core.hpp"

#include <algorithm>
#include <bit>

namespace sperner {

Block full_mask(int n) {
  if (n < 0 || n > max_ground_size) throw std::invalid_argument("ground size out of range");
  return n == max_ground_size ? ~Block{0} : (Block{1} << n) - 1;
}

Block make_block(const std::vector<int>& elements, int n) {
  Block b = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("element out of range");
    Block bit = Block{1} << (e - 1);
    if (b & bit) throw std::invalid_argument("repeated element in block");
    b |= bit;
  }
  return b;
}

std::vector<int> block_elements(Block b) {
  std::vector<int> out;
  while (b) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

int block_size(Block b) { return std::popcount(b); }

bool is_subset(Block a, Block b) { return (a & ~b) == 0; }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  if (n > max_ground_size) throw std::invalid_argument("permutation too large");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0 || n > max_ground_size) throw std::invalid_argument("ground size out of range");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) img[static_cast<std::size_t>(e - 1)] = e;
  return Permutation(std::move(img));
}

int Permutation::operator()(int e) const {
  if (e < 1 || e > size()) throw std::invalid_argument("label out of range");
  return images_[static_cast<std::size_t>(e - 1)];
}

Block Permutation::apply(Block b) const {
  Block out = 0;
  while (b) {
    int e = std::countr_zero(b) + 1;
    b &= b - 1;
    out |= Block{1} << ((*this)(e)-1);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int e = 1; e <= size(); ++e) img[static_cast<std::size_t>(images_[static_cast<std::size_t>(e - 1)] - 1)] = e;
  return Permutation(std::move(img));
}

Permutation Permutation::after(const Permutation& q) const {
  if (size() != q.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> img(images_.size());
  for (int e = 1; e <= size(); ++e) img[static_cast<std::size_t>(e - 1)] = (*this)(q(e));
  return Permutation(std::move(img));
}

SetSystem::SetSystem(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0 || n > max_ground_size) throw std::invalid_argument("ground size out of range");
  Block universe = full_mask(n);
  for (Block b : blocks_) {
    if (b & ~universe) throw std::invalid_argument("block exceeds ground set");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
    throw std::invalid_argument("duplicate block");
}

bool SetSystem::contains(Block b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

bool SetSystem::has_empty_block() const { return !blocks_.empty() && blocks_.front() == 0; }

bool SetSystem::is_trivial() const {
  return blocks_.empty() || (blocks_.size() == 1 && blocks_.front() == 0);
}

bool is_antichain(const SetSystem& s) {
  const auto& blocks = s.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j && is_subset(blocks[i], blocks[j])) return false;
  return true;
}

SetSystem minimalize(const SetSystem& s) {
  const auto& blocks = s.blocks();
  std::vector<Block> kept;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j && is_subset(blocks[j], blocks[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(blocks[i]);
  }
  return SetSystem(s.ground_size(), std::move(kept));
}

SetSystem apply_permutation(const SetSystem& s, const Permutation& p) {
  if (p.size() != s.ground_size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Block> out;
  out.reserve(s.block_count());
  for (Block b : s.blocks()) out.push_back(p.apply(b));
  return SetSystem(s.ground_size(), std::move(out));
}

Block essential_elements(const SetSystem& s) {
  Block u = 0;
  for (Block b : s.blocks()) u |= b;
  return u;
}

SetSystem complement_system(const SetSystem& s) {
  Block universe = full_mask(s.ground_size());
  std::vector<Block> out;
  out.reserve(s.block_count());
  for (Block b : s.blocks()) out.push_back(universe & ~b);
  return SetSystem(s.ground_size(), std::move(out));
}

}  // namespace sperner
