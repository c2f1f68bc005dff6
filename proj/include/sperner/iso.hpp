#pragma once

#include <optional>
#include <utility>

#include "sperner/core.hpp"

namespace sperner {

// Canonical representative of an isomorphism class: the lexicographically
// least sorted block-mask list over all relabelings of the ground set.
// Masks compare as unsigned integers (bit i-1 = element i).
struct CanonicalForm {
  int n = 1;
  std::vector<Block> blocks;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int max_canonical_ground_size = 16;

// Per-element invariant used to order the canonical search: how often the
// element occurs and the sizes of the blocks containing it (sorted).
struct ElementInvariant {
  int occurrences = 0;
  std::vector<int> block_sizes;

  friend bool operator==(const ElementInvariant&, const ElementInvariant&) = default;
  friend auto operator<=>(const ElementInvariant&, const ElementInvariant&) = default;
};

ElementInvariant element_invariant(const SetSystem& s, int e);

CanonicalForm canonical_form(const SetSystem& s);

// Also returns a relabeling p with apply_permutation(s, p) equal to the
// canonical representative.
std::pair<CanonicalForm, Permutation> canonical_form_with_witness(const SetSystem& s);

SetSystem to_system(const CanonicalForm& c);

// Returns p with apply_permutation(a, p) == b, if one exists. The witness is
// verified before it is returned.
std::optional<Permutation> find_isomorphism(const SetSystem& a, const SetSystem& b);

bool isomorphic(const SetSystem& a, const SetSystem& b);

// Human-facing ordering, matching the usual way such families are printed:
// blocks compare by (cardinality, then ascending element list), systems as
// sequences of blocks in that order, shorter prefix first. This is not the
// mask order used by CanonicalForm.
bool block_display_less(Block a, Block b);
bool display_less(const CanonicalForm& a, const CanonicalForm& b);

}  // namespace sperner
