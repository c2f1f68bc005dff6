#pragma once

#include <cstdint>
#include <optional>

#include "sperner/core.hpp"
#include "sperner/minors.hpp"

namespace sperner {

inline constexpr std::size_t max_function_table = std::size_t{1} << 24;
inline constexpr int max_permutable_arity = 8;

// A finitary operation f : A^n -> B with A = {0..domain-1} and
// B = {0..codomain-1}. The table lists f over all |A|^n argument tuples in
// row-major order, last argument least significant.
class FiniteFunction {
 public:
  FiniteFunction(int domain, int codomain, int arity, std::vector<std::uint8_t> table);

  static std::size_t table_size(int domain, int arity);

  int domain() const { return domain_; }
  int codomain() const { return codomain_; }
  int arity() const { return arity_; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  std::size_t index_of(const std::vector<int>& args) const;
  int value_at(const std::vector<int>& args) const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

 private:
  int domain_;
  int codomain_;
  int arity_;
  std::vector<std::uint8_t> table_;
};

// f_I of arity n-1: the argument at position max I is replaced by the one at
// position min I, later positions shift down.
FiniteFunction identification_minor(const FiniteFunction& f, IdentPair I);

bool is_essential_arg(const FiniteFunction& f, int i);  // 1-based position
std::vector<int> essential_args(const FiniteFunction& f);

// Removes argument positions the value never depends on (keeping order).
FiniteFunction drop_inessential_args(const FiniteFunction& f);

// result(a_1..a_n) = f(a_{sigma(1)}, ..., a_{sigma(n)}); sigma acts on
// argument positions, 1-based.
FiniteFunction permute_args(const FiniteFunction& f, const std::vector<int>& sigma);

// Equal up to argument permutation after dropping inessential arguments.
bool equivalent(const FiniteFunction& f, const FiniteFunction& g);

// Equivalence-class key: inessential arguments removed, then the
// lexicographically least table over argument permutations.
struct FunctionKey {
  int domain = 0;
  int codomain = 0;
  int arity = 0;
  std::vector<std::uint8_t> table;

  friend bool operator==(const FunctionKey&, const FunctionKey&) = default;
  friend auto operator<=>(const FunctionKey&, const FunctionKey&) = default;
};

FunctionKey canonical_key(const FiniteFunction& f);

using FunctionDeck = Multiset<FunctionKey>;

// Multiset of canonical keys of all n*(n-1)/2 identification minors.
FunctionDeck function_deck(const FiniteFunction& f);

// The (a,b)-truncated term of s over the chain 0 < 1 < ... < k-1:
// max(a, min(b, join over blocks of the meet of the block's arguments)).
// The empty system gives the constant a, a lone empty block the constant b.
// Requires 0 <= a < b <= k-1 and ground size = arity.
FiniteFunction sperner_to_function(const SetSystem& s, int k, int a, int b);

// Minimal true points of a monotone 0/1 function, as blocks over [arity].
// Constant 0 gives the empty system, constant 1 the lone empty block.
SetSystem function_to_sperner(const FiniteFunction& f);

// Boolean-only predicates and constructions (domain = codomain = 2).
FiniteFunction dual(const FiniteFunction& f);
bool preserves_value(const FiniteFunction& f, int a);
bool is_monotone(const FiniteFunction& f);
bool is_self_dual(const FiniteFunction& f);

inline constexpr int rank_infinity = 0;

// Every set of at most `rank` tuples in the preimage of a shares a
// coordinate where all of them carry a. rank_infinity means the whole
// preimage must.
bool is_separating(const FiniteFunction& f, int a, int rank);

// Constant, or the AND of a nonempty set of arguments.
bool in_lambda(const FiniteFunction& f);
// Constant, or the OR of a nonempty set of arguments.
bool in_vee(const FiniteFunction& f);
// Affine over the two-element field.
bool is_linear(const FiniteFunction& f);

// Deck-respecting transforms. Each T satisfies T(f)_I = T(f_I).

// psi(f(phi(a_1), ..., phi(a_n))) for bijections phi of A and psi of B,
// given as image vectors (phi[v] = image of v).
FiniteFunction relabel(const FiniteFunction& f, const std::vector<int>& psi,
                       const std::vector<int>& phi);

// Overrides constant tuples: value delta[a] on (a, ..., a), f elsewhere.
FiniteFunction modify_diagonal(const FiniteFunction& f, const std::vector<std::uint8_t>& delta);

// Over carriers grown to new_domain/new_codomain: f on old-domain tuples,
// theta(set of tuple entries) elsewhere. theta is indexed by the subset mask
// of {0..new_domain-1}.
FiniteFunction extend(const FiniteFunction& f, int new_domain, int new_codomain,
                      const std::vector<std::uint8_t>& theta);

// Domain doubled to A x {0,1}, pair (a, t) encoded as a + t*|A|: f on the
// first coordinates when all tags agree, theta(set of encoded entries)
// otherwise. theta is indexed by the subset mask of {0..2|A|-1}.
FiniteFunction duplicate_pad(const FiniteFunction& f, const std::vector<std::uint8_t>& theta);

}  // namespace sperner
