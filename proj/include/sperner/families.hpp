#pragma once

#include <cstdint>
#include <string>

#include "sperner/core.hpp"

namespace sperner {

// Ground set {1..m} u {1'..m'} encoded as labels 1..2m with i' = m + i.
// The doubled-plus-point families extend it by 0 -> 2m+1 and 0' -> 2m+2.
// Arithmetic on {1..m} is cyclic with representatives 1..m (m + 1 = 1).

int primed_label(int i, int m);

// Cyclic successor shift by q on [m].
int shift_label(int i, int q, int m);

// rho = (1 2 ... m)(1' 2' ... m') as a permutation of [2m].
Permutation rotation(int m);

// tau_i = (i i') as a permutation of [2m].
Permutation transposition(int m, int i);

// Union of rho^1(s) ... rho^m(s).
SetSystem rotate_closure(const SetSystem& s);

// Half-selected complement pairs: block per J subset of [m] of the selected
// parity, J together with the primes of its complement. parity 1 = odd |J|,
// parity 2 = even |J|. Requires m >= 2. 2^(m-1) blocks, all of size m.
SetSystem build_g(int m, int parity);

// m blocks of size 2m-3: the p-th block is everything except p, p', (p+1)'.
// Requires m >= 3.
SetSystem build_f(int m);

// The union of build_g(m, parity) and build_f(m); an antichain with
// 2^(m-1) + m blocks. Requires m >= 3.
SetSystem build_m(int m, int parity);

// Over 2m+1 labels: every block of build_m(m, parity) extended by the extra
// point 2m+1. Over 2m+2 labels: additionally the block {2m+1, 2m+2}.
// Requires n = 2m+1 or 2m+2 with m >= 3.
SetSystem build_u(int n, int parity);

// Self-dual m-homogeneous family over [2m] for odd m >= 3, with C(2m,m)/2
// blocks: the rotation closure of two seed blocks plus the rank classes of
// signature 'b', together with build_g(m, parity).
SetSystem build_s(int m, int parity);

// Subsets of [m] as 32-bit masks (bit i-1 = element i).
using Subset = std::uint32_t;

Subset shift_subset(Subset x, int q, int m);

// All sets containing both z and z' for z in X, neither for z in Y, and
// exactly one of z, z' otherwise. Requires X, Y disjoint subsets of [m].
// 2^(m - |X| - |Y|) blocks of size m + |X| - |Y|.
SetSystem q_set(int m, Subset x, Subset y);

// Union of q_set over all simultaneous rotations of (X, Y).
SetSystem q_rot(int m, Subset x, Subset y);

// Lexicographically least rotation of the pair (by ascending element lists,
// X first): the representative that names the rotation class.
std::pair<Subset, Subset> q_canonical_pair(int m, Subset x, Subset y);

struct QClass {
  Subset x = 0;
  Subset y = 0;
  SetSystem blocks;
};

// All rotation classes with |X| = |Y| (including (0,0)), by canonical pair.
// Their block sets partition the m-element subsets of [2m].
std::vector<QClass> q_class_partition(int m);

// Position string over {x, y, z}: position i reads 'x' if i is in X, 'y' if
// in Y, 'z' otherwise.
std::string full_signature(int m, Subset x, Subset y);

// Rewrites each 'z' as 'a' or 'b' (alpha/beta): different from its circular
// predecessor, 'b' right after 'x', 'a' right after 'y'. Rejects all-'z'
// strings.
std::string psi(const std::string& w);

enum class SignatureValue { none, alpha, beta, alpha_beta };

// Letters of {a, b} occurring an odd number of times.
SignatureValue phi(const std::string& w);

// phi(psi(full_signature)). Undefined (throws) for X = Y = empty.
SignatureValue reduced_signature(int m, Subset x, Subset y);

std::string to_string(SignatureValue v);

}  // namespace sperner
