#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sperner/core.hpp"
#include "sperner/families.hpp"
#include "sperner/iso.hpp"

using namespace sperner;

namespace {

SetSystem from_shorthand(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Block> masks;
  for (const auto& b : blocks) masks.push_back(make_block(b, n));
  return SetSystem(n, std::move(masks));
}

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= Subset{1} << (e - 1);
  return s;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Block> all_subsets_of_size(int n, int k) {
  std::vector<Block> out;
  for (Block b = 0; b <= full_mask(n); ++b) {
    if (block_size(b) == k) out.push_back(b);
    if (b == full_mask(n)) break;
  }
  return out;
}

}  // namespace

TEST_CASE("label helpers implement the doubled cyclic ground set") {
  CHECK(primed_label(1, 3) == 4);
  CHECK(primed_label(3, 3) == 6);
  CHECK(shift_label(3, 1, 3) == 1);
  CHECK(shift_label(1, -1, 3) == 3);
  CHECK(shift_label(2, 7, 3) == 3);
  CHECK(shift_subset(subset_of({1, 3}), 1, 3) == subset_of({1, 2}));
  CHECK(shift_subset(subset_of({2}), 2, 5) == subset_of({4}));
}

TEST_CASE("the rotation cycles both halves in parallel") {
  Permutation rho = rotation(3);
  CHECK(rho(1) == 2);
  CHECK(rho(3) == 1);
  CHECK(rho(4) == 5);
  CHECK(rho(6) == 4);
  Permutation power = rho;
  for (int i = 1; i < 3; ++i) power = rho.after(power);
  CHECK(power == Permutation::identity(6));
}

TEST_CASE("transpositions swap one label with its primed partner") {
  Permutation tau = transposition(4, 2);
  CHECK(tau(2) == 6);
  CHECK(tau(6) == 2);
  CHECK(tau(1) == 1);
  CHECK(tau(5) == 5);
  CHECK(tau.after(tau) == Permutation::identity(8));
}

TEST_CASE("rotation closures are fixed by the rotation and contain the seed") {
  SetSystem seed = from_shorthand(6, {{1, 2, 5}});
  SetSystem closed = rotate_closure(seed);
  CHECK(closed.block_count() == 3);
  for (Block b : seed.blocks()) CHECK(closed.contains(b));
  CHECK(apply_permutation(closed, rotation(3)) == closed);
  CHECK(rotate_closure(closed) == closed);
}

TEST_CASE("half-selected complement families match the hand-computed instances") {
  CHECK(build_g(3, 1) == from_shorthand(6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}}));
  CHECK(build_g(3, 2) == from_shorthand(6, {{4, 5, 6}, {1, 2, 6}, {1, 3, 5}, {2, 3, 4}}));
}

TEST_CASE("half-selected complement families have one size-m block per parity class") {
  for (int m : {2, 3, 4, 5}) {
    for (int parity : {1, 2}) {
      SetSystem g = build_g(m, parity);
      CHECK(g.block_count() == (std::size_t{1} << (m - 1)));
      for (Block b : g.blocks()) {
        CHECK(block_size(b) == m);
        int unprimed = block_size(b & Block(full_mask(m)));
        CHECK(unprimed % 2 == (parity == 1 ? 1 : 0));
        // Exactly one of each pair i, i'.
        Block low = b & Block(full_mask(m));
        Block high = b >> m;
        CHECK((low ^ high) == Block(full_mask(m)));
      }
      CHECK(is_antichain(g));
      CHECK(apply_permutation(g, rotation(m)) == g);
    }
  }
  CHECK(build_g(5, 1) != build_g(5, 2));
}

TEST_CASE("the three-blocks-removed family matches the hand-computed instance") {
  CHECK(build_f(3) == from_shorthand(6, {{1, 2, 5}, {1, 3, 4}, {2, 3, 6}}));
}

TEST_CASE("the three-blocks-removed family drops one pair-and-successor per label") {
  for (int m : {3, 4, 5, 6}) {
    SetSystem f = build_f(m);
    CHECK(f.block_count() == static_cast<std::size_t>(m));
    for (int p = 1; p <= m; ++p) {
      Block missing = make_block({p, primed_label(p, m), primed_label(shift_label(p, 1, m), m)},
                                 2 * m);
      CHECK(f.contains(full_mask(2 * m) & ~missing));
    }
    CHECK(is_antichain(f));
    CHECK(apply_permutation(f, rotation(m)) == f);
  }
}

TEST_CASE("the combined family is the union of its two parts") {
  for (int m : {3, 4, 5}) {
    for (int parity : {1, 2}) {
      SetSystem combined = build_m(m, parity);
      SetSystem g = build_g(m, parity);
      SetSystem f = build_f(m);
      CHECK(combined.block_count() == g.block_count() + f.block_count());
      for (Block b : g.blocks()) CHECK(combined.contains(b));
      for (Block b : f.blocks()) CHECK(combined.contains(b));
      CHECK(is_antichain(combined));
    }
  }
  CHECK(build_m(3, 1).block_count() == 7);
  CHECK(build_m(4, 1).block_count() == 12);
  CHECK(build_m(5, 1).block_count() == 21);
}

TEST_CASE("pointed extensions append the extra point to every block") {
  SetSystem u7 = build_u(7, 1);
  CHECK(u7 == from_shorthand(7, {{1, 2, 3, 7}, {1, 2, 5, 7}, {1, 3, 4, 7}, {1, 5, 6, 7},
                                 {2, 3, 6, 7}, {2, 4, 6, 7}, {3, 4, 5, 7}}));
  for (int n : {7, 8, 9, 10}) {
    for (int parity : {1, 2}) {
      SetSystem u = build_u(n, parity);
      int m = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
      SetSystem base = build_m(m, parity);
      std::size_t expected = base.block_count() + (n % 2 == 0 ? 1 : 0);
      CHECK(u.block_count() == expected);
      Block point = Block{1} << (2 * m);
      for (Block b : base.blocks()) CHECK(u.contains(b | point));
      if (n % 2 == 0) CHECK(u.contains(point | (point << 1)));
      CHECK(is_antichain(u));
    }
  }
  CHECK(build_u(7, 1).block_count() == 7);
  CHECK(build_u(8, 1).block_count() == 8);
  CHECK(build_u(9, 1).block_count() == 12);
  CHECK(build_u(10, 1).block_count() == 13);
}

TEST_CASE("pair classes collect sets by their primed-pair pattern") {
  SetSystem q = q_set(5, subset_of({1}), subset_of({2, 3}));
  CHECK(q == from_shorthand(10, {{1, 4, 5, 6}, {1, 4, 6, 10}, {1, 5, 6, 9}, {1, 6, 9, 10}}));
  for (int m : {3, 4, 5}) {
    Subset x = subset_of({1});
    Subset y = subset_of({2});
    SetSystem qs = q_set(m, x, y);
    CHECK(qs.block_count() == (std::size_t{1} << (m - 2)));
    for (Block b : qs.blocks()) {
      CHECK(block_size(b) == m);
      CHECK((b & Block{1}) != 0);
      CHECK((b & (Block{1} << m)) != 0);
      CHECK((b & Block{2}) == 0);
      CHECK((b & (Block{1} << (m + 1))) == 0);
    }
  }
  CHECK_THROWS_AS(q_set(3, subset_of({1}), subset_of({1})), std::invalid_argument);
}

TEST_CASE("pair class sizes follow the selected and excluded counts") {
  for (int m : {4, 5}) {
    for (Subset x = 0; x <= full_mask(m); ++x) {
      for (Subset y = 0; y <= full_mask(m); ++y) {
        if ((x & y) != 0) continue;
        SetSystem q = q_set(m, x, y);
        int free = m - block_size(x) - block_size(y);
        CHECK(q.block_count() == (std::size_t{1} << free));
        for (Block b : q.blocks()) CHECK(block_size(b) == m + block_size(x) - block_size(y));
        if (y == full_mask(m)) break;
      }
      if (x == full_mask(m)) break;
    }
  }
}

TEST_CASE("rotation classes of pairs are rotation-invariant and canonically named") {
  SetSystem r = q_rot(5, subset_of({1, 2}), subset_of({3, 4}));
  CHECK(r.block_count() == 10);
  CHECK(apply_permutation(r, rotation(5)) == r);
  CHECK(q_rot(5, subset_of({2, 3}), subset_of({4, 5})) == r);
  auto canon = q_canonical_pair(5, subset_of({2, 3}), subset_of({4, 5}));
  CHECK(canon == q_canonical_pair(5, subset_of({1, 2}), subset_of({3, 4})));

  SetSystem both = q_rot(4, 0, 0);
  SetSystem g1 = build_g(4, 1);
  SetSystem g2 = build_g(4, 2);
  CHECK(both.block_count() == g1.block_count() + g2.block_count());
  for (Block b : g1.blocks()) CHECK(both.contains(b));
  for (Block b : g2.blocks()) CHECK(both.contains(b));
}

TEST_CASE("balanced rotation classes partition the middle layer") {
  for (int m : {3, 4, 5}) {
    std::vector<QClass> classes = q_class_partition(m);
    std::set<Block> seen;
    long long total = 0;
    for (const QClass& c : classes) {
      CHECK(block_size(c.x) == block_size(c.y));
      for (Block b : c.blocks.blocks()) {
        CHECK(block_size(b) == m);
        CHECK(seen.insert(b).second);
      }
      total += static_cast<long long>(c.blocks.block_count());
    }
    CHECK(total == binomial(2 * m, m));
    CHECK(seen.size() == static_cast<std::size_t>(binomial(2 * m, m)));
  }
}

TEST_CASE("complementation swaps the two sides of a rotation class") {
  for (int m : {3, 4, 5}) {
    for (const QClass& c : q_class_partition(m)) {
      SetSystem comp = complement_system(c.blocks);
      CHECK(comp == q_rot(m, c.y, c.x));
      if (m % 2 == 1 && (c.x != 0 || c.y != 0)) {
        CHECK(comp != c.blocks);
      }
      if (c.x == 0 && c.y == 0) {
        CHECK(comp == c.blocks);
      }
    }
  }
}

TEST_CASE("every rotation class is closed under each pair transposition") {
  for (int m : {3, 4, 5}) {
    for (const QClass& c : q_class_partition(m)) {
      for (int j = 1; j <= m; ++j) {
        CHECK(apply_permutation(c.blocks, transposition(m, j)) == c.blocks);
      }
    }
  }
}

TEST_CASE("position strings read x, y, or z at each label") {
  CHECK(full_signature(5, subset_of({1, 4}), subset_of({2})) == "xyzxz");
  CHECK(full_signature(3, 0, 0) == "zzz");
  CHECK_THROWS_AS(full_signature(3, subset_of({1}), subset_of({1})), std::invalid_argument);
}

TEST_CASE("the circular rewrite resolves each z from its predecessor") {
  CHECK(psi("xz") == "xb");
  CHECK(psi("yz") == "ya");
  CHECK(psi("xzz") == "xba");
  CHECK(psi("zx") == "bx");
  CHECK(psi("zzy") == "aby");
  CHECK_THROWS_AS(psi("zzz"), std::invalid_argument);
  CHECK_THROWS_AS(psi("xq"), std::invalid_argument);
}

TEST_CASE("the parity fingerprint reports letters occurring an odd number of times") {
  CHECK(phi("xy") == SignatureValue::none);
  CHECK(phi("xya") == SignatureValue::alpha);
  CHECK(phi("ab") == SignatureValue::alpha_beta);
  CHECK(phi("aab") == SignatureValue::beta);
  CHECK(phi("aabb") == SignatureValue::none);
  CHECK(to_string(SignatureValue::none) == "0");
  CHECK(to_string(SignatureValue::alpha) == "a");
  CHECK(to_string(SignatureValue::beta) == "b");
  CHECK(to_string(SignatureValue::alpha_beta) == "ab");
}

TEST_CASE("the two nine-label worked examples come out exactly") {
  Subset x1 = subset_of({2, 5, 9});
  Subset y1 = subset_of({3, 8});
  CHECK(full_signature(9, x1, y1) == "zxyzxzzyx");
  CHECK(psi("zxyzxzzyx") == "bxyaxbayx");
  CHECK(reduced_signature(9, x1, y1) == SignatureValue::none);

  Subset x2 = subset_of({2, 5});
  Subset y2 = subset_of({3, 8});
  CHECK(full_signature(9, x2, y2) == "zxyzxzzyz");
  CHECK(psi("zxyzxzzyz") == "bxyaxbaya");
  CHECK(reduced_signature(9, x2, y2) == SignatureValue::alpha);

  CHECK_THROWS_AS(reduced_signature(5, 0, 0), std::invalid_argument);
}

TEST_CASE("reduced signatures are rotation invariants") {
  for (int m : {5, 7}) {
    for (const QClass& c : q_class_partition(m)) {
      if (c.x == 0 && c.y == 0) continue;
      SignatureValue v = reduced_signature(m, c.x, c.y);
      for (int q = 1; q < m; ++q) {
        CHECK(reduced_signature(m, shift_subset(c.x, q, m), shift_subset(c.y, q, m)) == v);
      }
    }
  }
}

TEST_CASE("single-gap classes built from the odd positions carry the beta signature") {
  for (int m : {5, 7}) {
    Subset odd = 0;
    for (int i = 1; i <= m - 2; i += 2) odd |= Subset{1} << (i - 1);
    Subset x = odd & ~(Subset{1} << (m - 3));
    for (int j = 2; j <= m - 1; j += 2) {
      Subset y = (odd << 1) & ~(Subset{1} << (j - 1));
      CHECK(reduced_signature(m, x, y) == SignatureValue::beta);
    }
  }
}

TEST_CASE("the self-dual family matches the hand-computed smallest instance") {
  CHECK(build_s(3, 1) ==
        from_shorthand(6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6},
                           {1, 5, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}}));
}

TEST_CASE("the self-dual family is homogeneous with half of the middle layer") {
  for (int m : {3, 5}) {
    for (int parity : {1, 2}) {
      SetSystem s = build_s(m, parity);
      CHECK(s.block_count() == static_cast<std::size_t>(binomial(2 * m, m) / 2));
      for (Block b : s.blocks()) CHECK(block_size(b) == m);
      CHECK(is_antichain(s));
      CHECK(apply_permutation(s, rotation(m)) == s);
      SetSystem g = build_g(m, parity);
      for (Block b : g.blocks()) CHECK(s.contains(b));
    }
    SetSystem s1 = build_s(m, 1);
    SetSystem s2 = build_s(m, 2);
    CHECK(s1 != s2);
    std::size_t shared = 0;
    for (Block b : s1.blocks()) shared += s2.contains(b) ? 1 : 0;
    CHECK(shared == s1.block_count() - build_g(m, 1).block_count());
  }
}

TEST_CASE("exactly one of each complementary middle-layer pair is selected") {
  for (int m : {3, 5}) {
    for (int parity : {1, 2}) {
      SetSystem s = build_s(m, parity);
      for (Block b : all_subsets_of_size(2 * m, m)) {
        Block comp = full_mask(2 * m) & ~b;
        CHECK(s.contains(b) != s.contains(comp));
      }
    }
  }
}

TEST_CASE("every set above the middle layer includes a shared block") {
  for (int m : {3, 5}) {
    SetSystem s1 = build_s(m, 1);
    SetSystem s2 = build_s(m, 2);
    for (Block j : all_subsets_of_size(2 * m, m + 1)) {
      bool covered1 = false;
      bool covered2 = false;
      for (Block b : s1.blocks()) covered1 |= is_subset(b, j);
      for (Block b : s2.blocks()) covered2 |= is_subset(b, j);
      CHECK(covered1);
      CHECK(covered2);
    }
  }
}

TEST_CASE("family constructors validate their parameters") {
  CHECK_THROWS_AS(build_g(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_g(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_g(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_f(2), std::invalid_argument);
  CHECK_THROWS_AS(build_m(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_u(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_u(11, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_s(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_s(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_g(32, 1), limit_error);
}
