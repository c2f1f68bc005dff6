#include "sperner/families.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sperner {

namespace {

void check_m(int m, int least) {
  if (m < least) throw std::invalid_argument("m out of range");
  if (2 * m + 2 > max_ground_size) throw limit_error("m exceeds the ground-set cap");
}

void check_parity(int parity) {
  if (parity != 1 && parity != 2) throw std::invalid_argument("parity must be 1 or 2");
}

Subset full_subset(int m) { return (Subset{1} << m) - 1; }

std::vector<int> subset_elements(Subset x) {
  std::vector<int> out;
  while (x) {
    out.push_back(std::countr_zero(x) + 1);
    x &= x - 1;
  }
  return out;
}

// Block over [2m] with unprimed part u and primed part p (both subsets of [m]).
Block doubled_block(Subset u, Subset p, int m) {
  return static_cast<Block>(u) | (static_cast<Block>(p) << m);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int primed_label(int i, int m) {
  if (i < 1 || i > m) throw std::invalid_argument("element out of range");
  return m + i;
}

int shift_label(int i, int q, int m) {
  if (i < 1 || i > m) throw std::invalid_argument("element out of range");
  int r = (i - 1 + q) % m;
  if (r < 0) r += m;
  return r + 1;
}

Subset shift_subset(Subset x, int q, int m) {
  Subset full = full_subset(m);
  if (x & ~full) throw std::invalid_argument("subset exceeds range");
  q %= m;
  if (q < 0) q += m;
  if (q == 0) return x;
  return ((x << q) | (x >> (m - q))) & full;
}

Permutation rotation(int m) {
  check_m(m, 1);
  std::vector<int> img(static_cast<std::size_t>(2 * m));
  for (int i = 1; i <= m; ++i) {
    img[static_cast<std::size_t>(i - 1)] = shift_label(i, 1, m);
    img[static_cast<std::size_t>(m + i - 1)] = m + shift_label(i, 1, m);
  }
  return Permutation(std::move(img));
}

Permutation transposition(int m, int i) {
  check_m(m, 1);
  if (i < 1 || i > m) throw std::invalid_argument("element out of range");
  Permutation p = Permutation::identity(2 * m);
  std::vector<int> img = p.images();
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(m + i - 1)]);
  return Permutation(std::move(img));
}

SetSystem rotate_closure(const SetSystem& s) {
  int n = s.ground_size();
  if (n % 2 != 0) throw std::invalid_argument("rotation closure needs a doubled ground set");
  int m = n / 2;
  Permutation rho = rotation(m);
  std::set<Block> out;
  SetSystem cur = s;
  for (int i = 0; i < m; ++i) {
    cur = apply_permutation(cur, rho);
    out.insert(cur.blocks().begin(), cur.blocks().end());
  }
  return SetSystem(n, std::vector<Block>(out.begin(), out.end()));
}

SetSystem build_g(int m, int parity) {
  check_m(m, 2);
  check_parity(parity);
  int want = parity == 1 ? 1 : 0;
  Subset full = full_subset(m);
  std::vector<Block> blocks;
  for (Subset j = 0; j <= full; ++j) {
    if ((std::popcount(j) & 1) == want) blocks.push_back(doubled_block(j, full & ~j, m));
  }
  return SetSystem(2 * m, std::move(blocks));
}

SetSystem build_f(int m) {
  check_m(m, 3);
  std::vector<Block> blocks;
  Block everything = full_mask(2 * m);
  for (int p = 1; p <= m; ++p) {
    Block gaps = (Block{1} << (p - 1)) | (Block{1} << (m + p - 1)) |
                 (Block{1} << (m + shift_label(p, 1, m) - 1));
    blocks.push_back(everything & ~gaps);
  }
  return SetSystem(2 * m, std::move(blocks));
}

SetSystem build_m(int m, int parity) {
  check_m(m, 3);
  check_parity(parity);
  SetSystem g = build_g(m, parity);
  SetSystem f = build_f(m);
  std::vector<Block> blocks = g.blocks();
  blocks.insert(blocks.end(), f.blocks().begin(), f.blocks().end());
  SetSystem out(2 * m, std::move(blocks));
  if (!is_antichain(out)) throw std::logic_error("family is not an antichain");
  return out;
}

SetSystem build_u(int n, int parity) {
  check_parity(parity);
  if (n < 7) throw std::invalid_argument("n must be at least 7");
  int m = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
  check_m(m, 3);
  SetSystem base = build_m(m, parity);
  Block extra = Block{1} << (2 * m);
  std::vector<Block> blocks;
  for (Block b : base.blocks()) blocks.push_back(b | extra);
  if (n % 2 == 0) blocks.push_back(extra | (extra << 1));
  SetSystem out(n, std::move(blocks));
  if (!is_antichain(out)) throw std::logic_error("family is not an antichain");
  return out;
}

SetSystem q_set(int m, Subset x, Subset y) {
  check_m(m, 1);
  Subset full = full_subset(m);
  if ((x & ~full) || (y & ~full)) throw std::invalid_argument("subset exceeds range");
  if (x & y) throw std::invalid_argument("subsets must be disjoint");
  Subset z = full & ~(x | y);
  std::vector<Block> blocks;
  Subset t = z;
  for (;;) {
    blocks.push_back(doubled_block(x | t, x | (z ^ t), m));
    if (t == 0) break;
    t = (t - 1) & z;
  }
  return SetSystem(2 * m, std::move(blocks));
}

SetSystem q_rot(int m, Subset x, Subset y) {
  std::set<Block> out;
  for (int q = 1; q <= m; ++q) {
    SetSystem rotated = q_set(m, shift_subset(x, q, m), shift_subset(y, q, m));
    out.insert(rotated.blocks().begin(), rotated.blocks().end());
  }
  return SetSystem(2 * m, std::vector<Block>(out.begin(), out.end()));
}

std::pair<Subset, Subset> q_canonical_pair(int m, Subset x, Subset y) {
  check_m(m, 1);
  std::pair<Subset, Subset> best{0, 0};
  std::pair<std::vector<int>, std::vector<int>> best_key;
  bool have = false;
  for (int q = 0; q < m; ++q) {
    Subset xs = shift_subset(x, q, m);
    Subset ys = shift_subset(y, q, m);
    std::pair<std::vector<int>, std::vector<int>> key{subset_elements(xs), subset_elements(ys)};
    if (!have || key < best_key) {
      best = {xs, ys};
      best_key = std::move(key);
      have = true;
    }
  }
  return best;
}

std::vector<QClass> q_class_partition(int m) {
  check_m(m, 1);
  Subset full = full_subset(m);
  std::set<std::pair<Subset, Subset>> reps;
  for (Subset x = 0; x <= full; ++x) {
    Subset rest = full & ~x;
    for (Subset y = rest;; y = (y - 1) & rest) {
      if (std::popcount(x) == std::popcount(y)) reps.insert(q_canonical_pair(m, x, y));
      if (y == 0) break;
    }
  }
  std::vector<QClass> out;
  for (const auto& [x, y] : reps) out.push_back({x, y, q_rot(m, x, y)});
  return out;
}

std::string full_signature(int m, Subset x, Subset y) {
  check_m(m, 1);
  Subset full = full_subset(m);
  if ((x & ~full) || (y & ~full)) throw std::invalid_argument("subset exceeds range");
  if (x & y) throw std::invalid_argument("subsets must be disjoint");
  std::string d(static_cast<std::size_t>(m), 'z');
  for (int i = 1; i <= m; ++i) {
    Subset bit = Subset{1} << (i - 1);
    if (x & bit) d[static_cast<std::size_t>(i - 1)] = 'x';
    else if (y & bit) d[static_cast<std::size_t>(i - 1)] = 'y';
  }
  return d;
}

std::string psi(const std::string& w) {
  std::size_t len = w.size();
  if (len == 0) throw std::invalid_argument("empty string");
  std::size_t anchor = len;
  for (std::size_t i = 0; i < len; ++i) {
    char c = w[i];
    if (c != 'x' && c != 'y' && c != 'z') throw std::invalid_argument("string must be over x, y, z");
    if (c != 'z' && anchor == len) anchor = i;
  }
  if (anchor == len) throw std::invalid_argument("all-z string has no image");
  std::string r = w;
  for (std::size_t k = 1; k <= len; ++k) {
    std::size_t i = (anchor + k) % len;
    if (w[i] != 'z') continue;
    char prev = r[(i + len - 1) % len];
    switch (prev) {
      case 'x': r[i] = 'b'; break;
      case 'y': r[i] = 'a'; break;
      case 'a': r[i] = 'b'; break;
      default: r[i] = 'a'; break;
    }
  }
  return r;
}

SignatureValue phi(const std::string& w) {
  int a = 0;
  int b = 0;
  for (char c : w) {
    if (c == 'a') ++a;
    else if (c == 'b') ++b;
    else if (c != 'x' && c != 'y') throw std::invalid_argument("string must be over x, y, a, b");
  }
  if (a % 2 == 0 && b % 2 == 0) return SignatureValue::none;
  if (a % 2 == 1 && b % 2 == 0) return SignatureValue::alpha;
  if (a % 2 == 0) return SignatureValue::beta;
  return SignatureValue::alpha_beta;
}

SignatureValue reduced_signature(int m, Subset x, Subset y) {
  if (x == 0 && y == 0) throw std::invalid_argument("signature undefined for the empty pair");
  return phi(psi(full_signature(m, x, y)));
}

std::string to_string(SignatureValue v) {
  switch (v) {
    case SignatureValue::none: return "0";
    case SignatureValue::alpha: return "a";
    case SignatureValue::beta: return "b";
    default: return "ab";
  }
}

SetSystem build_s(int m, int parity) {
  check_m(m, 3);
  check_parity(parity);
  if (m % 2 == 0) throw std::invalid_argument("m must be odd");

  Subset c = 0;
  for (int i = 1; i <= m - 2; i += 2) c |= Subset{1} << (i - 1);
  Subset c_next = shift_subset(c, 1, m);

  Block seed_a = (Block{1} << (m - 1)) | doubled_block(c_next, c_next, m);
  Block seed_b = (Block{1} << (m - 1)) | doubled_block(c, c, m);
  SetSystem rotated = rotate_closure(SetSystem(2 * m, {seed_a, seed_b}));

  std::set<Block> blocks(rotated.blocks().begin(), rotated.blocks().end());

  auto excluded1 = q_canonical_pair(m, c, c_next);
  auto excluded2 = q_canonical_pair(m, c_next, c);
  for (const QClass& cls : q_class_partition(m)) {
    if (cls.x == 0 && cls.y == 0) continue;
    std::pair<Subset, Subset> rep{cls.x, cls.y};
    if (rep == excluded1 || rep == excluded2) continue;
    if (reduced_signature(m, cls.x, cls.y) != SignatureValue::beta) continue;
    blocks.insert(cls.blocks.blocks().begin(), cls.blocks.blocks().end());
  }

  SetSystem g = build_g(m, parity);
  blocks.insert(g.blocks().begin(), g.blocks().end());

  SetSystem out(2 * m, std::vector<Block>(blocks.begin(), blocks.end()));
  if (static_cast<long long>(out.block_count()) != binomial(2 * m, m) / 2)
    throw std::logic_error("unexpected block count");
  if (!is_antichain(out)) throw std::logic_error("family is not an antichain");
  return out;
}

}  // namespace sperner
