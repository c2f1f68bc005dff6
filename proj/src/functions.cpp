#include "sperner/functions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sperner {

namespace {

std::vector<int> decode_tuple(std::size_t idx, int domain, int arity) {
  std::vector<int> args(static_cast<std::size_t>(arity));
  for (int p = arity - 1; p >= 0; --p) {
    args[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<std::size_t>(domain));
    idx /= static_cast<std::size_t>(domain);
  }
  return args;
}

void check_bijection(const std::vector<int>& images, int size, const char* what) {
  if (static_cast<int>(images.size()) != size) throw std::invalid_argument(std::string(what) + " has wrong size");
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : images) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument(std::string(what) + " is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void check_boolean(const FiniteFunction& f) {
  if (f.domain() != 2 || f.codomain() != 2)
    throw std::invalid_argument("function must map {0,1} tuples to {0,1}");
}

}  // namespace

FiniteFunction::FiniteFunction(int domain, int codomain, int arity, std::vector<std::uint8_t> table)
    : domain_(domain), codomain_(codomain), arity_(arity), table_(std::move(table)) {
  if (domain_ < 1) throw std::invalid_argument("domain must be nonempty");
  if (codomain_ < 1) throw std::invalid_argument("codomain must be nonempty");
  if (arity_ < 0) throw std::invalid_argument("arity must be nonnegative");
  if (table_.size() != table_size(domain_, arity_)) throw std::invalid_argument("table has wrong size");
  for (std::uint8_t v : table_) {
    if (v >= codomain_) throw std::invalid_argument("table value outside codomain");
  }
}

std::size_t FiniteFunction::table_size(int domain, int arity) {
  if (domain < 1 || arity < 0) throw std::invalid_argument("bad table shape");
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) {
    if (size > max_function_table / static_cast<std::size_t>(domain))
      throw limit_error("function table too large");
    size *= static_cast<std::size_t>(domain);
  }
  return size;
}

std::size_t FiniteFunction::index_of(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("wrong number of arguments");
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= domain_) throw std::invalid_argument("argument outside domain");
    idx = idx * static_cast<std::size_t>(domain_) + static_cast<std::size_t>(a);
  }
  return idx;
}

int FiniteFunction::value_at(const std::vector<int>& args) const { return table_[index_of(args)]; }

FiniteFunction identification_minor(const FiniteFunction& f, IdentPair I) {
  int n = f.arity();
  if (n < 2) throw std::invalid_argument("arity must be at least 2");
  if (I.i < 1 || I.i >= I.j || I.j > n) throw std::invalid_argument("bad identification pair");
  std::size_t size = FiniteFunction::table_size(f.domain(), n - 1);
  std::vector<std::uint8_t> table(size);
  std::vector<int> full(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<int> args = decode_tuple(idx, f.domain(), n - 1);
    for (int p = 1; p <= n; ++p)
      full[static_cast<std::size_t>(p - 1)] = args[static_cast<std::size_t>(merge_label(I, p) - 1)];
    table[idx] = static_cast<std::uint8_t>(f.value_at(full));
  }
  return FiniteFunction(f.domain(), f.codomain(), n - 1, std::move(table));
}

bool is_essential_arg(const FiniteFunction& f, int i) {
  if (i < 1 || i > f.arity()) throw std::invalid_argument("argument position out of range");
  std::size_t stride = 1;
  for (int p = f.arity(); p > i; --p) stride *= static_cast<std::size_t>(f.domain());
  const auto& table = f.table();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::size_t digit = (idx / stride) % static_cast<std::size_t>(f.domain());
    if (digit != 0) continue;
    for (int v = 1; v < f.domain(); ++v) {
      if (table[idx + static_cast<std::size_t>(v) * stride] != table[idx]) return true;
    }
  }
  return false;
}

std::vector<int> essential_args(const FiniteFunction& f) {
  std::vector<int> out;
  for (int i = 1; i <= f.arity(); ++i) {
    if (is_essential_arg(f, i)) out.push_back(i);
  }
  return out;
}

FiniteFunction drop_inessential_args(const FiniteFunction& f) {
  std::vector<int> ess = essential_args(f);
  int k = static_cast<int>(ess.size());
  if (k == f.arity()) return f;
  std::size_t size = FiniteFunction::table_size(f.domain(), k);
  std::vector<std::uint8_t> table(size);
  std::vector<int> full(static_cast<std::size_t>(f.arity()), 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<int> args = decode_tuple(idx, f.domain(), k);
    for (int p = 0; p < k; ++p) full[static_cast<std::size_t>(ess[static_cast<std::size_t>(p)] - 1)] = args[static_cast<std::size_t>(p)];
    table[idx] = static_cast<std::uint8_t>(f.value_at(full));
  }
  return FiniteFunction(f.domain(), f.codomain(), k, std::move(table));
}

FiniteFunction permute_args(const FiniteFunction& f, const std::vector<int>& sigma) {
  int n = f.arity();
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation has wrong size");
  std::vector<int> zero_based(sigma.size());
  for (std::size_t p = 0; p < sigma.size(); ++p) zero_based[p] = sigma[p] - 1;
  check_bijection(zero_based, n, "argument permutation");
  std::vector<std::uint8_t> table(f.table().size());
  std::vector<int> inner(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::vector<int> args = decode_tuple(idx, f.domain(), n);
    for (int p = 0; p < n; ++p) inner[static_cast<std::size_t>(p)] = args[static_cast<std::size_t>(zero_based[static_cast<std::size_t>(p)])];
    table[idx] = static_cast<std::uint8_t>(f.value_at(inner));
  }
  return FiniteFunction(f.domain(), f.codomain(), n, std::move(table));
}

FunctionKey canonical_key(const FiniteFunction& f) {
  FiniteFunction base = drop_inessential_args(f);
  int n = base.arity();
  if (n > max_permutable_arity) throw limit_error("arity too large to canonicalize");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<std::uint8_t> best = base.table();
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    std::vector<std::uint8_t> candidate = permute_args(base, sigma).table();
    if (candidate < best) best = std::move(candidate);
  }
  return FunctionKey{base.domain(), base.codomain(), n, std::move(best)};
}

bool equivalent(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain()) return false;
  return canonical_key(f) == canonical_key(g);
}

FunctionDeck function_deck(const FiniteFunction& f) {
  if (f.arity() < 2) throw std::invalid_argument("arity must be at least 2");
  FunctionDeck deck;
  for (IdentPair I : all_pairs(f.arity())) deck.add(canonical_key(identification_minor(f, I)));
  return deck;
}

FiniteFunction sperner_to_function(const SetSystem& s, int k, int a, int b) {
  if (k < 2) throw std::invalid_argument("chain must have at least two values");
  if (a < 0 || a >= b || b > k - 1) throw std::invalid_argument("bad truncation bounds");
  int n = s.ground_size();
  std::size_t size = FiniteFunction::table_size(k, n);
  std::vector<std::uint8_t> table(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<int> args = decode_tuple(idx, k, n);
    int join = 0;
    for (Block block : s.blocks()) {
      int meet = k - 1;
      for (int e : block_elements(block)) meet = std::min(meet, args[static_cast<std::size_t>(e - 1)]);
      join = std::max(join, meet);
    }
    table[idx] = static_cast<std::uint8_t>(std::max(a, std::min(b, join)));
  }
  return FiniteFunction(k, k, n, std::move(table));
}

SetSystem function_to_sperner(const FiniteFunction& f) {
  check_boolean(f);
  if (f.arity() < 1 || f.arity() > max_ground_size) throw std::invalid_argument("arity out of range");
  if (!is_monotone(f)) throw std::invalid_argument("function must be monotone");
  int n = f.arity();
  std::vector<Block> trues;
  const auto& table = f.table();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (!table[idx]) continue;
    Block b = 0;
    for (int i = 1; i <= n; ++i) {
      if (idx & (std::size_t{1} << (n - i))) b |= Block{1} << (i - 1);
    }
    trues.push_back(b);
  }
  SetSystem all(n, std::move(trues));
  return minimalize(all);
}

FiniteFunction dual(const FiniteFunction& f) {
  check_boolean(f);
  const auto& table = f.table();
  std::vector<std::uint8_t> out(table.size());
  for (std::size_t idx = 0; idx < table.size(); ++idx)
    out[idx] = static_cast<std::uint8_t>(1 - table[table.size() - 1 - idx]);
  return FiniteFunction(2, 2, f.arity(), std::move(out));
}

bool preserves_value(const FiniteFunction& f, int a) {
  if (a < 0 || a >= f.domain() || a >= f.codomain()) throw std::invalid_argument("value out of range");
  return f.value_at(std::vector<int>(static_cast<std::size_t>(f.arity()), a)) == a;
}

bool is_monotone(const FiniteFunction& f) {
  const auto& table = f.table();
  std::size_t stride = 1;
  for (int i = f.arity(); i >= 1; --i) {
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      std::size_t digit = (idx / stride) % static_cast<std::size_t>(f.domain());
      if (digit + 1 < static_cast<std::size_t>(f.domain()) && table[idx] > table[idx + stride])
        return false;
    }
    stride *= static_cast<std::size_t>(f.domain());
  }
  return true;
}

bool is_self_dual(const FiniteFunction& f) { return f == dual(f); }

bool is_separating(const FiniteFunction& f, int a, int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  if (a < 0 || a >= f.domain() || a >= f.codomain()) throw std::invalid_argument("value out of range");
  if (f.arity() < 1) return false;
  std::vector<std::uint64_t> masks;
  const auto& table = f.table();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] != a) continue;
    std::vector<int> args = decode_tuple(idx, f.domain(), f.arity());
    std::uint64_t mask = 0;
    for (int p = 0; p < f.arity(); ++p) {
      if (args[static_cast<std::size_t>(p)] == a) mask |= std::uint64_t{1} << p;
    }
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  if (masks.empty()) return true;
  if (rank == rank_infinity) {
    std::uint64_t all = ~std::uint64_t{0};
    for (std::uint64_t m : masks) all &= m;
    return all != 0;
  }
  std::set<std::uint64_t> seen(masks.begin(), masks.end());
  std::vector<std::uint64_t> frontier(masks.begin(), masks.end());
  for (int depth = 1; depth <= rank; ++depth) {
    if (seen.count(0)) return false;
    if (depth == rank || frontier.empty()) break;
    std::vector<std::uint64_t> next;
    for (std::uint64_t x : frontier) {
      for (std::uint64_t m : masks) {
        std::uint64_t v = x & m;
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return !seen.count(0);
}

bool in_lambda(const FiniteFunction& f) {
  check_boolean(f);
  const auto& table = f.table();
  if (std::adjacent_find(table.begin(), table.end(), std::not_equal_to<>()) == table.end()) return true;
  std::uint64_t want = 0;
  for (int i : essential_args(f)) want |= std::uint64_t{1} << (f.arity() - i);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    bool all = (static_cast<std::uint64_t>(idx) & want) == want;
    if (table[idx] != static_cast<std::uint8_t>(all ? 1 : 0)) return false;
  }
  return true;
}

bool in_vee(const FiniteFunction& f) {
  check_boolean(f);
  const auto& table = f.table();
  if (std::adjacent_find(table.begin(), table.end(), std::not_equal_to<>()) == table.end()) return true;
  std::uint64_t want = 0;
  for (int i : essential_args(f)) want |= std::uint64_t{1} << (f.arity() - i);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    bool any = (static_cast<std::uint64_t>(idx) & want) != 0;
    if (table[idx] != static_cast<std::uint8_t>(any ? 1 : 0)) return false;
  }
  return true;
}

bool is_linear(const FiniteFunction& f) {
  check_boolean(f);
  const auto& table = f.table();
  std::uint8_t c0 = table[0];
  std::uint64_t coeffs = 0;
  for (int i = 1; i <= f.arity(); ++i) {
    std::size_t unit = std::size_t{1} << (f.arity() - i);
    if (table[unit] != c0) coeffs |= static_cast<std::uint64_t>(unit);
  }
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    int parity = std::popcount(static_cast<std::uint64_t>(idx) & coeffs) & 1;
    if (table[idx] != static_cast<std::uint8_t>(c0 ^ parity)) return false;
  }
  return true;
}

FiniteFunction relabel(const FiniteFunction& f, const std::vector<int>& psi,
                       const std::vector<int>& phi) {
  check_bijection(psi, f.codomain(), "codomain relabeling");
  check_bijection(phi, f.domain(), "domain relabeling");
  std::vector<std::uint8_t> table(f.table().size());
  std::vector<int> inner(static_cast<std::size_t>(f.arity()));
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::vector<int> args = decode_tuple(idx, f.domain(), f.arity());
    for (std::size_t p = 0; p < inner.size(); ++p) inner[p] = phi[static_cast<std::size_t>(args[p])];
    table[idx] = static_cast<std::uint8_t>(psi[static_cast<std::size_t>(f.value_at(inner))]);
  }
  return FiniteFunction(f.domain(), f.codomain(), f.arity(), std::move(table));
}

FiniteFunction modify_diagonal(const FiniteFunction& f, const std::vector<std::uint8_t>& delta) {
  if (f.arity() < 1) throw std::invalid_argument("arity must be at least 1");
  if (static_cast<int>(delta.size()) != f.domain()) throw std::invalid_argument("override has wrong size");
  for (std::uint8_t v : delta) {
    if (v >= f.codomain()) throw std::invalid_argument("override value outside codomain");
  }
  std::vector<std::uint8_t> table = f.table();
  for (int a = 0; a < f.domain(); ++a) {
    std::size_t idx = f.index_of(std::vector<int>(static_cast<std::size_t>(f.arity()), a));
    table[idx] = delta[static_cast<std::size_t>(a)];
  }
  return FiniteFunction(f.domain(), f.codomain(), f.arity(), std::move(table));
}

FiniteFunction extend(const FiniteFunction& f, int new_domain, int new_codomain,
                      const std::vector<std::uint8_t>& theta) {
  if (new_domain < f.domain() || new_codomain < f.codomain())
    throw std::invalid_argument("carriers may only grow");
  if (new_domain > 30 || theta.size() != (std::size_t{1} << new_domain))
    throw std::invalid_argument("filler has wrong size");
  for (std::uint8_t v : theta) {
    if (v >= new_codomain) throw std::invalid_argument("filler value outside codomain");
  }
  std::size_t size = FiniteFunction::table_size(new_domain, f.arity());
  std::vector<std::uint8_t> table(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<int> args = decode_tuple(idx, new_domain, f.arity());
    bool old = true;
    std::uint32_t entries = 0;
    for (int a : args) {
      if (a >= f.domain()) old = false;
      entries |= std::uint32_t{1} << a;
    }
    table[idx] = old ? static_cast<std::uint8_t>(f.value_at(args)) : theta[entries];
  }
  return FiniteFunction(new_domain, new_codomain, f.arity(), std::move(table));
}

FiniteFunction duplicate_pad(const FiniteFunction& f, const std::vector<std::uint8_t>& theta) {
  int d = f.domain();
  if (2 * d > 30 || theta.size() != (std::size_t{1} << (2 * d)))
    throw std::invalid_argument("filler has wrong size");
  for (std::uint8_t v : theta) {
    if (v >= f.codomain()) throw std::invalid_argument("filler value outside codomain");
  }
  std::size_t size = FiniteFunction::table_size(2 * d, f.arity());
  std::vector<std::uint8_t> table(size);
  std::vector<int> firsts(static_cast<std::size_t>(f.arity()));
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<int> args = decode_tuple(idx, 2 * d, f.arity());
    bool saw0 = false;
    bool saw1 = false;
    std::uint32_t entries = 0;
    for (std::size_t p = 0; p < args.size(); ++p) {
      int a = args[p];
      (a < d ? saw0 : saw1) = true;
      firsts[p] = a % d;
      entries |= std::uint32_t{1} << a;
    }
    table[idx] = (saw0 && saw1) ? theta[entries] : static_cast<std::uint8_t>(f.value_at(firsts));
  }
  return FiniteFunction(2 * d, f.codomain(), f.arity(), std::move(table));
}

}  // namespace sperner
