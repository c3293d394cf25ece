#pragma once
// Exhaustive enumeration of finite residuated lattices up to isomorphism:
// bounded lattice orders by pruned pattern search, then commutative
// unit-top monoid tables by backtracking with monotonicity, partial
// associativity and adjoint-existence pruning; the adjoint arrow is derived,
// every candidate passes full validation, and members are deduplicated and
// ordered by a canonical byte form. A deliberately naive oracle re-derives
// the small sizes for cross-validation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rezlat/core.hpp"

namespace rezlat {

struct SizeOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

using OrderRel = std::vector<std::vector<bool>>;

inline constexpr int kMaxOrderSize = 7;      // bare bounded lattices
inline constexpr int kMaxResiduatedSize = 6; // full algebras

// Canonical element names for generated members: bottom "0", top "1",
// middles "a", "b", ... in index order.
inline std::vector<std::string> element_names(int k) {
  std::vector<std::string> names(k);
  names[0] = "0";
  names[k - 1] = "1";
  for (int i = 1; i + 1 < k; ++i) names[i] = std::string(1, char('a' + i - 1));
  return names;
}

// ---------------------------------------------------------------------------
// order utilities
// ---------------------------------------------------------------------------

namespace detail {

inline bool poset_ok(const OrderRel& r) {
  const int k = static_cast<int>(r.size());
  for (int x = 0; x < k; ++x) {
    if (!r[x][x]) return false;
    for (int y = 0; y < k; ++y) {
      if (x != y && r[x][y] && r[y][x]) return false;
      for (int z = 0; z < k; ++z)
        if (r[x][y] && r[y][z] && !r[x][z]) return false;
    }
  }
  return true;
}

inline bool lattice_ok(const OrderRel& r) {
  const int k = static_cast<int>(r.size());
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      bool has_glb = false, has_lub = false;
      for (int g = 0; g < k && !has_glb; ++g) {
        if (!r[g][x] || !r[g][y]) continue;
        bool greatest = true;
        for (int w = 0; w < k && greatest; ++w)
          if (r[w][x] && r[w][y] && !r[w][g]) greatest = false;
        has_glb = greatest;
      }
      for (int l = 0; l < k && !has_lub; ++l) {
        if (!r[x][l] || !r[y][l]) continue;
        bool least = true;
        for (int w = 0; w < k && least; ++w)
          if (r[x][w] && r[y][w] && !r[l][w]) least = false;
        has_lub = least;
      }
      if (!has_glb || !has_lub) return false;
    }
  return true;
}

// Global bottom/bounded check; returns (bot, top) or (-1, -1).
inline std::pair<int, int> bounds_of(const OrderRel& r) {
  const int k = static_cast<int>(r.size());
  int bot = -1, top = -1;
  for (int x = 0; x < k; ++x) {
    bool is_bot = true, is_top = true;
    for (int y = 0; y < k; ++y) {
      if (!r[x][y]) is_bot = false;
      if (!r[y][x]) is_top = false;
    }
    if (is_bot) bot = x;
    if (is_top) top = x;
  }
  return {bot, top};
}

inline std::vector<std::uint8_t> order_bytes(const OrderRel& r) {
  std::vector<std::uint8_t> enc;
  const int k = static_cast<int>(r.size());
  enc.reserve(k * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) enc.push_back(r[x][y] ? 1 : 0);
  return enc;
}

// Minimal encoding over permutations of the middle elements (bottom and
// top stay pinned at positions 0 and k-1).
inline std::vector<std::uint8_t> canonical_order_bytes(const OrderRel& r) {
  const int k = static_cast<int>(r.size());
  std::vector<int> mids;
  for (int i = 1; i + 1 < k; ++i) mids.push_back(i);
  std::vector<int> perm(mids);
  std::vector<std::uint8_t> best;
  do {
    std::vector<int> p(k);
    p[0] = 0;
    p[k - 1] = k - 1;
    for (size_t i = 0; i < mids.size(); ++i) p[mids[i]] = perm[i];
    std::vector<int> inv(k);
    for (int i = 0; i < k; ++i) inv[p[i]] = i;
    std::vector<std::uint8_t> enc;
    enc.reserve(k * k);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) enc.push_back(r[inv[x]][inv[y]] ? 1 : 0);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// All bounded lattice orders on k points up to order-isomorphism, each
// labeled with bottom at index 0 and top at index k-1, sorted by canonical
// encoding. Search: every comparability pattern over middle pairs.
inline std::vector<OrderRel> enumerate_bounded_lattices(int k) {
  if (k < 2 || k > kMaxOrderSize)
    throw SizeOutOfRange("bounded lattice enumeration supports sizes 2.." +
                         std::to_string(kMaxOrderSize));
  std::vector<int> mids;
  for (int i = 1; i + 1 < k; ++i) mids.push_back(i);
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < mids.size(); ++i)
    for (size_t j = i + 1; j < mids.size(); ++j)
      pairs.push_back({mids[i], mids[j]});

  std::map<std::vector<std::uint8_t>, OrderRel> seen;
  const long total = static_cast<long>(1);
  long patterns = 1;
  for (size_t i = 0; i < pairs.size(); ++i) patterns *= 3;
  (void)total;
  for (long code = 0; code < patterns; ++code) {
    OrderRel r(k, std::vector<bool>(k, false));
    for (int x = 0; x < k; ++x) {
      r[x][x] = true;
      r[0][x] = true;
      r[x][k - 1] = true;
    }
    long c = code;
    for (const auto& [x, y] : pairs) {
      int p = static_cast<int>(c % 3);
      c /= 3;
      if (p == 1) r[x][y] = true;
      else if (p == 2) r[y][x] = true;
    }
    if (!detail::poset_ok(r) || !detail::lattice_ok(r)) continue;
    auto canon = detail::canonical_order_bytes(r);
    seen.emplace(std::move(canon), std::move(r));
  }
  std::vector<OrderRel> out;
  out.reserve(seen.size());
  for (auto& [form, rel] : seen) out.push_back(std::move(rel));
  return out;
}

// Independent oracle: scans every one of the 2^(k*k) relation matrices
// (with cheap feasibility pruning), keeps bounded lattice posets, and
// counts isomorphism classes. Exists only to cross-check the pattern
// search above.
inline long naive_bounded_lattice_count(int k) {
  if (k < 2 || k > 5)
    throw SizeOutOfRange("naive order oracle supports sizes 2..5");
  const int kk = k * k;
  std::map<std::vector<std::uint8_t>, bool> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << kk); ++bits) {
    // reflexivity first: cheapest reject
    bool refl = true;
    for (int x = 0; x < k && refl; ++x)
      if (!((bits >> (x * k + x)) & 1)) refl = false;
    if (!refl) continue;
    OrderRel r(k, std::vector<bool>(k));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) r[x][y] = (bits >> (x * k + y)) & 1;
    if (!detail::poset_ok(r)) continue;
    auto [bot, top] = detail::bounds_of(r);
    if (bot < 0 || top < 0) continue;
    if (!detail::lattice_ok(r)) continue;
    // relabel to bot=0, top=k-1, then canonicalize over middle perms
    std::vector<int> p(k, -1);
    p[bot] = 0;
    p[top] = k - 1;
    int next = 1;
    for (int x = 0; x < k; ++x)
      if (p[x] < 0) p[x] = next++;
    OrderRel s(k, std::vector<bool>(k, false));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) s[p[x]][p[y]] = r[x][y];
    seen.emplace(detail::canonical_order_bytes(s), true);
  }
  return static_cast<long>(seen.size());
}

// ---------------------------------------------------------------------------
// canonical forms of validated algebras
// ---------------------------------------------------------------------------

// Total byte encoding of (size, leq, otimes) minimized over all relabelings
// that send bottom to 0 and top to size-1. Arrow, meet and join are all
// derivable, so they are excluded. Two validated algebras are isomorphic
// iff their forms are equal.
inline std::vector<std::uint8_t> canonical_form(const Lattice& L) {
  const int k = L.size;
  std::vector<int> mids;
  for (int i = 0; i < k; ++i)
    if (i != L.bot && i != L.top) mids.push_back(i);
  std::vector<int> target;
  for (int i = 1; i + 1 < k; ++i) target.push_back(i);

  std::vector<int> order(mids);
  std::sort(order.begin(), order.end());
  std::vector<std::uint8_t> best;
  do {
    // p[old index] = new index
    std::vector<int> p(k, -1);
    p[L.bot] = 0;
    p[L.top] = k - 1;
    for (size_t i = 0; i < order.size(); ++i) p[order[i]] = target[i];
    std::vector<int> inv(k);
    for (int i = 0; i < k; ++i) inv[p[i]] = i;
    std::vector<std::uint8_t> enc;
    enc.reserve(1 + 2 * k * k);
    enc.push_back(static_cast<std::uint8_t>(k));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        enc.push_back(L.le(inv[x], inv[y]) ? 1 : 0);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        enc.push_back(static_cast<std::uint8_t>(p[L.ot(inv[x], inv[y])]));
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool are_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size != b.size) return false;
  return canonical_form(a) == canonical_form(b);
}

// FNV-1a 64-bit digest, as 16 lowercase hex characters.
inline std::string digest_hex(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* hexd = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hexd[h & 0xf];
    h >>= 4;
  }
  return s;
}

inline std::string lattice_digest(const Lattice& L) {
  return digest_hex(canonical_form(L));
}

// Rebuild the member a canonical form encodes: decode order and otimes,
// derive the adjoint arrow, and validate. The result carries the standard
// generated names, so isomorphic inputs produce byte-identical members.
inline Lattice lattice_from_form(const std::vector<std::uint8_t>& form) {
  if (form.empty()) throw std::invalid_argument("empty canonical form");
  const int k = form[0];
  if (static_cast<int>(form.size()) != 1 + 2 * k * k)
    throw std::invalid_argument("canonical form has wrong length");
  size_t idx = 1;
  OrderRel leq(k, std::vector<bool>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) leq[x][y] = form[idx++] != 0;
  std::vector<std::vector<int>> ot(k, std::vector<int>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) ot[x][y] = form[idx++];
  std::vector<std::vector<int>> ar(k, std::vector<int>(k, -1));
  for (int x = 0; x < k; ++x)
    for (int z = 0; z < k; ++z) {
      for (int y = 0; y < k; ++y) {
        if (!leq[ot[x][y]][z]) continue;
        bool maximum = true;
        for (int w = 0; w < k && maximum; ++w)
          if (leq[ot[x][w]][z] && !leq[w][y]) maximum = false;
        if (maximum) {
          ar[x][z] = y;
          break;
        }
      }
      if (ar[x][z] < 0)
        throw std::invalid_argument("form does not encode a residuated table");
    }
  RawAlgebra raw;
  raw.size = k;
  raw.names = element_names(k);
  raw.otimes = std::move(ot);
  raw.arrow = std::move(ar);
  auto v = validate(raw);
  if (!v.ok())
    throw std::invalid_argument("form does not validate: " + v.error->message);
  return std::move(*v.lattice);
}

// ---------------------------------------------------------------------------
// residuated enumeration
// ---------------------------------------------------------------------------

namespace detail {

// Backtracking over commutative monoid tables for one fixed order.
// Constraints applied during search: unit row/column fixed to the top,
// bottom row/column fixed to bottom, cell values bounded by the meet,
// monotonicity in both arguments against every filled cell, partial
// associativity; at each leaf the adjoint is derived by maximum and the
// full adjunction bi-implication is verified before the candidate is
// validated end to end.
template <typename Sink>
inline void search_otimes(const OrderRel& leq, Sink&& emit) {
  const int k = static_cast<int>(leq.size());
  // meets of the order
  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int g = 0; g < k; ++g) {
        if (!leq[g][x] || !leq[g][y]) continue;
        bool greatest = true;
        for (int w = 0; w < k && greatest; ++w)
          if (leq[w][x] && leq[w][y] && !leq[w][g]) greatest = false;
        if (greatest) {
          meet[x][y] = g;
          break;
        }
      }

  std::vector<std::pair<int, int>> cells;
  for (int x = 1; x + 1 < k; ++x)
    for (int y = x; y + 1 < k; ++y) cells.push_back({x, y});

  std::vector<std::vector<int>> ot(k, std::vector<int>(k, -1));
  for (int x = 0; x < k; ++x) {
    ot[0][x] = ot[x][0] = 0;
    ot[k - 1][x] = ot[x][k - 1] = x;
  }
  std::vector<std::vector<int>> down(k);
  for (int x = 0; x < k; ++x)
    for (int z = 0; z < k; ++z)
      if (leq[z][x]) down[x].push_back(z);

  auto assoc_ok_partial = [&]() {
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        if (ot[x][y] < 0) continue;
        for (int z = 0; z < k; ++z) {
          if (ot[y][z] < 0) continue;
          int a1 = ot[ot[x][y]][z];
          int a2 = ot[x][ot[y][z]];
          if (a1 >= 0 && a2 >= 0 && a1 != a2) return false;
        }
      }
    return true;
  };

  auto mono_ok = [&](int x, int y, int v) {
    for (const auto& [p, q] : cells) {
      int w = ot[p][q];
      if (w < 0) continue;
      if (leq[p][x] && leq[q][y] && !leq[w][v]) return false;
      if (leq[x][p] && leq[y][q] && !leq[v][w]) return false;
      if (leq[q][x] && leq[p][y] && !leq[w][v]) return false;
      if (leq[x][q] && leq[y][p] && !leq[v][w]) return false;
    }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      if (!assoc_ok_partial()) return;
      std::vector<std::vector<int>> ar(k, std::vector<int>(k, -1));
      for (int x = 0; x < k; ++x)
        for (int z = 0; z < k; ++z) {
          int mx = -1;
          for (int y = 0; y < k; ++y) {
            if (!leq[ot[x][y]][z]) continue;
            bool maximum = true;
            for (int w = 0; w < k && maximum; ++w)
              if (leq[ot[x][w]][z] && !leq[w][y]) maximum = false;
            if (maximum) {
              mx = y;
              break;
            }
          }
          if (mx < 0) return;  // no adjoint at this cell
          ar[x][z] = mx;
        }
      // full adjunction bi-implication: maximum existence alone admits
      // tables whose membership set is not downward closed
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          for (int z = 0; z < k; ++z)
            if (leq[ot[x][y]][z] != leq[y][ar[x][z]]) return;
      emit(ot, ar);
      return;
    }
    auto [x, y] = cells[i];
    for (int v : down[meet[x][y]]) {
      if (!mono_ok(x, y, v)) continue;
      ot[x][y] = ot[y][x] = v;
      if (assoc_ok_partial()) rec(i + 1);
      ot[x][y] = ot[y][x] = -1;
    }
  };
  rec(0);
}

inline Lattice validated_member(int k, const std::vector<std::vector<int>>& ot,
                                const std::vector<std::vector<int>>& ar) {
  RawAlgebra raw;
  raw.size = k;
  raw.names = element_names(k);
  raw.otimes = ot;
  raw.arrow = ar;
  auto v = validate(raw);
  if (!v.ok())
    throw std::logic_error("enumeration produced an invalid candidate: " +
                           v.error->message);
  return std::move(*v.lattice);
}

}  // namespace detail

// All residuated lattices on k elements up to isomorphism, sorted by
// canonical form bytes. `jobs` > 1 distributes the per-order searches
// over worker threads; the sorted merge makes output schedule-independent.
inline std::vector<Lattice> enumerate_residuated(int k, int jobs = 1) {
  if (k < 2 || k > kMaxResiduatedSize)
    throw SizeOutOfRange("residuated enumeration supports sizes 2.." +
                         std::to_string(kMaxResiduatedSize));
  auto orders = enumerate_bounded_lattices(k);

  using Keyed = std::pair<std::vector<std::uint8_t>, Lattice>;
  auto run_order = [k](const OrderRel& leq) {
    std::vector<Keyed> found;
    detail::search_otimes(leq, [&](const std::vector<std::vector<int>>& ot,
                                   const std::vector<std::vector<int>>& ar) {
      Lattice L = detail::validated_member(k, ot, ar);
      found.emplace_back(canonical_form(L), std::move(L));
    });
    return found;
  };

  std::map<std::vector<std::uint8_t>, bool> seen;
  if (jobs <= 1) {
    for (const auto& leq : orders)
      for (auto& [form, L] : run_order(leq)) {
        (void)L;
        seen.emplace(std::move(form), true);
      }
  } else {
    std::vector<std::future<std::vector<Keyed>>> futs;
    for (const auto& leq : orders)
      futs.push_back(std::async(std::launch::async, run_order, leq));
    for (auto& fu : futs)
      for (auto& [form, L] : fu.get()) {
        (void)L;
        seen.emplace(std::move(form), true);
      }
  }
  std::vector<Lattice> out;
  out.reserve(seen.size());
  for (const auto& [form, unused] : seen) {
    (void)unused;
    out.push_back(lattice_from_form(form));
  }
  return out;
}

// Deliberately naive oracle for small sizes: every relation matrix that is
// a bounded lattice poset, crossed with every symmetric otimes table fixing
// only the unit row/column (cells range over ALL k values, no meet or
// monotonicity pruning); arrow derived by maximum; everything through full
// validation; deduplicated by canonical form.
inline std::vector<Lattice> naive_residuated(int k) {
  if (k < 2 || k > 4)
    throw SizeOutOfRange("naive residuated oracle supports sizes 2..4");
  const int kk = k * k;
  std::map<std::vector<std::uint8_t>, bool> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << kk); ++bits) {
    OrderRel r(k, std::vector<bool>(k));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) r[x][y] = (bits >> (x * k + y)) & 1;
    if (!detail::poset_ok(r)) continue;
    auto [bot, top] = detail::bounds_of(r);
    if (bot < 0 || top < 0) continue;
    if (!detail::lattice_ok(r)) continue;

    std::vector<int> free_elems;
    for (int x = 0; x < k; ++x)
      if (x != top) free_elems.push_back(x);
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < free_elems.size(); ++i)
      for (size_t j = i; j < free_elems.size(); ++j)
        cells.push_back({free_elems[i], free_elems[j]});

    long total = 1;
    for (size_t i = 0; i < cells.size(); ++i) total *= k;
    for (long code = 0; code < total; ++code) {
      std::vector<std::vector<int>> ot(k, std::vector<int>(k, -1));
      for (int x = 0; x < k; ++x) ot[top][x] = ot[x][top] = x;
      long c = code;
      for (const auto& [x, y] : cells) {
        int v = static_cast<int>(c % k);
        c /= k;
        ot[x][y] = ot[y][x] = v;
      }
      // derive arrow by maximum under r; reject if a cell has none
      std::vector<std::vector<int>> ar(k, std::vector<int>(k, -1));
      bool ok = true;
      for (int x = 0; x < k && ok; ++x)
        for (int z = 0; z < k && ok; ++z) {
          int mx = -1;
          for (int y = 0; y < k; ++y) {
            if (!r[ot[x][y]][z]) continue;
            bool maximum = true;
            for (int w = 0; w < k && maximum; ++w)
              if (r[ot[x][w]][z] && !r[w][y]) maximum = false;
            if (maximum) {
              mx = y;
              break;
            }
          }
          if (mx < 0) ok = false;
          else ar[x][z] = mx;
        }
      if (!ok) continue;
      RawAlgebra raw;
      raw.size = k;
      raw.names = element_names(k);
      raw.otimes = ot;
      raw.arrow = ar;
      auto v = validate(raw);
      if (!v.ok()) continue;
      seen.emplace(canonical_form(*v.lattice), true);
    }
  }
  std::vector<Lattice> out;
  out.reserve(seen.size());
  for (const auto& [form, unused] : seen) {
    (void)unused;
    out.push_back(lattice_from_form(form));
  }
  return out;
}

}  // namespace rezlat
