#pragma once
// Filters of a finite residuated lattice: recognition, the equivalent
// deductive-system view, generated filters, exhaustive enumeration,
// maximality (three agreeing characterizations), prime and boolean kinds,
// the radical, and quotient construction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rezlat/core.hpp"

namespace rezlat {

// Subsets of the carrier are bitmasks; bit i is element i.
using Mask = std::uint32_t;

// Thrown when an operation defined only for proper filters receives the
// whole carrier (or a set containing bottom where that is ruled out).
struct NotProperError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when provably-equivalent characterizations of one property
// disagree; this always indicates an implementation bug, never data.
struct CharacterizationMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

inline bool contains(Mask m, Elem x) { return (m >> x) & 1u; }
inline Mask with(Mask m, Elem x) { return m | (Mask{1} << x); }
inline Mask carrier_mask(const Lattice& L) {
  return (L.size >= 32) ? ~Mask{0} : ((Mask{1} << L.size) - 1);
}
inline int cardinality(Mask m) { return __builtin_popcount(m); }

inline std::vector<Elem> to_elements(Mask m, const Lattice& L) {
  std::vector<Elem> v;
  for (Elem x = 0; x < L.size; ++x)
    if (contains(m, x)) v.push_back(x);
  return v;
}

inline Mask from_elements(const std::vector<Elem>& v) {
  Mask m = 0;
  for (Elem x : v) m = with(m, x);
  return m;
}

// Parses "1,c,d" (or whitespace-separated) element names into a mask.
inline std::optional<Mask> mask_from_names(const Lattice& L,
                                           const std::string& csv) {
  Mask m = 0;
  std::string tok;
  auto flush = [&]() -> bool {
    if (tok.empty()) return true;
    auto i = L.index_of(tok);
    if (!i) return false;
    m = with(m, *i);
    tok.clear();
    return true;
  };
  for (char ch : csv) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!flush()) return std::nullopt;
    } else {
      tok += ch;
    }
  }
  if (!flush()) return std::nullopt;
  return m;
}

inline std::string set_to_string(const Lattice& L, Mask m) {
  std::string s = "{";
  bool first = true;
  for (Elem x = 0; x < L.size; ++x)
    if (contains(m, x)) {
      if (!first) s += ",";
      s += L.name(x);
      first = false;
    }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Filter recognition and enumeration
// ---------------------------------------------------------------------------

// Nonempty, closed under otimes, and upward closed.
inline bool is_filter(const Lattice& L, Mask f) {
  if (f == 0) return false;
  for (Elem x = 0; x < L.size; ++x) {
    if (!contains(f, x)) continue;
    for (Elem y = 0; y < L.size; ++y) {
      if (contains(f, y) && !contains(f, L.ot(x, y))) return false;
      if (L.le(x, y) && !contains(f, y)) return false;
    }
  }
  return true;
}

// Deductive system: contains 1 and is closed under detachment
// (x in S and x -> y in S imply y in S). Coincides with is_filter.
inline bool is_deductive_system(const Lattice& L, Mask s) {
  if (!contains(s, L.top)) return false;
  for (Elem x = 0; x < L.size; ++x) {
    if (!contains(s, x)) continue;
    for (Elem y = 0; y < L.size; ++y)
      if (contains(s, L.ar(x, y)) && !contains(s, y)) return false;
  }
  return true;
}

// Least filter containing the given set (fixpoint of closing under otimes
// and upward closure, seeded with the unit).
inline Mask generated_filter(const Lattice& L, Mask seed) {
  Mask f = with(seed, L.top);
  for (;;) {
    Mask grown = f;
    for (Elem x = 0; x < L.size; ++x) {
      if (!contains(grown, x)) continue;
      for (Elem y = 0; y < L.size; ++y) {
        if (contains(grown, y)) grown = with(grown, L.ot(x, y));
        if (L.le(x, y)) grown = with(grown, y);
      }
    }
    if (grown == f) return f;
    f = grown;
  }
}

// All filters, ordered by cardinality and then lexicographically by the
// ascending element-index sequence. Exhaustive subset scan (desk scale).
inline std::vector<Mask> all_filters(const Lattice& L) {
  if (L.size > 24)
    throw std::length_error("filter enumeration is exhaustive over subsets; "
                            "carrier too large");
  std::vector<Mask> out;
  const Mask full = carrier_mask(L);
  for (Mask m = 0; m <= full; ++m)
    if (is_filter(L, m)) out.push_back(m);
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) {
    int ca = cardinality(a), cb = cardinality(b);
    if (ca != cb) return ca < cb;
    return to_elements(a, L) < to_elements(b, L);
  });
  return out;
}

inline bool is_proper(const Lattice& L, Mask f) { return !contains(f, L.bot); }

inline std::vector<Mask> proper_filters(const Lattice& L) {
  std::vector<Mask> out;
  for (Mask f : all_filters(L))
    if (is_proper(L, f)) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Maximality: three characterizations, required to agree
// ---------------------------------------------------------------------------

namespace detail {

inline bool maximal_by_inclusion(Mask f, const std::vector<Mask>& proper) {
  for (Mask g : proper)
    if (f != g && (f & g) == f) return false;
  return true;
}

// x outside F  iff  some power of x has its negation inside F.
inline bool maximal_by_negated_powers(const Lattice& L, Mask f) {
  for (Elem x = 0; x < L.size; ++x) {
    bool neg_power_in = false;
    for (int n = 1; n <= L.size && !neg_power_in; ++n)
      if (contains(f, L.neg(L.power(x, n)))) neg_power_in = true;
    if (contains(f, x) == neg_power_in) return false;
  }
  return true;
}

// every x outside F is annihilated by some member against some power.
inline bool maximal_by_annihilation(const Lattice& L, Mask f) {
  for (Elem x = 0; x < L.size; ++x) {
    if (contains(f, x)) continue;
    bool annihilated = false;
    for (int n = 1; n <= L.size && !annihilated; ++n) {
      Elem xn = L.power(x, n);
      for (Elem g = 0; g < L.size && !annihilated; ++g)
        if (contains(f, g) && L.ot(g, xn) == L.bot) annihilated = true;
    }
    if (!annihilated) return false;
  }
  return true;
}

}  // namespace detail

// Decides maximality of a proper filter by all three characterizations;
// they are provably equivalent, so disagreement is a hard error.
inline bool is_maximal(const Lattice& L, Mask f) {
  if (!is_proper(L, f)) throw NotProperError("maximality needs a proper filter");
  auto proper = proper_filters(L);
  bool r1 = detail::maximal_by_inclusion(f, proper);
  bool r2 = detail::maximal_by_negated_powers(L, f);
  bool r3 = detail::maximal_by_annihilation(L, f);
  if (r1 != r2 || r2 != r3)
    throw CharacterizationMismatch("maximality characterizations disagree on " +
                                   set_to_string(L, f));
  return r1;
}

inline std::vector<Mask> maximal_filters(const Lattice& L) {
  std::vector<Mask> out;
  for (Mask f : proper_filters(L))
    if (is_maximal(L, f)) out.push_back(f);
  return out;
}

// For each x outside a maximal filter: the first (n, f) in ascending
// (n, then f) order with f (*) x^n = 0.
struct AnnihilationWitness {
  Elem x;
  int n;
  Elem f;
};

inline std::vector<AnnihilationWitness> maximality_evidence(const Lattice& L,
                                                            Mask f) {
  std::vector<AnnihilationWitness> out;
  for (Elem x = 0; x < L.size; ++x) {
    if (contains(f, x)) continue;
    bool found = false;
    for (int n = 1; n <= L.size && !found; ++n) {
      Elem xn = L.power(x, n);
      for (Elem g = 0; g < L.size && !found; ++g)
        if (contains(f, g) && L.ot(g, xn) == L.bot) {
          out.push_back({x, n, g});
          found = true;
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prime and boolean kinds (defined for proper filters)
// ---------------------------------------------------------------------------

namespace detail {
inline void require_proper(const Lattice& L, Mask f, const char* what) {
  if (!is_proper(L, f))
    throw NotProperError(std::string(what) + " is defined for proper filters");
}
}  // namespace detail

// For every pair, one of the two implications lies in F.
inline bool is_prime(const Lattice& L, Mask f) {
  detail::require_proper(L, f, "prime");
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (!contains(f, L.ar(x, y)) && !contains(f, L.ar(y, x))) return false;
  return true;
}

// A join in F forces one of its operands into F.
inline bool is_prime_second_kind(const Lattice& L, Mask f) {
  detail::require_proper(L, f, "prime (second kind)");
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (contains(f, L.jn(x, y)) && !contains(f, x) && !contains(f, y))
        return false;
  return true;
}

// The join of the two implications always lies in F.
inline bool is_prime_third_kind(const Lattice& L, Mask f) {
  detail::require_proper(L, f, "prime (third kind)");
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (!contains(f, L.jn(L.ar(x, y), L.ar(y, x)))) return false;
  return true;
}

// x v neg(x) in F for every x.
inline bool is_boolean_kind(const Lattice& L, Mask f) {
  detail::require_proper(L, f, "boolean kind");
  for (Elem x = 0; x < L.size; ++x)
    if (!contains(f, L.jn(x, L.neg(x)))) return false;
  return true;
}

// x in F or neg(x) in F for every x.
inline bool is_boolean_second_kind(const Lattice& L, Mask f) {
  detail::require_proper(L, f, "boolean (second kind)");
  for (Elem x = 0; x < L.size; ++x)
    if (!contains(f, x) && !contains(f, L.neg(x))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Radical and semi-maximality
// ---------------------------------------------------------------------------

// Intersection of all maximal filters containing F (F must be proper).
inline Mask radical(const Lattice& L, Mask f) {
  detail::require_proper(L, f, "radical");
  Mask r = carrier_mask(L);
  for (Mask m : maximal_filters(L))
    if ((f & m) == f) r &= m;
  return r;
}

inline bool is_semi_maximal(const Lattice& L, Mask f) {
  return radical(L, f) == f;
}

// ---------------------------------------------------------------------------
// Congruence and quotient
// ---------------------------------------------------------------------------

// x and y are identified by F when both implications lie in F.
inline bool congruent(const Lattice& L, Mask f, Elem x, Elem y) {
  return contains(f, L.ar(x, y)) && contains(f, L.ar(y, x));
}

// Checks that the relation induced by F is compatible with all four
// operations (always true for a filter; exposed for direct verification).
inline bool congruence_well_defined(const Lattice& L, Mask f) {
  const int k = L.size;
  for (Elem x = 0; x < k; ++x)
    for (Elem x2 = 0; x2 < k; ++x2) {
      if (!congruent(L, f, x, x2)) continue;
      for (Elem y = 0; y < k; ++y)
        for (Elem y2 = 0; y2 < k; ++y2) {
          if (!congruent(L, f, y, y2)) continue;
          if (!congruent(L, f, L.ot(x, y), L.ot(x2, y2))) return false;
          if (!congruent(L, f, L.ar(x, y), L.ar(x2, y2))) return false;
          if (!congruent(L, f, L.mt(x, y), L.mt(x2, y2))) return false;
          if (!congruent(L, f, L.jn(x, y), L.jn(x2, y2))) return false;
        }
    }
  return true;
}

struct QuotientResult {
  Lattice algebra;                    // the quotient (degenerate if trivial)
  std::vector<std::vector<Elem>> classes;  // ascending least representatives
  std::vector<int> class_of;          // element -> class index
  bool trivial = false;               // one class only; algebra not validated
};

// Quotient by the congruence of a filter. Class representatives are least
// element indices; class names list the members, e.g. "{c,d,1}".
inline QuotientResult quotient(const Lattice& L, Mask f) {
  const int k = L.size;
  QuotientResult q;
  q.class_of.assign(k, -1);
  for (Elem x = 0; x < k; ++x) {
    if (q.class_of[x] >= 0) continue;
    int id = static_cast<int>(q.classes.size());
    q.classes.push_back({});
    for (Elem y = 0; y < k; ++y)
      if (congruent(L, f, x, y)) {
        q.class_of[y] = id;
        q.classes.back().push_back(y);
      }
  }
  const int m = static_cast<int>(q.classes.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& cls : q.classes) names.push_back(set_to_string(L, from_elements(cls)));

  if (m == 1) {
    q.trivial = true;
    Lattice one;
    one.size = 1;
    one.names = names;
    one.otimes = {{0}};
    one.arrow = {{0}};
    one.leq = {{true}};
    one.meet = {{0}};
    one.join = {{0}};
    one.bot = one.top = 0;
    q.algebra = std::move(one);
    return q;
  }

  RawAlgebra raw;
  raw.size = m;
  raw.names = names;
  raw.otimes.assign(m, std::vector<Elem>(m));
  raw.arrow.assign(m, std::vector<Elem>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elem ri = q.classes[i][0], rj = q.classes[j][0];
      raw.otimes[i][j] = q.class_of[L.ot(ri, rj)];
      raw.arrow[i][j] = q.class_of[L.ar(ri, rj)];
    }
  auto v = validate(raw);
  if (!v.ok())
    throw CharacterizationMismatch("quotient by " + set_to_string(L, f) +
                                   " failed validation: " + v.error->message);
  q.algebra = std::move(*v.lattice);
  return q;
}

}  // namespace rezlat
