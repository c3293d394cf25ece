#pragma once
// The n-indexed filter classes (implicative, positive implicative, normal,
// fantastic, obstinate) with every equivalent characterization implemented
// independently, plus the matching lattice-level classes. The *_checked
// entry points evaluate all characterizations of a class and throw
// CharacterizationMismatch if they ever disagree — that would be a bug in
// this library, never a property of the input algebra.
//
// All predicates take n >= 1. Powers are non-increasing in the exponent, so
// exponent searches are bounded by the carrier size.

#include <string>
#include <vector>

#include "rezlat/core.hpp"
#include "rezlat/filters.hpp"

namespace rezlat {

// ---------------------------------------------------------------------------
// implicative filters
// ---------------------------------------------------------------------------

// x^n -> (y -> z) in F and x^n -> y in F  imply  x^n -> z in F.
inline bool is_implicative(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    Elem xn = L.power(x, n);
    for (Elem y = 0; y < L.size; ++y)
      for (Elem z = 0; z < L.size; ++z)
        if (contains(f, L.ar(xn, L.ar(y, z))) && contains(f, L.ar(xn, y)) &&
            !contains(f, L.ar(xn, z)))
          return false;
  }
  return true;
}

// x^n -> x^{2n} in F.
inline bool is_implicative_r2(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x)
    if (!contains(f, L.ar(L.power(x, n), L.power(x, 2 * n)))) return false;
  return true;
}

// x^{n+1} -> y in F  implies  x^n -> y in F.
inline bool is_implicative_r3(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (contains(f, L.ar(L.power(x, n + 1), y)) &&
          !contains(f, L.ar(L.power(x, n), y)))
        return false;
  return true;
}

// x^n -> (y -> z) in F  implies  (x^n -> y) -> (x^n -> z) in F.
inline bool is_implicative_r4(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    Elem xn = L.power(x, n);
    for (Elem y = 0; y < L.size; ++y)
      for (Elem z = 0; z < L.size; ++z)
        if (contains(f, L.ar(xn, L.ar(y, z))) &&
            !contains(f, L.ar(L.ar(xn, y), L.ar(xn, z))))
          return false;
  }
  return true;
}

inline bool implicative_checked(const Lattice& L, Mask f, int n) {
  bool a = is_implicative(L, f, n);
  bool b = is_implicative_r2(L, f, n);
  bool c = is_implicative_r3(L, f, n);
  bool d = is_implicative_r4(L, f, n);
  if (a != b || b != c || c != d)
    throw CharacterizationMismatch(
        "implicative characterizations disagree on " + set_to_string(L, f) +
        " at n=" + std::to_string(n));
  return a;
}

// Section of F at a: { b : a^n -> b in F }. For an implicative filter this
// is itself a filter, for every a.
inline Mask section(const Lattice& L, Mask f, Elem a, int n) {
  Mask s = 0;
  Elem an = L.power(a, n);
  for (Elem b = 0; b < L.size; ++b)
    if (contains(f, L.ar(an, b))) s = with(s, b);
  return s;
}

// ---------------------------------------------------------------------------
// positive implicative filters
// ---------------------------------------------------------------------------

// x -> ((y^n -> z) -> y) in F and x in F  imply  y in F.
inline bool is_positive_implicative(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y) {
      Elem yn = L.power(y, n);
      for (Elem z = 0; z < L.size; ++z)
        if (contains(f, L.ar(x, L.ar(L.ar(yn, z), y))) && contains(f, x) &&
            !contains(f, y))
          return false;
    }
  return true;
}

// (x^n -> y) -> x in F  implies  x in F.
inline bool is_positive_implicative_r2(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    Elem xn = L.power(x, n);
    for (Elem y = 0; y < L.size; ++y)
      if (contains(f, L.ar(L.ar(xn, y), x)) && !contains(f, x)) return false;
  }
  return true;
}

// neg(x^n) -> x in F  implies  x in F.
inline bool is_positive_implicative_r3(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x)
    if (contains(f, L.ar(L.neg(L.power(x, n)), x)) && !contains(f, x))
      return false;
  return true;
}

// The defining rule with the inner variable pinned to bottom:
// x -> ((y^n -> 0) -> y) in F and x in F  imply  y in F. The quantified
// variable there is inert, so this reading is equivalent; both are
// evaluated and cross-checked.
inline bool is_positive_implicative_z0(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    if (!contains(f, x)) continue;
    for (Elem y = 0; y < L.size; ++y)
      if (contains(f, L.ar(x, L.ar(L.neg(L.power(y, n)), y))) &&
          !contains(f, y))
        return false;
  }
  return true;
}

// x v neg(x^n) in F for every x (the boolean form; equivalent).
inline bool is_boolean_filter(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x)
    if (!contains(f, L.jn(x, L.neg(L.power(x, n))))) return false;
  return true;
}

inline bool positive_implicative_checked(const Lattice& L, Mask f, int n) {
  bool a = is_positive_implicative(L, f, n);
  bool a0 = is_positive_implicative_z0(L, f, n);
  bool b = is_positive_implicative_r2(L, f, n);
  bool c = is_positive_implicative_r3(L, f, n);
  bool d = is_boolean_filter(L, f, n);
  if (a != a0 || a != b || b != c || c != d)
    throw CharacterizationMismatch(
        "positive-implicative characterizations disagree on " +
        set_to_string(L, f) + " at n=" + std::to_string(n));
  return a;
}

// ---------------------------------------------------------------------------
// normal filters
// ---------------------------------------------------------------------------

// (y^n -> x) -> x in F  implies  (x -> y) -> y in F.
inline bool is_normal(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (contains(f, L.ar(L.ar(L.power(y, n), x), x)) &&
          !contains(f, L.ar(L.ar(x, y), y)))
        return false;
  return true;
}

// z -> ((y^n -> x) -> x) in F and z in F  imply  (x -> y) -> y in F.
inline bool is_normal_r2(const Lattice& L, Mask f, int n) {
  for (Elem z = 0; z < L.size; ++z) {
    if (!contains(f, z)) continue;
    for (Elem x = 0; x < L.size; ++x)
      for (Elem y = 0; y < L.size; ++y)
        if (contains(f, L.ar(z, L.ar(L.ar(L.power(y, n), x), x))) &&
            !contains(f, L.ar(L.ar(x, y), y)))
          return false;
  }
  return true;
}

inline bool normal_checked(const Lattice& L, Mask f, int n) {
  bool a = is_normal(L, f, n);
  bool b = is_normal_r2(L, f, n);
  if (a != b)
    throw CharacterizationMismatch("normal characterizations disagree on " +
                                   set_to_string(L, f) +
                                   " at n=" + std::to_string(n));
  return a;
}

// ---------------------------------------------------------------------------
// fantastic filters
// ---------------------------------------------------------------------------

// y -> x in F  implies  ((x^n -> y) -> y) -> x in F.
inline bool is_fantastic(const Lattice& L, Mask f, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    Elem xn = L.power(x, n);
    for (Elem y = 0; y < L.size; ++y)
      if (contains(f, L.ar(y, x)) &&
          !contains(f, L.ar(L.ar(L.ar(xn, y), y), x)))
        return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// obstinate filters (proper by definition)
// ---------------------------------------------------------------------------

// Proper, and any two elements outside F imply each other's n-th powers:
// x, y notin F  imply  x^n -> y in F (and symmetrically).
inline bool is_obstinate(const Lattice& L, Mask f, int n) {
  if (!is_proper(L, f))
    throw NotProperError("obstinacy is defined for proper filters");
  for (Elem x = 0; x < L.size; ++x) {
    if (contains(f, x)) continue;
    for (Elem y = 0; y < L.size; ++y) {
      if (contains(f, y)) continue;
      if (!contains(f, L.ar(L.power(x, n), y))) return false;
    }
  }
  return true;
}

// Proper, and every x outside F has some power of neg(x^n) inside F.
inline bool is_obstinate_r2(const Lattice& L, Mask f, int n) {
  if (!is_proper(L, f))
    throw NotProperError("obstinacy is defined for proper filters");
  for (Elem x = 0; x < L.size; ++x) {
    if (contains(f, x)) continue;
    Elem nx = L.neg(L.power(x, n));
    bool found = false;
    for (int m = 1; m <= L.size && !found; ++m)
      if (contains(f, L.power(nx, m))) found = true;
    if (!found) return false;
  }
  return true;
}

inline bool obstinate_checked(const Lattice& L, Mask f, int n) {
  bool a = is_obstinate(L, f, n);
  bool b = is_obstinate_r2(L, f, n);
  if (a != b)
    throw CharacterizationMismatch("obstinate characterizations disagree on " +
                                   set_to_string(L, f) +
                                   " at n=" + std::to_string(n));
  return a;
}

// ---------------------------------------------------------------------------
// lattice-level classes (properties of the whole algebra at a given n)
// ---------------------------------------------------------------------------

// x^{n+1} = x^n for all x.
inline bool is_implicative_rl(const Lattice& L, int n) {
  for (Elem x = 0; x < L.size; ++x)
    if (L.power(x, n + 1) != L.power(x, n)) return false;
  return true;
}

// x^n = x^{2n} for all x (equivalent).
inline bool is_implicative_rl_r2(const Lattice& L, int n) {
  for (Elem x = 0; x < L.size; ++x)
    if (L.power(x, n) != L.power(x, 2 * n)) return false;
  return true;
}

inline bool implicative_rl_checked(const Lattice& L, int n) {
  bool a = is_implicative_rl(L, n);
  bool b = is_implicative_rl_r2(L, n);
  if (a != b)
    throw CharacterizationMismatch(
        "lattice-level implicative characterizations disagree at n=" +
        std::to_string(n));
  return a;
}

// neg(y^n) -> y = y for all y.
inline bool is_positive_implicative_rl(const Lattice& L, int n) {
  for (Elem y = 0; y < L.size; ++y)
    if (L.ar(L.neg(L.power(y, n)), y) != y) return false;
  return true;
}

// neg(y^n) v y = 1 for all y (equivalent).
inline bool is_positive_implicative_rl_r2(const Lattice& L, int n) {
  for (Elem y = 0; y < L.size; ++y)
    if (L.jn(L.neg(L.power(y, n)), y) != L.top) return false;
  return true;
}

inline bool positive_implicative_rl_checked(const Lattice& L, int n) {
  bool a = is_positive_implicative_rl(L, n);
  bool b = is_positive_implicative_rl_r2(L, n);
  if (a != b)
    throw CharacterizationMismatch(
        "lattice-level positive-implicative characterizations disagree at n=" +
        std::to_string(n));
  return a;
}

// y -> x = ((x^n -> y) -> y) -> x for all x, y.
inline bool is_fantastic_rl(const Lattice& L, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    Elem xn = L.power(x, n);
    for (Elem y = 0; y < L.size; ++y)
      if (L.ar(y, x) != L.ar(L.ar(L.ar(xn, y), y), x)) return false;
  }
  return true;
}

// (x^n -> y) -> y <= (y -> x) -> x for all x, y (equivalent).
inline bool is_fantastic_rl_r2(const Lattice& L, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    Elem xn = L.power(x, n);
    for (Elem y = 0; y < L.size; ++y)
      if (!L.le(L.ar(L.ar(xn, y), y), L.ar(L.ar(y, x), x))) return false;
  }
  return true;
}

inline bool fantastic_rl_checked(const Lattice& L, int n) {
  bool a = is_fantastic_rl(L, n);
  bool b = is_fantastic_rl_r2(L, n);
  if (a != b)
    throw CharacterizationMismatch(
        "lattice-level fantastic characterizations disagree at n=" +
        std::to_string(n));
  return a;
}

// x v neg(x^n) = 1 for all x.
inline bool is_boolean_rl(const Lattice& L, int n) {
  for (Elem x = 0; x < L.size; ++x)
    if (L.jn(x, L.neg(L.power(x, n))) != L.top) return false;
  return true;
}

// x^n -> y = 1 for all x, y below the top.
inline bool is_obstinate_rl(const Lattice& L, int n) {
  for (Elem x = 0; x < L.size; ++x) {
    if (x == L.top) continue;
    for (Elem y = 0; y < L.size; ++y) {
      if (y == L.top) continue;
      if (L.ar(L.power(x, n), y) != L.top) return false;
    }
  }
  return true;
}

// Every element below the top has a vanishing power.
inline bool is_locally_finite(const Lattice& L) {
  for (Elem x = 0; x < L.size; ++x) {
    if (x == L.top) continue;
    bool vanishes = false;
    for (int n = 1; n <= L.size && !vanishes; ++n)
      if (L.power(x, n) == L.bot) vanishes = true;
    if (!vanishes) return false;
  }
  return true;
}

inline bool is_totally_ordered(const Lattice& L) {
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (!L.le(x, y) && !L.le(y, x)) return false;
  return true;
}

inline bool is_prelinear(const Lattice& L) {
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (L.jn(L.ar(x, y), L.ar(y, x)) != L.top) return false;
  return true;
}

// ---------------------------------------------------------------------------
// per-filter classification report
// ---------------------------------------------------------------------------

// For x outside an obstinate filter: the least m with (neg(x^n))^m in F.
struct ObstinateWitness {
  Elem x;
  int m;
};

inline std::vector<ObstinateWitness> obstinate_witnesses(const Lattice& L,
                                                         Mask f, int n) {
  std::vector<ObstinateWitness> out;
  for (Elem x = 0; x < L.size; ++x) {
    if (contains(f, x)) continue;
    Elem nx = L.neg(L.power(x, n));
    int found = -1;
    for (int m = 1; m <= L.size && found < 0; ++m)
      if (contains(f, L.power(nx, m))) found = m;
    out.push_back({x, found});
  }
  return out;
}

// Class flags for one filter at one n; every flag comes from the cross-
// checked multi-route evaluation where more than one route exists.
struct FilterClassRow {
  int n = 1;
  bool implicative = false;
  bool positive_implicative = false;
  bool boolean_filter = false;  // coincides with positive_implicative
  bool normal = false;
  bool fantastic = false;
  bool obstinate = false;  // false for improper filters by definition
  std::vector<ObstinateWitness> obstinate_evidence;  // when obstinate
};

// Full per-n truth matrix for one filter, plus the n-independent kinds.
struct FilterClassification {
  bool proper = false;
  int exponent_bound = 0;  // bound used for every m/n witness search
  std::vector<FilterClassRow> rows;  // n = 1..n_max
  // n-independent kinds; meaningful only when proper.
  bool maximal = false;
  bool semi_maximal = false;
  bool prime = false;
  bool prime_second_kind = false;
  bool prime_third_kind = false;
  bool boolean_kind = false;
  bool boolean_second_kind = false;
};

inline FilterClassification classify_filter(const Lattice& L, Mask f,
                                            int n_max) {
  if (n_max <= 0) n_max = L.size;
  FilterClassification c;
  c.proper = is_proper(L, f);
  c.exponent_bound = L.size;
  for (int n = 1; n <= n_max; ++n) {
    FilterClassRow r;
    r.n = n;
    r.implicative = implicative_checked(L, f, n);
    r.positive_implicative = positive_implicative_checked(L, f, n);
    r.boolean_filter = is_boolean_filter(L, f, n);
    r.normal = normal_checked(L, f, n);
    r.fantastic = is_fantastic(L, f, n);
    r.obstinate = c.proper ? obstinate_checked(L, f, n) : false;
    if (r.obstinate) r.obstinate_evidence = obstinate_witnesses(L, f, n);
    c.rows.push_back(std::move(r));
  }
  if (c.proper) {
    c.maximal = is_maximal(L, f);
    c.semi_maximal = is_semi_maximal(L, f);
    c.prime = is_prime(L, f);
    c.prime_second_kind = is_prime_second_kind(L, f);
    c.prime_third_kind = is_prime_third_kind(L, f);
    c.boolean_kind = is_boolean_kind(L, f);
    c.boolean_second_kind = is_boolean_second_kind(L, f);
  }
  return c;
}

// Lattice-level flags at one n.
struct LatticeNClassification {
  int n = 1;
  bool implicative_rl = false;
  bool positive_implicative_rl = false;
  bool fantastic_rl = false;
  bool boolean_rl = false;
  bool obstinate_rl = false;
};

inline LatticeNClassification classify_lattice_n(const Lattice& L, int n) {
  LatticeNClassification c;
  c.n = n;
  c.implicative_rl = implicative_rl_checked(L, n);
  c.positive_implicative_rl = positive_implicative_rl_checked(L, n);
  c.fantastic_rl = fantastic_rl_checked(L, n);
  c.boolean_rl = is_boolean_rl(L, n);
  c.obstinate_rl = is_obstinate_rl(L, n);
  return c;
}

}  // namespace rezlat
