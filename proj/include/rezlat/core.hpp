#pragma once
// Finite residuated lattices: representation, validation from raw operation
// tables, derived operations (order, meet, join, negation, powers), a report
// over the standard equational identities, and structural classification.
//
// A lattice here is a finite algebra (L, meet, join, otimes, arrow, 0, 1)
// where (L, otimes, 1) is a commutative monoid whose unit is the top element
// and otimes/arrow form an adjoint pair:  x (*) y <= z  iff  y <= x -> z.
// Only the otimes and arrow tables are taken as input; the order is derived
// by  x <= y  iff  x -> y = 1, and everything else follows from it.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rezlat {

using Elem = int;

// Raw input: element names plus the two operation tables, before any
// validation. Meet, join and the order relation are derived later.
struct RawAlgebra {
  int size = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> otimes;
  std::vector<std::vector<Elem>> arrow;
};

enum class ValidationErrorKind {
  NoUnit,
  NotPartialOrder,
  NotLattice,
  NotBounded,
  NotCommutative,
  NotAssociative,
  ResiduationFails,
  OrderMismatch,
};

inline const char* to_string(ValidationErrorKind k) {
  switch (k) {
    case ValidationErrorKind::NoUnit: return "NoUnit";
    case ValidationErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ValidationErrorKind::NotLattice: return "NotLattice";
    case ValidationErrorKind::NotBounded: return "NotBounded";
    case ValidationErrorKind::NotCommutative: return "NotCommutative";
    case ValidationErrorKind::NotAssociative: return "NotAssociative";
    case ValidationErrorKind::ResiduationFails: return "ResiduationFails";
    case ValidationErrorKind::OrderMismatch: return "OrderMismatch";
  }
  return "?";
}

struct ValidationError {
  ValidationErrorKind kind{};
  std::vector<Elem> witness;  // offending element indices, scan-order first
  std::string message;
};

// A fully validated algebra. All tables are total and consistent.
struct Lattice {
  int size = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> otimes;
  std::vector<std::vector<Elem>> arrow;
  std::vector<std::vector<bool>> leq;   // derived order
  std::vector<std::vector<Elem>> meet;  // derived
  std::vector<std::vector<Elem>> join;  // derived
  Elem bot = 0;
  Elem top = 0;

  bool le(Elem x, Elem y) const { return leq[x][y]; }
  Elem ot(Elem x, Elem y) const { return otimes[x][y]; }
  Elem ar(Elem x, Elem y) const { return arrow[x][y]; }
  Elem mt(Elem x, Elem y) const { return meet[x][y]; }
  Elem jn(Elem x, Elem y) const { return join[x][y]; }
  Elem neg(Elem x) const { return arrow[x][bot]; }

  // n-th otimes-power of x (n >= 0; the 0th power is the unit).
  Elem power(Elem x, int n) const {
    Elem p = top;
    for (int i = 0; i < n; ++i) p = otimes[p][x];
    return p;
  }

  const std::string& name(Elem x) const { return names[x]; }

  std::optional<Elem> index_of(const std::string& nm) const {
    for (int i = 0; i < size; ++i)
      if (names[i] == nm) return i;
    return std::nullopt;
  }
};

// Either a validated lattice or the first validation error, never both.
struct ValidateResult {
  std::optional<Lattice> lattice;
  std::optional<ValidationError> error;
  bool ok() const { return lattice.has_value(); }
};

namespace detail {
inline std::string describe(const RawAlgebra& raw, const char* what,
                            const std::vector<Elem>& w) {
  std::string s = what;
  if (!w.empty()) {
    s += " at (";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += (w[i] >= 0 && w[i] < raw.size) ? raw.names[w[i]]
                                          : std::to_string(w[i]);
    }
    s += ")";
  }
  return s;
}
}  // namespace detail

// Validates raw tables: locates the monoid unit, derives the order from
// arrow, then checks partial order, lattice structure, bounds (with the
// unit as greatest element), commutativity, associativity, and finally the
// full adjunction bi-implication. Witnesses are the first offending tuple
// in ascending row-major scan order.
inline ValidateResult validate(const RawAlgebra& raw) {
  const int k = raw.size;
  auto fail = [&](ValidationErrorKind kind, std::vector<Elem> w,
                  const char* what) {
    return ValidateResult{
        std::nullopt,
        ValidationError{kind, w, detail::describe(raw, what, w)}};
  };

  if (k < 2)
    return fail(ValidationErrorKind::NotBounded, {},
                "carrier needs at least two elements (distinct 0 and 1)");

  // Unit: u with u (*) x = x (*) u = x for all x.
  Elem unit = -1;
  for (Elem u = 0; u < k && unit < 0; ++u) {
    bool is_unit = true;
    for (Elem x = 0; x < k; ++x)
      if (raw.otimes[u][x] != x || raw.otimes[x][u] != x) {
        is_unit = false;
        break;
      }
    if (is_unit) unit = u;
  }
  if (unit < 0)
    return fail(ValidationErrorKind::NoUnit, {},
                "no element is a two-sided otimes unit");

  // Derived order: x <= y iff x -> y = unit.
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) leq[x][y] = (raw.arrow[x][y] == unit);

  for (Elem x = 0; x < k; ++x)
    if (!leq[x][x])
      return fail(ValidationErrorKind::NotPartialOrder, {x},
                  "derived order is not reflexive");
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      if (x != y && leq[x][y] && leq[y][x])
        return fail(ValidationErrorKind::NotPartialOrder, {x, y},
                    "derived order is not antisymmetric");
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      for (Elem z = 0; z < k; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z])
          return fail(ValidationErrorKind::NotPartialOrder, {x, y, z},
                      "derived order is not transitive");

  // Lattice: every pair needs a greatest lower and least upper bound.
  std::vector<std::vector<Elem>> meet(k, std::vector<Elem>(k, -1));
  std::vector<std::vector<Elem>> join(k, std::vector<Elem>(k, -1));
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) {
      for (Elem g = 0; g < k; ++g) {
        if (!leq[g][x] || !leq[g][y]) continue;
        bool greatest = true;
        for (Elem w = 0; w < k; ++w)
          if (leq[w][x] && leq[w][y] && !leq[w][g]) {
            greatest = false;
            break;
          }
        if (greatest) {
          meet[x][y] = g;
          break;
        }
      }
      if (meet[x][y] < 0)
        return fail(ValidationErrorKind::NotLattice, {x, y},
                    "pair has no greatest lower bound");
      for (Elem l = 0; l < k; ++l) {
        if (!leq[x][l] || !leq[y][l]) continue;
        bool least = true;
        for (Elem w = 0; w < k; ++w)
          if (leq[x][w] && leq[y][w] && !leq[l][w]) {
            least = false;
            break;
          }
        if (least) {
          join[x][y] = l;
          break;
        }
      }
      if (join[x][y] < 0)
        return fail(ValidationErrorKind::NotLattice, {x, y},
                    "pair has no least upper bound");
    }

  // Bounds: a global bottom, and the unit must be the global top.
  Elem bot = -1;
  for (Elem b = 0; b < k && bot < 0; ++b) {
    bool global = true;
    for (Elem x = 0; x < k; ++x)
      if (!leq[b][x]) {
        global = false;
        break;
      }
    if (global) bot = b;
  }
  if (bot < 0)
    return fail(ValidationErrorKind::NotBounded, {},
                "derived order has no bottom element");
  for (Elem x = 0; x < k; ++x)
    if (!leq[x][unit])
      return fail(ValidationErrorKind::NotBounded, {x},
                  "otimes unit is not the greatest element");

  // Monoid laws.
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      if (raw.otimes[x][y] != raw.otimes[y][x])
        return fail(ValidationErrorKind::NotCommutative, {x, y},
                    "otimes is not commutative");
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      for (Elem z = 0; z < k; ++z)
        if (raw.otimes[raw.otimes[x][y]][z] !=
            raw.otimes[x][raw.otimes[y][z]])
          return fail(ValidationErrorKind::NotAssociative, {x, y, z},
                      "otimes is not associative");

  // Adjunction, both directions:  x (*) y <= z  iff  y <= x -> z.
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      for (Elem z = 0; z < k; ++z)
        if (leq[raw.otimes[x][y]][z] != leq[y][raw.arrow[x][z]])
          return fail(ValidationErrorKind::ResiduationFails, {x, y, z},
                      "otimes/arrow adjunction fails");

  Lattice L;
  L.size = k;
  L.names = raw.names;
  L.otimes = raw.otimes;
  L.arrow = raw.arrow;
  L.leq = std::move(leq);
  L.meet = std::move(meet);
  L.join = std::move(join);
  L.bot = bot;
  L.top = unit;
  return ValidateResult{std::move(L), std::nullopt};
}

// ---------------------------------------------------------------------------
// Equational identity report
// ---------------------------------------------------------------------------

// One of the 17 identity/inequality families every validated lattice
// satisfies; `witness` carries the first offending tuple if one exists.
struct IdentityResult {
  std::string id;  // "P1" .. "P17"
  bool holds = true;
  std::vector<Elem> witness;
};

// Evaluates all 17 families by exhaustive quantification. Families P10 and
// P13 quantify exponents up to the carrier size (powers are non-increasing,
// so they stabilize within that many steps).
inline std::array<IdentityResult, 17> identity_report(const Lattice& L) {
  std::array<IdentityResult, 17> out;
  for (int i = 0; i < 17; ++i) out[i].id = "P" + std::to_string(i + 1);
  auto hit = [&](int item, std::vector<Elem> w) {
    auto& r = out[item - 1];
    if (r.holds) {
      r.holds = false;
      r.witness = std::move(w);
    }
  };
  const int k = L.size;
  const Elem t = L.top, b = L.bot;

  for (Elem x = 0; x < k; ++x) {
    if (L.ar(t, x) != x) hit(6, {x});
    if (L.ar(x, x) != t) hit(6, {x});
    if (L.ar(x, t) != t) hit(6, {x});
    if (!L.le(x, L.neg(L.neg(x)))) hit(6, {x});
    if (L.neg(L.neg(L.neg(x))) != L.neg(x)) hit(6, {x});
    if (L.ot(x, L.neg(x)) != b) hit(7, {x});
    for (Elem y = 0; y < k; ++y) {
      if (L.le(x, y) != (L.ar(x, y) == t)) hit(1, {x, y});
      if (!L.le(L.ot(x, y), L.mt(x, y))) hit(1, {x, y});
      if (!L.le(x, L.ar(y, L.ot(x, y)))) hit(5, {x, y});
      if (!L.le(L.ot(x, L.ar(x, y)), y)) hit(5, {x, y});
      if (L.ar(x, L.ar(y, x)) != t) hit(6, {x, y});  // x <= y -> x
      if (L.ot(x, y) == b && !L.le(x, L.neg(y))) hit(7, {x, y});
      if (L.le(x, L.neg(y)) && L.ot(x, y) != b) hit(7, {x, y});
      if (L.le(x, y) && !L.le(L.neg(y), L.neg(x))) hit(8, {x, y});
      if (L.neg(L.ot(x, y)) != L.ar(x, L.neg(y))) hit(9, {x, y});
      if (L.jn(x, y) == t) {
        if (L.ot(x, y) != L.mt(x, y)) hit(10, {x, y});
        for (int e = 1; e <= k; ++e)
          if (L.jn(L.power(x, e), L.power(y, e)) != t) hit(10, {x, y, e});
      }
      for (int m = 1; m <= k; ++m)
        for (int e = 1; e <= k; ++e)
          if (!L.le(L.power(L.jn(x, y), m * e),
                    L.jn(L.power(x, e), L.power(y, m))))
            hit(13, {x, y, m, e});
      if (!L.le(L.jn(x, y), L.mt(L.ar(L.ar(x, y), y), L.ar(L.ar(y, x), x))))
        hit(14, {x, y});
      if (L.ar(L.ar(L.ar(x, y), y), y) != L.ar(x, y)) hit(17, {x, y});
      for (Elem z = 0; z < k; ++z) {
        if (L.ar(x, L.ar(y, z)) != L.ar(L.ot(x, y), z)) hit(2, {x, y, z});
        if (L.ar(x, L.ar(y, z)) != L.ar(y, L.ar(x, z))) hit(3, {x, y, z});
        if (L.le(x, y)) {
          if (!L.le(L.ar(y, z), L.ar(x, z)) || !L.le(L.ar(z, x), L.ar(z, y)))
            hit(4, {x, y, z});
          if (!L.le(L.ot(x, z), L.ot(y, z))) hit(8, {x, y, z});
          if (!L.le(L.ar(z, x), L.ar(z, y))) hit(8, {x, y, z});
          if (!L.le(L.ar(y, z), L.ar(x, z))) hit(8, {x, y, z});
        }
        if (L.ot(x, L.jn(y, z)) != L.jn(L.ot(x, y), L.ot(x, z)))
          hit(11, {x, y, z});
        if (L.ar(L.jn(x, y), z) != L.mt(L.ar(x, z), L.ar(y, z)))
          hit(12, {x, y, z});
        if (!L.le(L.jn(L.ar(x, z), L.ar(y, z)), L.ar(L.mt(x, y), z)))
          hit(12, {x, y, z});
        if (!L.le(L.ot(L.jn(x, y), L.jn(x, z)), L.jn(x, L.ot(y, z))))
          hit(13, {x, y, z});
        if (!L.le(L.ar(x, y), L.ar(L.ar(y, z), L.ar(x, z))))
          hit(15, {x, y, z});
        if (!L.le(L.ar(y, x), L.ar(L.ar(z, y), L.ar(z, x))))
          hit(16, {x, y, z});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural classification
// ---------------------------------------------------------------------------

struct LatticeClassification {
  bool prelinear = false;       // (x->y) v (y->x) = 1
  bool divisible = false;       // x ^ y = x (*) (x->y)
  bool involutive = false;      // neg(neg(x)) = x
  bool heyting = false;         // otimes = meet
  bool mv = false;              // prelinear + divisible + involutive
  bool locally_finite = false;  // every x != 1 has a power equal to 0
  bool totally_ordered = false;
  // First (x,y) violating the law, ascending scan, when not satisfied.
  std::optional<std::pair<Elem, Elem>> prelinearity_witness;
  std::optional<std::pair<Elem, Elem>> divisibility_witness;
};

inline LatticeClassification classify(const Lattice& L) {
  LatticeClassification c;
  const int k = L.size;
  c.prelinear = true;
  c.divisible = true;
  c.involutive = true;
  c.heyting = true;
  c.locally_finite = true;
  c.totally_ordered = true;
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) {
      if (L.jn(L.ar(x, y), L.ar(y, x)) != L.top && !c.prelinearity_witness) {
        c.prelinear = false;
        c.prelinearity_witness = {x, y};
      }
      if (L.ot(x, L.ar(x, y)) != L.mt(x, y) && !c.divisibility_witness) {
        c.divisible = false;
        c.divisibility_witness = {x, y};
      }
      if (L.ot(x, y) != L.mt(x, y)) c.heyting = false;
      if (!L.le(x, y) && !L.le(y, x)) c.totally_ordered = false;
    }
  for (Elem x = 0; x < k; ++x) {
    if (L.neg(L.neg(x)) != x) c.involutive = false;
    if (x != L.top) {
      bool vanishes = false;
      for (int n = 1; n <= k && !vanishes; ++n)
        if (L.power(x, n) == L.bot) vanishes = true;
      if (!vanishes) c.locally_finite = false;
    }
  }
  c.mv = c.prelinear && c.divisible && c.involutive;
  return c;
}

}  // namespace rezlat
