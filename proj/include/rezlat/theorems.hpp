#pragma once
// The proposition suite: every checkable claim about filters, n-fold filter
// classes, radicals, quotients and lattice-level classes is registered here
// under a frozen string id and evaluated by exhaustive quantification over a
// lattice (or corpus). Failures are reported as data with replayable
// witnesses, never thrown. The implication diagrams between filter classes
// (and between lattice-level classes) are synthesized from a fixed proved
// edge list plus corpus counterexample search.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rezlat/core.hpp"
#include "rezlat/filters.hpp"
#include "rezlat/nfold.hpp"

namespace rezlat {

enum class StatementKind {
  Equivalence,
  Implication,
  Extension,
  QuotientCorrespondence,
  LatticeLevel,
};

inline const char* to_string(StatementKind k) {
  switch (k) {
    case StatementKind::Equivalence: return "equivalence";
    case StatementKind::Implication: return "implication";
    case StatementKind::Extension: return "extension";
    case StatementKind::QuotientCorrespondence: return "quotient-correspondence";
    case StatementKind::LatticeLevel: return "lattice-level";
  }
  return "?";
}

enum class CheckScope { PerFilter, PerLattice, PerPair };

inline const char* to_string(CheckScope s) {
  switch (s) {
    case CheckScope::PerFilter: return "per-filter";
    case CheckScope::PerLattice: return "per-lattice";
    case CheckScope::PerPair: return "per-pair";
  }
  return "?";
}

// Outcome of one registered check over one lattice or a whole corpus.
// A witness string names the lattice, the filter(s), n, and the elements
// involved — enough to re-evaluate the claim standalone.
struct TheoremCheck {
  std::string id;
  StatementKind kind{};
  CheckScope scope{};
  std::string statement;
  bool passed = true;
  long cases = 0;           // instances evaluated
  long failure_count = 0;   // total failures (witnesses below are capped)
  std::vector<std::string> witnesses;
};

inline constexpr int kMaxStoredWitnesses = 8;

// ---------------------------------------------------------------------------
// Evaluation context: one lattice with everything precomputed
// ---------------------------------------------------------------------------

struct SuiteContext {
  const Lattice& L;
  std::string label;
  int n_max;
  std::vector<Mask> filters;
  std::vector<Mask> proper;
  std::vector<Mask> maximal;
  Mask one = 0;        // {top}
  bool prelinear_ = false;
  bool chain = false;  // totally ordered
  std::map<Mask, QuotientResult> quotients;

  SuiteContext(const Lattice& lat, std::string lbl, int nmax)
      : L(lat), label(std::move(lbl)), n_max(nmax > 0 ? nmax : lat.size) {
    filters = all_filters(L);
    for (Mask f : filters)
      if (is_proper(L, f)) proper.push_back(f);
    maximal = maximal_filters(L);
    one = with(Mask{0}, L.top);
    prelinear_ = is_prelinear(L);
    chain = is_totally_ordered(L);
    for (Mask f : filters) quotients.emplace(f, quotient(L, f));
  }

  const QuotientResult& quot(Mask f) const { return quotients.at(f); }
  bool is_max(Mask f) const {
    return std::find(maximal.begin(), maximal.end(), f) != maximal.end();
  }
};

namespace detail {

inline void record(TheoremCheck& out, bool ok, const std::string& witness) {
  ++out.cases;
  if (ok) return;
  out.passed = false;
  ++out.failure_count;
  if (static_cast<int>(out.witnesses.size()) < kMaxStoredWitnesses)
    out.witnesses.push_back(witness);
}

inline std::string wit(const SuiteContext& c, Mask f, int n,
                       const std::string& extra = "") {
  std::string s = "lattice=" + c.label + " filter=" + set_to_string(c.L, f);
  if (n > 0) s += " n=" + std::to_string(n);
  if (!extra.empty()) s += " " + extra;
  return s;
}

inline std::string witn(const SuiteContext& c, int n,
                        const std::string& extra = "") {
  std::string s = "lattice=" + c.label + " n=" + std::to_string(n);
  if (!extra.empty()) s += " " + extra;
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using CheckFn = std::function<void(const SuiteContext&, TheoremCheck&)>;

struct CheckDef {
  const char* id;
  StatementKind kind;
  CheckScope scope;
  const char* statement;
  CheckFn fn;
};

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> r;
    auto add = [&r](const char* id, StatementKind k, CheckScope s,
                    const char* st, CheckFn fn) {
      r.push_back(CheckDef{id, k, s, st, std::move(fn)});
    };
    using detail::record;
    using detail::wit;
    using detail::witn;

    // ----- order, adjunction and arithmetic identities -------------------
    add("prop_21_identities", StatementKind::LatticeLevel,
        CheckScope::PerLattice,
        "the 17 equational identity families hold (exponents bounded by "
        "carrier size)",
        [](const SuiteContext& c, TheoremCheck& out) {
          auto rep = identity_report(c.L);
          for (const auto& item : rep) {
            std::string w = "lattice=" + c.label + " item=" + item.id + " at (";
            for (size_t i = 0; i < item.witness.size(); ++i) {
              if (i) w += ",";
              Elem e = item.witness[i];
              w += (e >= 0 && e < c.L.size) ? c.L.name(e) : std::to_string(e);
            }
            w += ")";
            record(out, item.holds, w);
          }
        });

    add("fact_1_deductive", StatementKind::Equivalence, CheckScope::PerLattice,
        "a subset is a filter iff it is a deductive system (contains 1, "
        "closed under detachment)",
        [](const SuiteContext& c, TheoremCheck& out) {
          const Mask full = carrier_mask(c.L);
          for (Mask m = 0; m <= full; ++m)
            record(out, is_filter(c.L, m) == is_deductive_system(c.L, m),
                   wit(c, m, 0));
        });

    add("def_26_quotient", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "the relation x~y iff x->y,y->x in F is a congruence and the "
        "quotient validates as a residuated lattice",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.filters) {
            bool ok = congruence_well_defined(c.L, f);
            std::string extra;
            if (ok) {
              try {
                const auto& q = c.quot(f);
                (void)q;
              } catch (const std::exception& e) {
                ok = false;
                extra = e.what();
              }
            }
            record(out, ok, wit(c, f, 0, extra));
          }
        });

    // ----- prime/boolean kinds and maximality -----------------------------
    add("rem_28_i", StatementKind::Implication, CheckScope::PerFilter,
        "a prime proper filter (pairwise-implication form) is prime in the "
        "join-splitting form",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper)
            record(out,
                   !is_prime(c.L, f) || is_prime_second_kind(c.L, f),
                   wit(c, f, 0));
        });

    add("rem_28_i_conv", StatementKind::Equivalence, CheckScope::PerFilter,
        "on prelinear algebras the two prime forms coincide",
        [](const SuiteContext& c, TheoremCheck& out) {
          if (!c.prelinear_) return;  // scoped to prelinear algebras
          for (Mask f : c.proper)
            record(out, is_prime(c.L, f) == is_prime_second_kind(c.L, f),
                   wit(c, f, 0));
        });

    add("rem_28_ii", StatementKind::Implication, CheckScope::PerFilter,
        "a prime proper filter contains every join of opposed implications",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper)
            record(out, !is_prime(c.L, f) || is_prime_third_kind(c.L, f),
                   wit(c, f, 0));
        });

    add("rem_28_ii_conv", StatementKind::Implication, CheckScope::PerFilter,
        "on prelinear algebras a filter containing all implication joins is "
        "prime in the pairwise form (refuted: prelinearity makes the premise "
        "vacuous; counterexamples are expected and reported)",
        [](const SuiteContext& c, TheoremCheck& out) {
          if (!c.prelinear_) return;
          for (Mask f : c.proper)
            record(out, !is_prime_third_kind(c.L, f) || is_prime(c.L, f),
                   wit(c, f, 0));
        });

    add("rem_28_iii", StatementKind::Implication, CheckScope::PerFilter,
        "a proper filter with the membership-or-negation property contains "
        "every x v neg(x)",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper)
            record(out,
                   !is_boolean_second_kind(c.L, f) || is_boolean_kind(c.L, f),
                   wit(c, f, 0));
        });

    add("rem_28_iv", StatementKind::Implication, CheckScope::PerFilter,
        "every maximal filter is prime in the join-splitting form",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper)
            record(out, !c.is_max(f) || is_prime_second_kind(c.L, f),
                   wit(c, f, 0));
        });

    add("rem_28_v", StatementKind::Implication, CheckScope::PerFilter,
        "on prelinear algebras every maximal filter is prime in the "
        "pairwise form",
        [](const SuiteContext& c, TheoremCheck& out) {
          if (!c.prelinear_) return;
          for (Mask f : c.proper)
            record(out, !c.is_max(f) || is_prime(c.L, f), wit(c, f, 0));
        });

    add("prop_29_routes", StatementKind::Equivalence, CheckScope::PerFilter,
        "maximality by inclusion, by negated-power membership, and by "
        "annihilation agree",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper) {
            bool r1 = detail::maximal_by_inclusion(f, c.proper);
            bool r2 = detail::maximal_by_negated_powers(c.L, f);
            bool r3 = detail::maximal_by_annihilation(c.L, f);
            record(out, r1 == r2 && r2 == r3,
                   wit(c, f, 0,
                       "incl=" + std::to_string(r1) +
                           " negpow=" + std::to_string(r2) +
                           " annih=" + std::to_string(r3)));
          }
        });

    add("lem_210_locfin", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "a proper filter is maximal iff its quotient is locally finite",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper)
            record(out,
                   c.is_max(f) == is_locally_finite(c.quot(f).algebra),
                   wit(c, f, 0));
        });

    // ----- radical / semi-maximal -----------------------------------------
    add("prop_rad_extensive", StatementKind::Implication,
        CheckScope::PerFilter,
        "every proper filter is contained in its radical",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper) {
            Mask r = radical(c.L, f);
            record(out, (f & r) == f, wit(c, f, 0, "radical=" +
                                           set_to_string(c.L, r)));
          }
        });

    add("prop_rad_idempotent", StatementKind::Implication,
        CheckScope::PerFilter, "the radical operation is idempotent",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper) {
            Mask r = radical(c.L, f);
            record(out, !is_proper(c.L, r) || radical(c.L, r) == r,
                   wit(c, f, 0));
          }
        });

    add("rem_35_semimax", StatementKind::Implication, CheckScope::PerFilter,
        "every maximal filter is semi-maximal",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.proper)
            record(out, !c.is_max(f) || is_semi_maximal(c.L, f),
                   wit(c, f, 0));
        });

    // ----- implicative filters --------------------------------------------
    add("lem_lemob", StatementKind::Equivalence, CheckScope::PerFilter,
        "F is n-implicative iff every section {b : a^n -> b in F} is a "
        "filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters) {
              bool lhs = is_implicative(c.L, f, n);
              bool rhs = true;
              Elem bad_a = -1;
              for (Elem a = 0; a < c.L.size && rhs; ++a)
                if (!is_filter(c.L, section(c.L, f, a, n))) {
                  rhs = false;
                  bad_a = a;
                }
              record(out, lhs == rhs,
                     wit(c, f, n,
                         bad_a >= 0 ? "a=" + c.L.name(bad_a) : ""));
            }
        });

    add("prop_ch111", StatementKind::Equivalence, CheckScope::PerFilter,
        "the n-implicative rule is equivalent to containing every "
        "x^n -> x^{2n}",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_implicative(c.L, f, n) ==
                         is_implicative_r2(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_ch112", StatementKind::Equivalence, CheckScope::PerFilter,
        "the n-implicative rule is equivalent to exponent descent "
        "(x^{n+1} -> y in F implies x^n -> y in F)",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_implicative(c.L, f, n) ==
                         is_implicative_r3(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_ch113", StatementKind::Equivalence, CheckScope::PerFilter,
        "the n-implicative rule is equivalent to its internalized form "
        "(x^n -> (y -> z) in F implies (x^n -> y) -> (x^n -> z) in F)",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_implicative(c.L, f, n) ==
                         is_implicative_r4(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_ch1_equiv", StatementKind::Equivalence, CheckScope::PerFilter,
        "all four n-implicative characterizations agree",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters) {
              bool a = is_implicative(c.L, f, n);
              bool b = is_implicative_r2(c.L, f, n);
              bool d = is_implicative_r3(c.L, f, n);
              bool e = is_implicative_r4(c.L, f, n);
              record(out, a == b && b == d && d == e, wit(c, f, n));
            }
        });

    add("prop_ch2_monotone", StatementKind::Implication, CheckScope::PerFilter,
        "n-implicative implies (n+1)-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n < c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     !is_implicative(c.L, f, n) ||
                         is_implicative(c.L, f, n + 1),
                     wit(c, f, n));
        });

    add("prop_ch11_subsets", StatementKind::Implication,
        CheckScope::PerLattice,
        "any subset containing 1 and closed under the n-implicative rule is "
        "a filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          const Mask full = carrier_mask(c.L);
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask m = 0; m <= full; ++m) {
              if (!contains(m, c.L.top)) continue;
              bool closed = true;
              for (Elem x = 0; x < c.L.size && closed; ++x) {
                Elem xn = c.L.power(x, n);
                for (Elem y = 0; y < c.L.size && closed; ++y)
                  for (Elem z = 0; z < c.L.size && closed; ++z)
                    if (contains(m, c.L.ar(xn, c.L.ar(y, z))) &&
                        contains(m, c.L.ar(xn, y)) &&
                        !contains(m, c.L.ar(xn, z)))
                      closed = false;
              }
              if (!closed) continue;
              record(out, is_filter(c.L, m), wit(c, m, n));
            }
        });

    add("cor_ch3", StatementKind::Implication, CheckScope::PerLattice,
        "on an n-implicative algebra every filter is n-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            if (!is_implicative_rl(c.L, n)) continue;
            for (Mask f : c.filters)
              record(out, is_implicative(c.L, f, n), wit(c, f, n));
          }
        });

    add("thm_ch4_extension", StatementKind::Extension, CheckScope::PerPair,
        "n-implicative transfers to every larger filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f1 : c.filters) {
              if (!is_implicative(c.L, f1, n)) continue;
              for (Mask f2 : c.filters) {
                if ((f1 & f2) != f1) continue;
                record(out, is_implicative(c.L, f2, n),
                       wit(c, f1, n, "extends-to=" + set_to_string(c.L, f2)));
              }
            }
        });

    add("prop_ch5_equiv", StatementKind::Equivalence, CheckScope::PerLattice,
        "the algebra is n-implicative iff every filter is, iff {1} is, iff "
        "x^n = x^{2n} everywhere",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            bool a = is_implicative_rl(c.L, n);
            bool b = true;
            for (Mask f : c.filters)
              if (!is_implicative(c.L, f, n)) {
                b = false;
                break;
              }
            bool d = is_implicative(c.L, c.one, n);
            bool e = is_implicative_rl_r2(c.L, n);
            record(out, a == b && b == d && d == e, witn(c, n));
          }
        });

    add("cor_ch6_quotient", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "F is n-implicative iff the quotient by F is an n-implicative "
        "algebra",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_implicative(c.L, f, n) ==
                         is_implicative_rl(c.quot(f).algebra, n),
                     wit(c, f, n));
        });

    add("cor_ch7_heyting", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "F is 1-implicative iff the quotient by F has idempotent product "
        "(otimes = meet)",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (Mask f : c.filters) {
            const Lattice& q = c.quot(f).algebra;
            bool heyting = true;
            for (Elem x = 0; x < q.size && heyting; ++x)
              for (Elem y = 0; y < q.size && heyting; ++y)
                if (q.ot(x, y) != q.mt(x, y)) heyting = false;
            record(out, is_implicative(c.L, f, 1) == heyting, wit(c, f, 1));
          }
        });

    // ----- positive implicative / boolean filters -------------------------
    add("prop_propo1_subsets", StatementKind::Implication,
        CheckScope::PerLattice,
        "any subset containing 1 and closed under the n-positive-implicative "
        "rule is a filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          const Mask full = carrier_mask(c.L);
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask m = 0; m <= full; ++m) {
              if (!contains(m, c.L.top)) continue;
              bool closed = true;
              for (Elem x = 0; x < c.L.size && closed; ++x) {
                if (!contains(m, x)) continue;
                for (Elem y = 0; y < c.L.size && closed; ++y) {
                  if (contains(m, y)) continue;
                  Elem yn = c.L.power(y, n);
                  for (Elem z = 0; z < c.L.size && closed; ++z)
                    if (contains(m, c.L.ar(x, c.L.ar(c.L.ar(yn, z), y))))
                      closed = false;
                }
              }
              if (!closed) continue;
              record(out, is_filter(c.L, m), wit(c, m, n));
            }
        });

    add("prop_propo_equiv", StatementKind::Equivalence, CheckScope::PerFilter,
        "the n-positive-implicative characterizations (definition, pinned "
        "variable, self-reference, negated-power) agree",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters) {
              bool a = is_positive_implicative(c.L, f, n);
              bool a0 = is_positive_implicative_z0(c.L, f, n);
              bool b = is_positive_implicative_r2(c.L, f, n);
              bool d = is_positive_implicative_r3(c.L, f, n);
              record(out, a == a0 && a == b && b == d, wit(c, f, n));
            }
        });

    add("cor_lien11", StatementKind::Equivalence, CheckScope::PerFilter,
        "n-positive-implicative coincides with the n-boolean condition "
        "(x v neg(x^n) in F)",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_positive_implicative(c.L, f, n) ==
                         is_boolean_filter(c.L, f, n),
                     wit(c, f, n));
        });

    add("thm_b1_extension", StatementKind::Extension, CheckScope::PerPair,
        "n-positive-implicative transfers to every larger filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f1 : c.filters) {
              if (!is_positive_implicative(c.L, f1, n)) continue;
              for (Mask f2 : c.filters) {
                if ((f1 & f2) != f1) continue;
                record(out, is_positive_implicative(c.L, f2, n),
                       wit(c, f1, n, "extends-to=" + set_to_string(c.L, f2)));
              }
            }
        });

    add("thm_lien1", StatementKind::Implication, CheckScope::PerFilter,
        "every n-positive-implicative filter is n-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     !is_positive_implicative(c.L, f, n) ||
                         is_implicative(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_propo15_monotone", StatementKind::Implication,
        CheckScope::PerFilter,
        "n-positive-implicative implies (n+1)-positive-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n < c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     !is_positive_implicative(c.L, f, n) ||
                         is_positive_implicative(c.L, f, n + 1),
                     wit(c, f, n));
        });

    add("rem_pi_rl_monotone", StatementKind::LatticeLevel,
        CheckScope::PerLattice,
        "an n-positive-implicative algebra is (n+1)-positive-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n < c.n_max; ++n)
            record(out,
                   !is_positive_implicative_rl(c.L, n) ||
                       is_positive_implicative_rl(c.L, n + 1),
                   witn(c, n));
        });

    add("prop_propoo", StatementKind::Implication, CheckScope::PerLattice,
        "on an n-positive-implicative algebra every filter is "
        "n-positive-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            if (!is_positive_implicative_rl(c.L, n)) continue;
            for (Mask f : c.filters)
              record(out, is_positive_implicative(c.L, f, n), wit(c, f, n));
          }
        });

    add("prop_prch_equiv", StatementKind::Equivalence, CheckScope::PerLattice,
        "the algebra is n-positive-implicative iff every filter is, iff {1} "
        "is",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            bool a = is_positive_implicative_rl(c.L, n);
            bool b = true;
            for (Mask f : c.filters)
              if (!is_positive_implicative(c.L, f, n)) {
                b = false;
                break;
              }
            bool d = is_positive_implicative(c.L, c.one, n);
            record(out, a == b && b == d, witn(c, n));
          }
        });

    add("prop_cor15", StatementKind::LatticeLevel, CheckScope::PerLattice,
        "an n-positive-implicative algebra is n-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            record(out,
                   !is_positive_implicative_rl(c.L, n) ||
                       is_implicative_rl(c.L, n),
                   witn(c, n));
        });

    add("cor_prch34", StatementKind::Equivalence, CheckScope::PerLattice,
        "the two n-positive-implicative algebra forms (arrow form and join "
        "form) agree",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            record(out,
                   is_positive_implicative_rl(c.L, n) ==
                       is_positive_implicative_rl_r2(c.L, n),
                   witn(c, n));
        });

    add("prop_crch0", StatementKind::Implication, CheckScope::PerFilter,
        "on a totally ordered algebra, every proper n-positive-implicative "
        "filter is maximal with locally finite quotient",
        [](const SuiteContext& c, TheoremCheck& out) {
          if (!c.chain) return;
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper) {
              if (!is_positive_implicative(c.L, f, n)) continue;
              record(out,
                     c.is_max(f) && is_locally_finite(c.quot(f).algebra),
                     wit(c, f, n));
            }
        });

    add("cor_crch", StatementKind::LatticeLevel, CheckScope::PerLattice,
        "a totally ordered algebra whose {1} is n-positive-implicative is "
        "locally finite",
        [](const SuiteContext& c, TheoremCheck& out) {
          if (!c.chain) return;
          for (int n = 1; n <= c.n_max; ++n) {
            if (is_positive_implicative(c.L, c.one, n))
              record(out, is_locally_finite(c.L), witn(c, n, "via {1}"));
            if (is_positive_implicative_rl(c.L, n))
              record(out, is_locally_finite(c.L), witn(c, n, "via algebra"));
          }
        });

    add("prop_prcha_quotient", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "F is n-positive-implicative iff the quotient by F is an "
        "n-positive-implicative algebra",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_positive_implicative(c.L, f, n) ==
                         is_positive_implicative_rl(c.quot(f).algebra, n),
                     wit(c, f, n));
        });

    add("prop_lien12", StatementKind::Equivalence, CheckScope::PerFilter,
        "the n-boolean filters are exactly the n-positive-implicative "
        "filters",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_boolean_filter(c.L, f, n) ==
                         is_positive_implicative(c.L, f, n),
                     wit(c, f, n));
        });

    add("rem_lien16", StatementKind::LatticeLevel, CheckScope::PerLattice,
        "the algebra is n-boolean iff {1} is an n-boolean filter iff the "
        "algebra is n-positive-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            bool a = is_boolean_rl(c.L, n);
            bool b = is_boolean_filter(c.L, c.one, n);
            bool d = is_positive_implicative_rl(c.L, n);
            record(out, a == b && b == d, witn(c, n));
          }
        });

    // ----- normal filters --------------------------------------------------
    add("prop_prochr_equiv", StatementKind::Equivalence, CheckScope::PerFilter,
        "the two n-normal characterizations agree",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out, is_normal(c.L, f, n) == is_normal_r2(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_propo4", StatementKind::Implication, CheckScope::PerFilter,
        "every n-positive-implicative filter is n-normal",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     !is_positive_implicative(c.L, f, n) ||
                         is_normal(c.L, f, n),
                     wit(c, f, n));
        });

    // ----- fantastic filters -----------------------------------------------
    add("prop_lp", StatementKind::Implication, CheckScope::PerFilter,
        "every n-positive-implicative filter is n-fantastic",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     !is_positive_implicative(c.L, f, n) ||
                         is_fantastic(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_lpp", StatementKind::Implication, CheckScope::PerFilter,
        "every n-fantastic filter is n-normal",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out, !is_fantastic(c.L, f, n) || is_normal(c.L, f, n),
                     wit(c, f, n));
        });

    add("lem_l1_pointwise", StatementKind::LatticeLevel,
        CheckScope::PerLattice,
        "pointwise: (x^n -> x^{2n}) (*) (x^{2n} -> y) <= x^n -> y",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Elem x = 0; x < c.L.size; ++x) {
              Elem xn = c.L.power(x, n), x2n = c.L.power(x, 2 * n);
              for (Elem y = 0; y < c.L.size; ++y)
                record(out,
                       c.L.le(c.L.ot(c.L.ar(xn, x2n), c.L.ar(x2n, y)),
                              c.L.ar(xn, y)),
                       witn(c, n,
                            "x=" + c.L.name(x) + " y=" + c.L.name(y)));
            }
        });

    add("prop_l3", StatementKind::Implication, CheckScope::PerFilter,
        "an n-fantastic and n-implicative filter is "
        "n-positive-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     !(is_fantastic(c.L, f, n) && is_implicative(c.L, f, n)) ||
                         is_positive_implicative(c.L, f, n),
                     wit(c, f, n));
        });

    add("thm_l4_equiv", StatementKind::Equivalence, CheckScope::PerFilter,
        "n-positive-implicative is exactly n-fantastic plus n-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_positive_implicative(c.L, f, n) ==
                         (is_fantastic(c.L, f, n) &&
                          is_implicative(c.L, f, n)),
                     wit(c, f, n));
        });

    add("prop_l2_fant_rl", StatementKind::Equivalence, CheckScope::PerLattice,
        "the two n-fantastic algebra forms (equation and dual inequality) "
        "agree",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            record(out,
                   is_fantastic_rl(c.L, n) == is_fantastic_rl_r2(c.L, n),
                   witn(c, n));
        });

    add("prop_prch7_equiv", StatementKind::Equivalence,
        CheckScope::PerLattice,
        "the algebra is n-fantastic iff every filter is, iff {1} is",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            bool a = is_fantastic_rl(c.L, n);
            bool b = true;
            for (Mask f : c.filters)
              if (!is_fantastic(c.L, f, n)) {
                b = false;
                break;
              }
            bool d = is_fantastic(c.L, c.one, n);
            record(out, a == b && b == d, witn(c, n));
          }
        });

    add("cor_l90", StatementKind::LatticeLevel, CheckScope::PerLattice,
        "n-positive-implicative algebra = n-fantastic + n-implicative "
        "algebra",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            record(out,
                   is_positive_implicative_rl(c.L, n) ==
                       (is_fantastic_rl(c.L, n) && is_implicative_rl(c.L, n)),
                   witn(c, n));
        });

    add("cor_cor1_quotient", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "F is n-fantastic iff the quotient by F is an n-fantastic algebra",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.filters)
              record(out,
                     is_fantastic(c.L, f, n) ==
                         is_fantastic_rl(c.quot(f).algebra, n),
                     wit(c, f, n));
        });

    add("thm_f2_extension", StatementKind::Extension, CheckScope::PerPair,
        "n-fantastic transfers to every larger filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f1 : c.filters) {
              if (!is_fantastic(c.L, f1, n)) continue;
              for (Mask f2 : c.filters) {
                if ((f1 & f2) != f1) continue;
                record(out, is_fantastic(c.L, f2, n),
                       wit(c, f1, n, "extends-to=" + set_to_string(c.L, f2)));
              }
            }
        });

    // ----- obstinate filters -----------------------------------------------
    add("prop_propob1_routes", StatementKind::Equivalence,
        CheckScope::PerFilter,
        "the pairwise n-obstinate definition and the negated-power witness "
        "form agree on proper filters",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper)
              record(out,
                     is_obstinate(c.L, f, n) == is_obstinate_r2(c.L, f, n),
                     wit(c, f, n));
        });

    add("prop_obst_monotone", StatementKind::Implication,
        CheckScope::PerFilter, "n-obstinate implies (n+1)-obstinate",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n < c.n_max; ++n)
            for (Mask f : c.proper)
              record(out,
                     !is_obstinate(c.L, f, n) || is_obstinate(c.L, f, n + 1),
                     wit(c, f, n));
        });

    add("thm_th2_extension", StatementKind::Extension, CheckScope::PerPair,
        "n-obstinate transfers to every larger proper filter",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f1 : c.proper) {
              if (!is_obstinate(c.L, f1, n)) continue;
              for (Mask f2 : c.proper) {
                if ((f1 & f2) != f1) continue;
                record(out, is_obstinate(c.L, f2, n),
                       wit(c, f1, n, "extends-to=" + set_to_string(c.L, f2)));
              }
            }
        });

    add("cor_cor3", StatementKind::Equivalence, CheckScope::PerLattice,
        "{1} is n-obstinate iff every proper filter is n-obstinate",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            bool a = is_obstinate(c.L, c.one, n);
            bool b = true;
            for (Mask f : c.proper)
              if (!is_obstinate(c.L, f, n)) {
                b = false;
                break;
              }
            record(out, a == b, witn(c, n));
          }
        });

    add("prop_propob3", StatementKind::Equivalence, CheckScope::PerFilter,
        "n-obstinate = maximal + n-positive-implicative = maximal + "
        "n-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper) {
              bool ob = is_obstinate(c.L, f, n);
              bool mx = c.is_max(f);
              record(out,
                     ob == (mx && is_positive_implicative(c.L, f, n)) &&
                         ob == (mx && is_implicative(c.L, f, n)),
                     wit(c, f, n));
            }
        });

    add("prop_propob4", StatementKind::Equivalence, CheckScope::PerFilter,
        "n-obstinate = maximal + n-boolean = join-splitting prime + "
        "n-boolean",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper) {
              bool ob = is_obstinate(c.L, f, n);
              bool bo = is_boolean_filter(c.L, f, n);
              record(out,
                     ob == (c.is_max(f) && bo) &&
                         ob == (is_prime_second_kind(c.L, f) && bo),
                     wit(c, f, n));
            }
        });

    add("prop_propob5", StatementKind::Implication, CheckScope::PerFilter,
        "every n-obstinate filter is n-fantastic",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper)
              record(out,
                     !is_obstinate(c.L, f, n) || is_fantastic(c.L, f, n),
                     wit(c, f, n));
        });

    add("cor_propob31", StatementKind::Equivalence, CheckScope::PerFilter,
        "n-obstinate = join-splitting prime + n-positive-implicative",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper)
              record(out,
                     is_obstinate(c.L, f, n) ==
                         (is_prime_second_kind(c.L, f) &&
                          is_positive_implicative(c.L, f, n)),
                     wit(c, f, n));
        });

    add("prop_propob6_quotient", StatementKind::QuotientCorrespondence,
        CheckScope::PerFilter,
        "F is n-obstinate iff every proper filter of the quotient is, iff "
        "the quotient's {1} is",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            for (Mask f : c.proper) {
              const Lattice& q = c.quot(f).algebra;
              Mask qone = with(Mask{0}, q.top);
              bool all_q = true;
              for (Mask g : all_filters(q)) {
                if (!is_proper(q, g)) continue;
                if (!is_obstinate(q, g, n)) {
                  all_q = false;
                  break;
                }
              }
              bool one_q = is_obstinate(q, qone, n);
              bool ob = is_obstinate(c.L, f, n);
              record(out, ob == all_q && all_q == one_q, wit(c, f, n));
            }
        });

    add("prop_propob18", StatementKind::Equivalence, CheckScope::PerLattice,
        "the algebra is n-obstinate iff {1} is an n-obstinate filter iff "
        "every proper filter is",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n) {
            bool a = is_obstinate_rl(c.L, n);
            bool b = is_obstinate(c.L, c.one, n);
            bool d = true;
            for (Mask f : c.proper)
              if (!is_obstinate(c.L, f, n)) {
                d = false;
                break;
              }
            record(out, a == b && b == d, witn(c, n));
          }
        });

    add("prop_propob54", StatementKind::LatticeLevel, CheckScope::PerLattice,
        "an n-obstinate algebra is n-boolean",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n <= c.n_max; ++n)
            record(out, !is_obstinate_rl(c.L, n) || is_boolean_rl(c.L, n),
                   witn(c, n));
        });

    add("rem_obst_rl_monotone", StatementKind::LatticeLevel,
        CheckScope::PerLattice,
        "an n-obstinate algebra is (n+1)-obstinate",
        [](const SuiteContext& c, TheoremCheck& out) {
          for (int n = 1; n < c.n_max; ++n)
            record(out,
                   !is_obstinate_rl(c.L, n) || is_obstinate_rl(c.L, n + 1),
                   witn(c, n));
        });

    return r;
  }();
  return defs;
}

// Check ids that are expected to hold on every valid algebra. Exactly one
// registered check is excluded: the converse prime-form claim on prelinear
// algebras, which the suite refutes with recorded witnesses.
inline std::vector<std::string> proved_check_ids() {
  std::vector<std::string> ids;
  for (const auto& d : check_registry())
    if (std::string(d.id) != "rem_28_ii_conv") ids.push_back(d.id);
  return ids;
}

// True for checks whose statement is asserted to hold; false for the one
// recorded refutation. Drives exit-code and reporting policy: a failure of
// an asserted check is an alarm, a failure of the non-asserted check is the
// documented counterexample.
inline bool check_is_asserted(const std::string& id) {
  return id != "rem_28_ii_conv";
}

// ---------------------------------------------------------------------------
// Suite runners
// ---------------------------------------------------------------------------

// Runs every registered check against one lattice. n_max <= 0 means "use
// the carrier size" (powers stabilize within that many steps).
inline std::vector<TheoremCheck> run_theorem_suite(const Lattice& L,
                                                   const std::string& label,
                                                   int n_max = 0) {
  SuiteContext ctx(L, label, n_max);
  std::vector<TheoremCheck> out;
  for (const auto& def : check_registry()) {
    TheoremCheck tc;
    tc.id = def.id;
    tc.kind = def.kind;
    tc.scope = def.scope;
    tc.statement = def.statement;
    def.fn(ctx, tc);
    out.push_back(std::move(tc));
  }
  return out;
}

struct LabeledLattice {
  std::string label;
  Lattice lattice;
};

// Aggregates per-lattice suites over a corpus: one entry per check id with
// witnesses merged in corpus order.
inline std::vector<TheoremCheck> run_corpus_suite(
    const std::vector<LabeledLattice>& corpus, int n_max = 0) {
  std::vector<TheoremCheck> agg;
  for (const auto& def : check_registry()) {
    TheoremCheck tc;
    tc.id = def.id;
    tc.kind = def.kind;
    tc.scope = def.scope;
    tc.statement = def.statement;
    agg.push_back(std::move(tc));
  }
  for (const auto& member : corpus) {
    auto per = run_theorem_suite(member.lattice, member.label, n_max);
    for (size_t i = 0; i < agg.size(); ++i) {
      agg[i].cases += per[i].cases;
      agg[i].failure_count += per[i].failure_count;
      if (!per[i].passed) agg[i].passed = false;
      for (const auto& w : per[i].witnesses)
        if (static_cast<int>(agg[i].witnesses.size()) < kMaxStoredWitnesses)
          agg[i].witnesses.push_back(w);
    }
  }
  return agg;
}

// ---------------------------------------------------------------------------
// Implication diagrams
// ---------------------------------------------------------------------------

enum class EdgeStatus { ProvedAndConfirmed, RefutedByCounterexample, Open };

inline const char* to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::ProvedAndConfirmed: return "proved-and-confirmed";
    case EdgeStatus::RefutedByCounterexample:
      return "refuted-by-counterexample";
    case EdgeStatus::Open: return "open";
  }
  return "?";
}

struct DiagramEdge {
  std::string src;
  std::string dst;
  EdgeStatus status{};
  long instances = 0;  // (lattice, filter) pairs with src true
  std::vector<std::string> evidence;  // counterexamples, or a summary line
};

struct DiagramEdges {
  std::string name;  // DOT graph name
  int n = 1;
  std::vector<std::string> nodes;  // fixed declaration order
  std::vector<DiagramEdge> edges;  // every ordered pair, sorted (src, dst)
};

namespace detail {

inline constexpr int kMaxEvidencePerMember = 4;
inline constexpr int kMaxEvidenceTotal = 32;

// Generic diagram builder: `universe` lists per corpus member the labeled
// instances; `eval(member, instance, node)` decides node membership.
struct DiagramSpec {
  std::vector<std::string> nodes;
  // proved ordered pairs (src, dst), plus an optional per-edge instance
  // filter (e.g. restrict to totally ordered members).
  std::vector<std::pair<std::string, std::string>> proved;
};

}  // namespace detail

// Filter-class diagram at a fixed n: nodes are evaluated on every proper
// filter of every corpus member. An edge src -> dst is refuted by any
// proper filter in some member with src true and dst false; a proved edge
// with no counterexample is proved-and-confirmed; everything else is open.
inline DiagramEdges implication_diagram(
    const std::vector<LabeledLattice>& corpus, int n) {
  static const std::vector<std::string> nodes = {
      "implicative", "positive_implicative", "normal",      "fantastic",
      "obstinate",   "maximal",              "semi_maximal", "prime2"};
  static const std::vector<std::pair<const char*, const char*>> proved = {
      {"positive_implicative", "implicative"},   // pi filters are implicative
      {"positive_implicative", "normal"},
      {"positive_implicative", "fantastic"},
      {"fantastic", "normal"},
      {"obstinate", "maximal"},
      {"obstinate", "positive_implicative"},
      {"obstinate", "implicative"},
      {"obstinate", "prime2"},
      {"obstinate", "fantastic"},
  };

  DiagramEdges d;
  d.name = "nfold";
  d.n = n;
  d.nodes = nodes;

  // Evaluate all node flags per (member, proper filter).
  struct Row {
    std::string where;
    std::vector<bool> flag;
  };
  std::vector<std::vector<Row>> per_member;
  for (const auto& member : corpus) {
    const Lattice& L = member.lattice;
    std::vector<Row> rows;
    for (Mask f : proper_filters(L)) {
      Row row;
      row.where = "lattice=" + member.label +
                  " filter=" + set_to_string(L, f) + " n=" + std::to_string(n);
      row.flag = {
          implicative_checked(L, f, n),
          positive_implicative_checked(L, f, n),
          normal_checked(L, f, n),
          is_fantastic(L, f, n),
          obstinate_checked(L, f, n),
          is_maximal(L, f),
          is_semi_maximal(L, f),
          is_prime_second_kind(L, f),
      };
      rows.push_back(std::move(row));
    }
    per_member.push_back(std::move(rows));
  }

  for (size_t si = 0; si < nodes.size(); ++si)
    for (size_t di = 0; di < nodes.size(); ++di) {
      if (si == di) continue;
      DiagramEdge e;
      e.src = nodes[si];
      e.dst = nodes[di];
      bool is_proved = false;
      for (auto& p : proved)
        if (e.src == p.first && e.dst == p.second) is_proved = true;
      for (const auto& rows : per_member) {
        int taken = 0;
        for (const auto& row : rows) {
          if (!row.flag[si]) continue;
          ++e.instances;
          if (row.flag[di]) continue;
          if (taken < detail::kMaxEvidencePerMember &&
              static_cast<int>(e.evidence.size()) <
                  detail::kMaxEvidenceTotal) {
            e.evidence.push_back(row.where);
            ++taken;
          }
        }
      }
      bool refuted = !e.evidence.empty();
      if (refuted)
        e.status = EdgeStatus::RefutedByCounterexample;
      else if (is_proved) {
        e.status = EdgeStatus::ProvedAndConfirmed;
        e.evidence.push_back("confirmed over " + std::to_string(e.instances) +
                             " instances");
      } else {
        e.status = EdgeStatus::Open;
        e.evidence.push_back("no counterexample among " +
                             std::to_string(e.instances) + " instances");
      }
      d.edges.push_back(std::move(e));
    }
  std::sort(d.edges.begin(), d.edges.end(),
            [](const DiagramEdge& a, const DiagramEdge& b) {
              return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
            });
  return d;
}

// Lattice-level diagram at a fixed n, one instance per corpus member. The
// edge positive_implicative_rl -> locally_finite carries a standing
// total-order hypothesis and is evaluated on totally ordered members only.
inline DiagramEdges lattice_diagram(const std::vector<LabeledLattice>& corpus,
                                    int n) {
  static const std::vector<std::string> nodes = {
      "implicative_rl", "positive_implicative_rl", "fantastic_rl",
      "obstinate_rl", "locally_finite"};
  static const std::vector<std::pair<const char*, const char*>> proved = {
      {"positive_implicative_rl", "implicative_rl"},
      {"positive_implicative_rl", "fantastic_rl"},
      {"obstinate_rl", "positive_implicative_rl"},
      {"positive_implicative_rl", "locally_finite"},  // chains only
  };

  DiagramEdges d;
  d.name = "nfold_rl";
  d.n = n;
  d.nodes = nodes;

  struct Row {
    std::string where;
    bool chain;
    std::vector<bool> flag;
  };
  std::vector<Row> rows;
  for (const auto& member : corpus) {
    const Lattice& L = member.lattice;
    Row row;
    row.where = "lattice=" + member.label + " n=" + std::to_string(n);
    row.chain = is_totally_ordered(L);
    row.flag = {
        implicative_rl_checked(L, n),
        positive_implicative_rl_checked(L, n),
        fantastic_rl_checked(L, n),
        is_obstinate_rl(L, n),
        is_locally_finite(L),
    };
    rows.push_back(std::move(row));
  }

  for (size_t si = 0; si < nodes.size(); ++si)
    for (size_t di = 0; di < nodes.size(); ++di) {
      if (si == di) continue;
      DiagramEdge e;
      e.src = nodes[si];
      e.dst = nodes[di];
      bool is_proved = false;
      for (auto& p : proved)
        if (e.src == p.first && e.dst == p.second) is_proved = true;
      bool chains_only = e.src == "positive_implicative_rl" &&
                         e.dst == "locally_finite";
      for (const auto& row : rows) {
        if (chains_only && !row.chain) continue;
        if (!row.flag[si]) continue;
        ++e.instances;
        if (row.flag[di]) continue;
        if (static_cast<int>(e.evidence.size()) < detail::kMaxEvidenceTotal)
          e.evidence.push_back(row.where);
      }
      bool refuted = !e.evidence.empty();
      if (refuted)
        e.status = EdgeStatus::RefutedByCounterexample;
      else if (is_proved) {
        e.status = EdgeStatus::ProvedAndConfirmed;
        e.evidence.push_back("confirmed over " + std::to_string(e.instances) +
                             " instances" +
                             (chains_only ? " (totally ordered members)" : ""));
      } else {
        e.status = EdgeStatus::Open;
        e.evidence.push_back("no counterexample among " +
                             std::to_string(e.instances) + " instances");
      }
      d.edges.push_back(std::move(e));
    }
  std::sort(d.edges.begin(), d.edges.end(),
            [](const DiagramEdge& a, const DiagramEdge& b) {
              return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
            });
  return d;
}

// DOT text: all nodes in fixed declaration order, then the proved edges
// (solid) and open edges (dotted), sorted lexicographically by (src, dst).
// Refuted pairs are non-edges of an implication diagram and stay in the
// data report only.
inline std::string to_dot(const DiagramEdges& d) {
  std::string s = "digraph " + d.name + " {\n";
  s += "  label=\"n=" + std::to_string(d.n) + "\";\n";
  for (const auto& nd : d.nodes) s += "  \"" + nd + "\";\n";
  for (const auto& e : d.edges) {
    if (e.status == EdgeStatus::RefutedByCounterexample) continue;
    s += "  \"" + e.src + "\" -> \"" + e.dst + "\"";
    if (e.status == EdgeStatus::Open) s += " [style=dotted, label=\"open\"]";
    s += ";\n";
  }
  s += "}\n";
  return s;
}

}  // namespace rezlat
