// Filter enumeration, generation, maximality with cross-checked routes,
// prime and boolean kinds, radical, congruences and quotient construction,
// pinned against independently computed values.

#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "rezlat/enumerate.hpp"
#include "rezlat/filters.hpp"

using namespace rezlat;

namespace {

std::vector<std::string> filter_strings(const Lattice& L,
                                        const std::vector<Mask>& fs) {
  std::vector<std::string> out;
  for (Mask f : fs) out.push_back(set_to_string(L, f));
  return out;
}

TEST(Filters, EnumerationIsPinnedPerFixture) {
  struct Row {
    const char* name;
    std::vector<std::string> filters;
  };
  const Row rows[] = {
      {"expob1",
       {"{1}", "{c,d,1}", "{a,c,d,1}", "{b,c,d,1}", "{0,a,b,c,d,1}"}},
      {"expob2", {"{1}", "{0,a,b,c,d,1}"}},
      {"exp", {"{1}", "{d,1}", "{0,a,b,c,d,1}"}},
      {"expp", {"{1}", "{a,1}", "{b,1}", "{c,a,b,1}", "{0,c,a,b,1}"}},
      {"exim3", {"{1}", "{0,a,b,1}"}},
  };
  for (const auto& r : rows) {
    Lattice L = load_fixture(r.name);
    EXPECT_EQ(filter_strings(L, all_filters(L)), r.filters) << r.name;
  }
}

TEST(Filters, MembershipBasics) {
  Lattice exp = load_fixture("exp");
  EXPECT_FALSE(is_filter(exp, fset(exp, "b,1")));
  EXPECT_FALSE(is_filter(exp, fset(exp, "a,b,c,1")));
  EXPECT_TRUE(is_filter(exp, fset(exp, "d,1")));
  Lattice expob2 = load_fixture("expob2");
  EXPECT_FALSE(is_filter(expob2, fset(expob2, "c,d,1")));
  EXPECT_FALSE(is_filter(expob2, Mask{0}));  // empty set
}

TEST(Filters, FilterIffDeductiveSystem) {
  for (const auto& name : fixture_names()) {
    Lattice L = load_fixture(name);
    const Mask carrier = carrier_mask(L);
    for (Mask m = 1; m <= carrier; ++m)
      EXPECT_EQ(is_filter(L, m), is_deductive_system(L, m))
          << name << " " << set_to_string(L, m);
  }
}

TEST(Filters, GeneratedFiltersArePinned) {
  Lattice expp = load_fixture("expp");
  EXPECT_EQ(generated_filter(expp, fset(expp, "c")), fset(expp, "c,a,b,1"));
  Lattice expob1 = load_fixture("expob1");
  EXPECT_EQ(generated_filter(expob1, fset(expob1, "a")),
            fset(expob1, "a,c,d,1"));
  // empty seed generates the smallest filter {1}
  EXPECT_EQ(generated_filter(expp, 0), fset(expp, "1"));
  // generation is a closure operator
  for (const auto& name : fixture_names()) {
    Lattice L = load_fixture(name);
    for (Mask f : all_filters(L)) EXPECT_EQ(generated_filter(L, f), f);
  }
}

TEST(Filters, MaximalFiltersArePinned) {
  struct Row {
    const char* name;
    std::vector<std::string> maximal;
  };
  const Row rows[] = {
      {"expob1", {"{a,c,d,1}", "{b,c,d,1}"}},
      {"expob2", {"{1}"}},
      {"exp", {"{d,1}"}},
      {"expp", {"{c,a,b,1}"}},
      {"exim3", {"{1}"}},
  };
  for (const auto& r : rows) {
    Lattice L = load_fixture(r.name);
    EXPECT_EQ(filter_strings(L, maximal_filters(L)), r.maximal) << r.name;
  }
}

TEST(Filters, MaximalityRejectsImproperFilter) {
  Lattice L = load_fixture("exim3");
  EXPECT_THROW((void)is_maximal(L, carrier_mask(L)), NotProperError);
  EXPECT_THROW((void)is_prime(L, carrier_mask(L)), NotProperError);
  EXPECT_THROW((void)is_prime_second_kind(L, carrier_mask(L)), NotProperError);
  EXPECT_THROW((void)is_prime_third_kind(L, carrier_mask(L)), NotProperError);
  EXPECT_THROW((void)is_boolean_kind(L, carrier_mask(L)), NotProperError);
  EXPECT_THROW((void)is_boolean_second_kind(L, carrier_mask(L)),
               NotProperError);
}

struct ProperRow {
  const char* lattice;
  const char* filter;
  bool prime1, prime2, prime3, bool1, bool2, maximal;
  const char* radical;
  bool semimax;
};

const ProperRow kProperRows[] = {
    {"expob1", "1", false, true, false, false, false, false, "{c,d,1}", false},
    {"expob1", "c,d,1", false, false, true, true, false, false, "{c,d,1}",
     true},
    {"expob1", "a,c,d,1", true, true, true, true, true, true, "{a,c,d,1}",
     true},
    {"expob1", "b,c,d,1", true, true, true, true, true, true, "{b,c,d,1}",
     true},
    {"expob2", "1", false, true, false, false, false, true, "{1}", true},
    {"exp", "1", false, true, false, false, false, false, "{d,1}", false},
    {"exp", "d,1", false, true, false, false, false, true, "{d,1}", true},
    {"expp", "1", false, false, true, false, false, false, "{c,a,b,1}", false},
    {"expp", "a,1", true, true, true, false, false, false, "{c,a,b,1}", false},
    {"expp", "b,1", true, true, true, false, false, false, "{c,a,b,1}", false},
    {"expp", "c,a,b,1", true, true, true, true, true, true, "{c,a,b,1}", true},
    {"exim3", "1", true, true, true, false, false, true, "{1}", true},
};

TEST(Filters, PrimeBooleanMaximalRadicalArePinned) {
  for (const auto& r : kProperRows) {
    Lattice L = load_fixture(r.lattice);
    Mask f = fset(L, r.filter);
    ASSERT_TRUE(is_filter(L, f)) << r.lattice << " " << r.filter;
    EXPECT_EQ(is_prime(L, f), r.prime1) << r.lattice << " " << r.filter;
    EXPECT_EQ(is_prime_second_kind(L, f), r.prime2)
        << r.lattice << " " << r.filter;
    EXPECT_EQ(is_prime_third_kind(L, f), r.prime3)
        << r.lattice << " " << r.filter;
    EXPECT_EQ(is_boolean_kind(L, f), r.bool1) << r.lattice << " " << r.filter;
    EXPECT_EQ(is_boolean_second_kind(L, f), r.bool2)
        << r.lattice << " " << r.filter;
    EXPECT_EQ(is_maximal(L, f), r.maximal) << r.lattice << " " << r.filter;
    EXPECT_EQ(set_to_string(L, radical(L, f)), r.radical)
        << r.lattice << " " << r.filter;
    EXPECT_EQ(is_semi_maximal(L, f), r.semimax) << r.lattice << " "
                                                << r.filter;
  }
}

TEST(Filters, RadicalFixedPointExample) {
  // {c,d,1} equals its own radical yet is not maximal
  Lattice L = load_fixture("expob1");
  Mask f = fset(L, "c,d,1");
  EXPECT_EQ(radical(L, f), f);
  EXPECT_FALSE(is_maximal(L, f));
  EXPECT_TRUE(is_semi_maximal(L, f));
}

TEST(Filters, MaximalityEvidenceIsPinned) {
  Lattice L = load_fixture("expob1");
  {
    Mask f = fset(L, "b,c,d,1");
    auto ev = maximality_evidence(L, f);
    // for every x outside F the first annihilating pair is (n=1, f=b)
    ASSERT_EQ(ev.size(), 2u);
    for (const auto& w : ev) {
      EXPECT_EQ(w.n, 1);
      EXPECT_EQ(L.name(w.f), "b");
    }
    EXPECT_EQ(L.name(ev[0].x), "0");
    EXPECT_EQ(L.name(ev[1].x), "a");
  }
  {
    Mask f = fset(L, "a,c,d,1");
    auto ev = maximality_evidence(L, f);
    ASSERT_EQ(ev.size(), 2u);
    for (const auto& w : ev) {
      EXPECT_EQ(w.n, 1);
      EXPECT_EQ(L.name(w.f), "a");
    }
  }
}

TEST(Filters, CongruenceIsWellDefinedEverywhere) {
  for (const auto& name : fixture_names()) {
    Lattice L = load_fixture(name);
    for (Mask f : all_filters(L)) {
      EXPECT_TRUE(congruence_well_defined(L, f)) << name;
      // the congruence is reflexive, symmetric, transitive
      for (int x = 0; x < L.size; ++x) {
        EXPECT_TRUE(congruent(L, f, x, x));
        for (int y = 0; y < L.size; ++y) {
          EXPECT_EQ(congruent(L, f, x, y), congruent(L, f, y, x));
          for (int z = 0; z < L.size; ++z)
            if (congruent(L, f, x, y) && congruent(L, f, y, z)) {
              EXPECT_TRUE(congruent(L, f, x, z));
            }
        }
      }
    }
  }
}

TEST(Quotient, ClassPartitionsArePinned) {
  struct Row {
    const char* lattice;
    const char* filter;
    std::vector<std::string> classes;
  };
  const Row rows[] = {
      {"expob1", "c,d,1", {"{0}", "{a}", "{b}", "{c,d,1}"}},
      {"expp", "a,1", {"{0}", "{c,b}", "{a,1}"}},
      {"expp", "c,a,b,1", {"{0}", "{c,a,b,1}"}},
      {"exim3", "1", {"{0}", "{a}", "{b}", "{1}"}},
  };
  for (const auto& r : rows) {
    Lattice L = load_fixture(r.lattice);
    auto q = quotient(L, fset(L, r.filter));
    EXPECT_FALSE(q.trivial);
    ASSERT_EQ(q.classes.size(), r.classes.size()) << r.lattice;
    for (size_t i = 0; i < r.classes.size(); ++i)
      EXPECT_EQ(q.algebra.name(static_cast<int>(i)), r.classes[i])
          << r.lattice << "/" << r.filter;
    // class_of agrees with the congruence itself
    for (int x = 0; x < L.size; ++x)
      for (int y = 0; y < L.size; ++y)
        EXPECT_EQ(q.class_of[x] == q.class_of[y],
                  congruent(L, fset(L, r.filter), x, y));
  }
}

TEST(Quotient, PropertiesOfQuotientsArePinned) {
  {
    Lattice L = load_fixture("expob1");
    auto q = quotient(L, fset(L, "c,d,1"));
    auto c = classify(q.algebra);
    EXPECT_FALSE(c.locally_finite);
    EXPECT_TRUE(c.heyting);
  }
  {
    Lattice L = load_fixture("expp");
    auto q = quotient(L, fset(L, "a,1"));
    auto c = classify(q.algebra);
    EXPECT_FALSE(c.locally_finite);
    EXPECT_TRUE(c.heyting);
  }
  {
    Lattice L = load_fixture("expp");
    auto q = quotient(L, fset(L, "c,a,b,1"));
    auto c = classify(q.algebra);
    EXPECT_TRUE(c.locally_finite);
    EXPECT_TRUE(c.heyting);
  }
  {
    Lattice L = load_fixture("exim3");
    auto q = quotient(L, fset(L, "1"));
    auto c = classify(q.algebra);
    EXPECT_TRUE(c.locally_finite);
    EXPECT_FALSE(c.heyting);
    // quotient by {1} reproduces the algebra itself
    EXPECT_TRUE(are_isomorphic(q.algebra, L));
  }
}

TEST(Quotient, ByImproperFilterIsTrivial) {
  Lattice L = load_fixture("expp");
  auto q = quotient(L, carrier_mask(L));
  EXPECT_TRUE(q.trivial);
  EXPECT_EQ(q.classes.size(), 1u);
}

TEST(Quotient, TablesMatchPinnedValues) {
  // expob1 / {c,d,1}: the four classes multiply like the four-element
  // boolean algebra
  Lattice L = load_fixture("expob1");
  auto q = quotient(L, fset(L, "c,d,1"));
  const auto& A = q.algebra;
  auto idx = [&](const char* n) { return *A.index_of(n); };
  int c0 = idx("{0}"), ca = idx("{a}"), cb = idx("{b}"), c1 = idx("{c,d,1}");
  EXPECT_EQ(A.ot(ca, ca), ca);
  EXPECT_EQ(A.ot(ca, cb), c0);
  EXPECT_EQ(A.ot(cb, cb), cb);
  EXPECT_EQ(A.ar(ca, c0), cb);
  EXPECT_EQ(A.ar(cb, c0), ca);
  EXPECT_EQ(A.ar(ca, cb), cb);
  EXPECT_EQ(A.jn(ca, cb), c1);
  EXPECT_EQ(A.mt(ca, cb), c0);
}

TEST(Filters, SetParsingAndPrinting) {
  Lattice L = load_fixture("expp");
  EXPECT_EQ(set_to_string(L, fset(L, "1,a")), "{a,1}");
  EXPECT_EQ(set_to_string(L, fset(L, "a 1")), "{a,1}");
  EXPECT_FALSE(mask_from_names(L, "a,zz").has_value());
  EXPECT_EQ(cardinality(fset(L, "a,1")), 2);
  auto elems = to_elements(fset(L, "a,1"), L);
  ASSERT_EQ(elems.size(), 2u);
  EXPECT_EQ(L.name(elems[0]), "a");
  EXPECT_EQ(L.name(elems[1]), "1");
}

TEST(Filters, ProperFiltersExcludeBottomExactly) {
  for (const auto& name : fixture_names()) {
    Lattice L = load_fixture(name);
    auto all = all_filters(L);
    auto proper = proper_filters(L);
    EXPECT_EQ(proper.size() + 1, all.size());
    for (Mask f : proper) EXPECT_FALSE(contains(f, L.bot));
  }
}

}  // namespace
