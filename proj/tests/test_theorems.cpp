// The machine-checked proposition suite: registry shape, per-fixture and
// corpus-wide verdicts, the one recorded refutation, and implication
// diagrams with proved, refuted and open edges.

#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "helpers.hpp"
#include "rezlat/theorems.hpp"

using namespace rezlat;

namespace {

const DiagramEdge* find_edge(const DiagramEdges& d, const std::string& src,
                             const std::string& dst) {
  for (const auto& e : d.edges)
    if (e.src == src && e.dst == dst) return &e;
  return nullptr;
}

bool evidence_mentions(const DiagramEdge& e, const std::string& a,
                       const std::string& b) {
  for (const auto& s : e.evidence)
    if (s.find(a) != std::string::npos && s.find(b) != std::string::npos)
      return true;
  return false;
}

TEST(Registry, ShapeAndIds) {
  const auto& defs = check_registry();
  EXPECT_EQ(defs.size(), 67u);
  std::set<std::string> ids;
  for (const auto& d : defs) {
    EXPECT_TRUE(ids.insert(d.id).second) << "duplicate id " << d.id;
    EXPECT_FALSE(std::string(d.statement).empty()) << d.id;
  }
  auto proved = proved_check_ids();
  EXPECT_EQ(proved.size(), 66u);
  EXPECT_FALSE(check_is_asserted("rem_28_ii_conv"));
  EXPECT_TRUE(check_is_asserted("thm_lien1"));
  EXPECT_EQ(ids.count("rem_28_ii_conv"), 1u);
}

TEST(Registry, KindAndScopeNames) {
  EXPECT_STREQ(to_string(StatementKind::Equivalence), "equivalence");
  EXPECT_STREQ(to_string(StatementKind::Implication), "implication");
  EXPECT_STREQ(to_string(StatementKind::Extension), "extension");
  EXPECT_STREQ(to_string(StatementKind::QuotientCorrespondence),
               "quotient-correspondence");
  EXPECT_STREQ(to_string(StatementKind::LatticeLevel), "lattice-level");
  EXPECT_STREQ(to_string(CheckScope::PerFilter), "per-filter");
  EXPECT_STREQ(to_string(CheckScope::PerLattice), "per-lattice");
  EXPECT_STREQ(to_string(CheckScope::PerPair), "per-pair");
}

TEST(Suite, CleanOnFourOfFiveFixtures) {
  for (const auto& name : {"expob1", "expob2", "exp", "exim3"}) {
    Lattice L = load_fixture(name);
    auto checks = run_theorem_suite(L, name);
    EXPECT_EQ(checks.size(), 67u);
    for (const auto& c : checks)
      EXPECT_TRUE(c.passed) << name << " " << c.id << " "
                            << (c.witnesses.empty() ? "" : c.witnesses[0]);
  }
}

TEST(Suite, RecordedRefutationOnExpp) {
  Lattice L = load_fixture("expp");
  auto checks = run_theorem_suite(L, "expp");
  int failed = 0;
  for (const auto& c : checks) {
    if (c.passed) continue;
    ++failed;
    EXPECT_EQ(c.id, "rem_28_ii_conv");
    EXPECT_FALSE(check_is_asserted(c.id));
    EXPECT_GE(c.failure_count, 1);
    ASSERT_FALSE(c.witnesses.empty());
    EXPECT_NE(c.witnesses[0].find("expp"), std::string::npos);
    EXPECT_NE(c.witnesses[0].find("filter={1}"), std::string::npos);
  }
  EXPECT_EQ(failed, 1);
}

TEST(Suite, CasesAreCountedAndCapped) {
  Lattice L = load_fixture("exim3");
  auto checks = run_theorem_suite(L, "exim3");
  for (const auto& c : checks) {
    EXPECT_GE(c.cases, 0) << c.id;
    EXPECT_LE(c.witnesses.size(), 8u) << c.id;
    if (c.passed) {
      EXPECT_EQ(c.failure_count, 0) << c.id;
    }
  }
  // the identity check quantifies over the whole carrier
  for (const auto& c : checks)
    if (std::string(c.id) == "prop_21_identities") {
      EXPECT_GE(c.cases, 1);
    }
}

TEST(Suite, CorpusRunAggregates) {
  auto corpus = fixtures_and_corpus(4);
  auto checks = run_corpus_suite(corpus);
  ASSERT_EQ(checks.size(), 67u);
  for (const auto& c : checks) {
    if (check_is_asserted(c.id)) {
      EXPECT_TRUE(c.passed) << c.id << " "
                            << (c.witnesses.empty() ? "" : c.witnesses[0]);
    } else {
      // the recorded refutation is exercised by at least one member
      EXPECT_FALSE(c.passed) << c.id;
      EXPECT_GE(c.failure_count, 1) << c.id;
    }
  }
}

TEST(Diagram, ProvedEdgesConfirmedOverFixtures) {
  auto corpus = fixtures_and_corpus(4);
  auto d = implication_diagram(corpus, 2);
  EXPECT_EQ(d.name, "nfold");
  EXPECT_EQ(d.n, 2);
  const std::vector<std::pair<std::string, std::string>> proved = {
      {"positive_implicative", "implicative"},
      {"positive_implicative", "normal"},
      {"positive_implicative", "fantastic"},
      {"fantastic", "normal"},
      {"obstinate", "maximal"},
      {"obstinate", "positive_implicative"},
      {"obstinate", "implicative"},
      {"obstinate", "prime2"},
      {"obstinate", "fantastic"},
  };
  int confirmed = 0;
  for (const auto& e : d.edges)
    if (e.status == EdgeStatus::ProvedAndConfirmed) ++confirmed;
  EXPECT_EQ(confirmed, static_cast<int>(proved.size()));
  for (const auto& [src, dst] : proved) {
    const auto* e = find_edge(d, src, dst);
    ASSERT_NE(e, nullptr) << src << "->" << dst;
    EXPECT_EQ(e->status, EdgeStatus::ProvedAndConfirmed) << src << "->" << dst;
    EXPECT_GT(e->instances, 0) << src << "->" << dst;
  }
}

TEST(Diagram, ConverseEdgesRefutedByNamedWitnesses) {
  auto corpus = fixtures_and_corpus(4);
  auto d = implication_diagram(corpus, 2);
  {
    const auto* e = find_edge(d, "fantastic", "positive_implicative");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, EdgeStatus::RefutedByCounterexample);
    EXPECT_TRUE(evidence_mentions(*e, "expob2", "filter={1}"));
  }
  {
    const auto* e = find_edge(d, "implicative", "positive_implicative");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, EdgeStatus::RefutedByCounterexample);
    EXPECT_TRUE(evidence_mentions(*e, "expp", "filter={a,1}"));
  }
  {
    const auto* e = find_edge(d, "normal", "positive_implicative");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, EdgeStatus::RefutedByCounterexample);
    EXPECT_TRUE(evidence_mentions(*e, "exim3", "filter={1}"));
  }
}

TEST(Diagram, NodesAndDotOutput) {
  auto corpus = fixtures_and_corpus(2);
  auto d = implication_diagram(corpus, 2);
  const std::vector<std::string> nodes = {
      "implicative", "positive_implicative", "normal",       "fantastic",
      "obstinate",   "maximal",              "semi_maximal", "prime2"};
  EXPECT_EQ(d.nodes, nodes);
  std::string dot = to_dot(d);
  EXPECT_EQ(dot.rfind("digraph nfold {", 0), 0u);
  EXPECT_NE(dot.find("label=\"n=2\";"), std::string::npos);
  EXPECT_NE(dot.find("\"implicative\";"), std::string::npos);
  // refuted edges never appear; open edges are dotted
  for (const auto& e : d.edges) {
    std::string arrow = "\"" + e.src + "\" -> \"" + e.dst + "\"";
    if (e.status == EdgeStatus::RefutedByCounterexample)
      EXPECT_EQ(dot.find(arrow), std::string::npos) << arrow;
    else
      EXPECT_NE(dot.find(arrow), std::string::npos) << arrow;
  }
  EXPECT_NE(dot.find("[style=dotted, label=\"open\"]"), std::string::npos);
  EXPECT_STREQ(to_string(EdgeStatus::ProvedAndConfirmed),
               "proved-and-confirmed");
  EXPECT_STREQ(to_string(EdgeStatus::RefutedByCounterexample),
               "refuted-by-counterexample");
  EXPECT_STREQ(to_string(EdgeStatus::Open), "open");
}

TEST(Diagram, EdgesAreSortedAndDeterministic) {
  auto corpus = fixtures_and_corpus(3);
  auto d1 = implication_diagram(corpus, 2);
  auto d2 = implication_diagram(corpus, 2);
  ASSERT_EQ(d1.edges.size(), d2.edges.size());
  for (size_t i = 0; i < d1.edges.size(); ++i) {
    EXPECT_EQ(d1.edges[i].src, d2.edges[i].src);
    EXPECT_EQ(d1.edges[i].dst, d2.edges[i].dst);
    EXPECT_EQ(d1.edges[i].status, d2.edges[i].status);
    EXPECT_EQ(d1.edges[i].evidence, d2.edges[i].evidence);
    if (i > 0) {
      EXPECT_TRUE(std::tie(d1.edges[i - 1].src, d1.edges[i - 1].dst) <
                  std::tie(d1.edges[i].src, d1.edges[i].dst));
    }
  }
  EXPECT_EQ(to_dot(d1), to_dot(d2));
}

TEST(Diagram, LatticeLevelEdges) {
  auto corpus = fixtures_and_corpus(4);
  auto d = lattice_diagram(corpus, 3);
  EXPECT_EQ(d.name, "nfold_rl");
  const std::vector<std::string> nodes = {
      "implicative_rl", "positive_implicative_rl", "fantastic_rl",
      "obstinate_rl", "locally_finite"};
  EXPECT_EQ(d.nodes, nodes);
  const std::vector<std::pair<std::string, std::string>> proved = {
      {"positive_implicative_rl", "implicative_rl"},
      {"positive_implicative_rl", "fantastic_rl"},
      {"obstinate_rl", "positive_implicative_rl"},
      {"positive_implicative_rl", "locally_finite"},
  };
  for (const auto& [src, dst] : proved) {
    const auto* e = find_edge(d, src, dst);
    ASSERT_NE(e, nullptr) << src << "->" << dst;
    EXPECT_EQ(e->status, EdgeStatus::ProvedAndConfirmed) << src << "->" << dst;
  }
  std::string dot = to_dot(d);
  EXPECT_EQ(dot.rfind("digraph nfold_rl {", 0), 0u);
}

TEST(Suite, DepthParameterIsRespected) {
  Lattice L = load_fixture("exim3");
  auto c2 = run_theorem_suite(L, "exim3", 2);
  auto c4 = run_theorem_suite(L, "exim3", 4);
  ASSERT_EQ(c2.size(), c4.size());
  // smaller depth quantifies over fewer cases for per-depth checks
  long cases2 = 0, cases4 = 0;
  for (const auto& c : c2) cases2 += c.cases;
  for (const auto& c : c4) cases4 += c.cases;
  EXPECT_LT(cases2, cases4);
  for (const auto& c : c2) EXPECT_TRUE(c.passed) << c.id;
}

}  // namespace
