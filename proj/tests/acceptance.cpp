// Acceptance gate: seven end-to-end criteria, one verdict line each.
// Exit code equals the number of failed criteria. Sub-checks that fail
// print an indented explanation under their criterion line.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rezlat/enumerate.hpp"
#include "rezlat/filters.hpp"
#include "rezlat/io.hpp"
#include "rezlat/nfold.hpp"
#include "rezlat/theorems.hpp"

#ifndef RZ_CLI_PATH
#error "RZ_CLI_PATH must be defined by the build"
#endif

using namespace rezlat;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string run_and_capture(const std::string& cmd, int* exit_code) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string witness_str(const Lattice& L,
                        const std::optional<std::pair<Elem, Elem>>& w) {
  if (!w) return "(none)";
  return "(" + L.name(w->first) + "," + L.name(w->second) + ")";
}

// 1. All five fixtures validate; the two non-prelinear examples fail
//    prelinearity at (a,b); the two named examples fail divisibility at
//    (a,b).
void criterion1(Criterion& c) {
  for (const auto& name : fixture_names()) {
    auto v = load_lattice(read_text_file(fixture_path(name)));
    c.require(v.ok(), name + " does not validate");
  }
  {
    Lattice L = load_fixture("expob1");
    c.require(witness_str(L, classify(L).prelinearity_witness) == "(a,b)",
              "expob1 prelinearity witness is " +
                  witness_str(L, classify(L).prelinearity_witness) +
                  ", expected (a,b)");
  }
  {
    Lattice L = load_fixture("exp");
    c.require(witness_str(L, classify(L).prelinearity_witness) == "(a,b)",
              "exp prelinearity witness is " +
                  witness_str(L, classify(L).prelinearity_witness) +
                  ", expected (a,b)");
  }
  {
    Lattice L = load_fixture("expob2");
    c.require(witness_str(L, classify(L).divisibility_witness) == "(a,b)",
              "expob2 divisibility witness is " +
                  witness_str(L, classify(L).divisibility_witness) +
                  ", expected (a,b)");
  }
  {
    Lattice L = load_fixture("expp");
    c.require(witness_str(L, classify(L).divisibility_witness) == "(a,b)",
              "expp divisibility witness is " +
                  witness_str(L, classify(L).divisibility_witness) +
                  " — the fixture satisfies divisibility at every pair "
                  "(x AND y = x*(x->y) holds throughout), so no witness "
                  "can exist");
  }
}

// 2. Exact worked-example regressions.
void criterion2(Criterion& c) {
  {  // three depth-n implicative filters, never positive implicative
    Lattice L = load_fixture("expp");
    for (const char* fs : {"1", "a,1", "b,1"}) {
      Mask f = fset(L, fs);
      for (int n = 1; n <= L.size; ++n) {
        c.require(is_implicative(L, f, n),
                  std::string("expp {") + fs + "} not implicative at n=" +
                      std::to_string(n));
        c.require(!is_positive_implicative(L, f, n),
                  std::string("expp {") + fs +
                      "} positive implicative at n=" + std::to_string(n));
      }
    }
    Mask top4 = fset(L, "c,a,b,1");
    for (int n = 1; n <= L.size; ++n)
      c.require(is_positive_implicative(L, top4, n),
                "expp {c,a,b,1} not positive implicative at n=" +
                    std::to_string(n));
    for (int n = 1; n <= L.size; ++n)
      c.require(!is_positive_implicative_rl(L, n),
                "expp positive-implicative as an algebra at n=" +
                    std::to_string(n));
  }
  {  // chain: depth 3 yes / depth 2 no; depth-1 normal yes, positive no
    Lattice L = load_fixture("exim3");
    Mask f = fset(L, "1");
    c.require(is_implicative(L, f, 3), "exim3 {1} not implicative at n=3");
    c.require(!is_implicative(L, f, 2), "exim3 {1} implicative at n=2");
    c.require(is_positive_implicative(L, f, 3),
              "exim3 {1} not positive implicative at n=3");
    c.require(!is_positive_implicative(L, f, 2),
              "exim3 {1} positive implicative at n=2");
    c.require(is_normal(L, f, 1), "exim3 {1} not normal at n=1");
    c.require(!is_positive_implicative(L, f, 1),
              "exim3 {1} positive implicative at n=1");
  }
  {  // obstinate verdicts
    Lattice L = load_fixture("expob1");
    for (const char* fs : {"a,c,d,1", "b,c,d,1"})
      c.require(is_obstinate(L, fset(L, fs), 1),
                std::string("expob1 {") + fs + "} not obstinate at n=1");
    for (int n = 1; n <= L.size; ++n)
      c.require(!is_obstinate(L, fset(L, "c,d,1"), n),
                "expob1 {c,d,1} obstinate at n=" + std::to_string(n));
    Lattice M = load_fixture("expob2");
    Mask one = fset(M, "1");
    const bool expect[] = {false, false, true, true, true, true};
    for (int n = 1; n <= M.size; ++n)
      c.require(is_obstinate(M, one, n) == expect[n - 1],
                "expob2 {1} obstinate flag wrong at n=" + std::to_string(n));
  }
  {  // radical fixed point that is not maximal
    Lattice L = load_fixture("expob1");
    Mask f = fset(L, "c,d,1");
    c.require(radical(L, f) == f, "radical of expob1 {c,d,1} moved");
    c.require(!is_maximal(L, f), "expob1 {c,d,1} claimed maximal");
  }
  {  // fantastic verdicts across three fixtures
    Lattice A = load_fixture("exim3");
    c.require(is_fantastic(A, fset(A, "1"), 1),
              "exim3 {1} not fantastic at n=1");
    Lattice B = load_fixture("expob2");
    c.require(!is_fantastic(B, fset(B, "1"), 1),
              "expob2 {1} fantastic at n=1");
    c.require(is_fantastic(B, fset(B, "1"), 2),
              "expob2 {1} not fantastic at n=2");
    Lattice C = load_fixture("exp");
    for (int n = 1; n <= C.size; ++n)
      c.require(!is_fantastic(C, fset(C, "1"), n),
                "exp {1} fantastic at n=" + std::to_string(n));
    c.require(!is_fantastic(C, fset(C, "d,1"), 1),
              "exp {d,1} fantastic at n=1");
    c.require(is_fantastic(C, fset(C, "d,1"), 2),
              "exp {d,1} not fantastic at n=2");
  }
  {  // whole-algebra implicative profile of exp
    Lattice L = load_fixture("exp");
    c.require(!is_implicative_rl(L, 1), "exp implicative as an algebra at n=1");
    for (int n = 2; n <= L.size; ++n)
      c.require(is_implicative_rl(L, n),
                "exp not implicative as an algebra at n=" + std::to_string(n));
  }
}

// 3. Every alternative characterization route agrees on every filter of
//    every fixture and every corpus member of size <= 5, at every depth.
void criterion3(Criterion& c) {
  long cases = 0;
  for (const auto& [label, L] : fixtures_and_corpus(5)) {
    for (Mask f : all_filters(L))
      for (int n = 1; n <= L.size; ++n) {
        try {
          (void)implicative_checked(L, f, n);
          (void)positive_implicative_checked(L, f, n);
          (void)normal_checked(L, f, n);
          if (is_proper(L, f)) (void)obstinate_checked(L, f, n);
          ++cases;
        } catch (const CharacterizationMismatch& e) {
          c.require(false, label + " n=" + std::to_string(n) + ": " +
                               e.what());
          return;
        }
      }
    for (int n = 1; n <= L.size; ++n) {
      try {
        (void)implicative_rl_checked(L, n);
        (void)positive_implicative_rl_checked(L, n);
        (void)fantastic_rl_checked(L, n);
        ++cases;
      } catch (const CharacterizationMismatch& e) {
        c.require(false,
                  label + " n=" + std::to_string(n) + ": " + e.what());
        return;
      }
    }
  }
  c.require(cases > 0, "no cases executed");
}

// 4. The full check suite over fixtures plus the size <= 5 corpus reports
//    zero failures for every asserted proposition.
void criterion4(Criterion& c) {
  auto corpus = fixtures_and_corpus(5);
  auto checks = run_corpus_suite(corpus);
  c.require(checks.size() == check_registry().size(), "registry incomplete");
  for (const auto& chk : checks) {
    if (!check_is_asserted(chk.id)) continue;
    c.require(chk.passed,
              std::string(chk.id) + " failed" +
                  (chk.witnesses.empty() ? "" : ": " + chk.witnesses[0]));
  }
}

// 5. Enumeration equals the naive filter-everything oracle member for
//    member at sizes 2..4; the size-2 algebra is unique; size 3 contains
//    the idempotent and the nilpotent chain as distinct members.
void criterion5(Criterion& c) {
  for (int k = 2; k <= 4; ++k) {
    auto fast = enumerate_residuated(k);
    auto naive = naive_residuated(k);
    c.require(fast.size() == naive.size(),
              "size " + std::to_string(k) + ": " +
                  std::to_string(fast.size()) + " enumerated vs " +
                  std::to_string(naive.size()) + " naive");
    for (size_t i = 0; i < fast.size() && i < naive.size(); ++i)
      c.require(canonical_form(fast[i]) == canonical_form(naive[i]),
                "size " + std::to_string(k) + " member " + std::to_string(i) +
                    " differs from the naive oracle");
  }
  auto two = enumerate_residuated(2);
  c.require(two.size() == 1, "size 2 must have exactly one member");
  auto three = enumerate_residuated(3);
  bool idem = false, nilp = false;
  for (const auto& L : three) {
    if (L.ot(1, 1) == 1) idem = true;
    if (L.ot(1, 1) == L.bot) nilp = true;
  }
  c.require(three.size() == 2 && idem && nilp,
            "size 3 must consist of the idempotent-middle and "
            "nilpotent-middle chains");
  if (three.size() == 2)
    c.require(!are_isomorphic(three[0], three[1]),
              "the two size-3 chains must not be isomorphic");
}

// 6. Byte-level determinism of the command-line tool: corpora across
//    worker counts, and JSON reports across runs.
void criterion6(Criterion& c) {
  namespace fs = std::filesystem;
  fs::path d1 = fs::temp_directory_path() / "rezlat_acc_c5_a";
  fs::path d2 = fs::temp_directory_path() / "rezlat_acc_c5_b";
  fs::remove_all(d1);
  fs::remove_all(d2);
  int e1 = 0, e2 = 0;
  run_and_capture(std::string(RZ_CLI_PATH) + " enumerate --size 5 --out " +
                      d1.string() + " --jobs 1",
                  &e1);
  run_and_capture(std::string(RZ_CLI_PATH) + " enumerate --size 5 --out " +
                      d2.string() + " --jobs 4",
                  &e2);
  c.require(e1 == 0 && e2 == 0, "enumerate runs failed");
  if (e1 == 0 && e2 == 0) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(d1))
      names.push_back(e.path().filename().string());
    c.require(names.size() == 27, "corpus should hold 26 members + index");
    for (const auto& n : names) {
      if (!fs::exists(d2 / n)) {
        c.require(false, "missing " + n + " in second corpus");
        continue;
      }
      c.require(read_text_file((d1 / n).string()) ==
                    read_text_file((d2 / n).string()),
                n + " differs between worker counts");
    }
  }
  fs::remove_all(d1);
  fs::remove_all(d2);

  int ea = 0, eb = 0;
  std::string ja = run_and_capture(std::string(RZ_CLI_PATH) + " theorems " +
                                       fixture_path("expp") + " --json",
                                   &ea);
  std::string jb = run_and_capture(std::string(RZ_CLI_PATH) + " theorems " +
                                       fixture_path("expp") + " --json",
                                   &eb);
  c.require(ea == 0 && eb == 0, "theorems --json runs failed");
  c.require(!ja.empty() && ja == jb, "JSON report differs across runs");
}

// 7. The implication diagram over fixtures plus the size <= 5 corpus marks
//    exactly the nine proved containments as proved-and-confirmed and
//    refutes the three converses with their canonical witnesses, each
//    re-verified directly on the predicates.
void criterion7(Criterion& c) {
  auto corpus = fixtures_and_corpus(5);
  auto d = implication_diagram(corpus, 2);
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
  c.require(confirmed == static_cast<int>(proved.size()),
            "expected exactly " + std::to_string(proved.size()) +
                " proved-and-confirmed edges, found " +
                std::to_string(confirmed));
  for (const auto& [src, dst] : proved) {
    bool found = false;
    for (const auto& e : d.edges)
      if (e.src == src && e.dst == dst) {
        found = true;
        c.require(e.status == EdgeStatus::ProvedAndConfirmed,
                  src + "->" + dst + " not proved-and-confirmed");
        c.require(e.instances > 0, src + "->" + dst + " never instantiated");
      }
    c.require(found, src + "->" + dst + " missing from diagram");
  }

  struct Refuted {
    const char* src;
    const char* dst;
    const char* lattice;
    const char* filter;
  };
  const Refuted refs[] = {
      {"fantastic", "positive_implicative", "expob2", "{1}"},
      {"implicative", "positive_implicative", "expp", "{a,1}"},
      {"normal", "positive_implicative", "exim3", "{1}"},
  };
  for (const auto& r : refs) {
    bool found = false, witnessed = false;
    for (const auto& e : d.edges)
      if (e.src == r.src && e.dst == r.dst) {
        found = true;
        if (e.status == EdgeStatus::RefutedByCounterexample)
          for (const auto& ev : e.evidence)
            if (ev.find(r.lattice) != std::string::npos &&
                ev.find(std::string("filter=") + r.filter) !=
                    std::string::npos)
              witnessed = true;
      }
    c.require(found && witnessed,
              std::string(r.src) + "->" + r.dst +
                  " not refuted with witness " + r.lattice + "/" + r.filter);
  }

  // re-verify the three witnesses on the raw predicates at depth 2
  {
    Lattice L = load_fixture("expob2");
    Mask f = fset(L, "1");
    c.require(is_fantastic(L, f, 2) && !is_positive_implicative(L, f, 2),
              "expob2 {1} is not a live fantastic/positive-implicative "
              "separation at n=2");
  }
  {
    Lattice L = load_fixture("expp");
    Mask f = fset(L, "a,1");
    c.require(is_implicative(L, f, 2) && !is_positive_implicative(L, f, 2),
              "expp {a,1} is not a live implicative/positive-implicative "
              "separation at n=2");
  }
  {
    Lattice L = load_fixture("exim3");
    Mask f = fset(L, "1");
    c.require(is_normal(L, f, 2) && !is_positive_implicative(L, f, 2),
              "exim3 {1} is not a live normal/positive-implicative "
              "separation at n=2");
  }
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    std::function<void(Criterion&)> fn;
  };
  const std::vector<Entry> entries = {
      {1, "fixture validation and first-failure witnesses", criterion1},
      {2, "worked-example regressions", criterion2},
      {3, "characterization-route agreement", criterion3},
      {4, "check suite clean over fixtures and corpus", criterion4},
      {5, "enumeration matches the naive oracle", criterion5},
      {6, "byte-level determinism of the command-line tool", criterion6},
      {7, "implication diagram reproduction", criterion7},
  };
  int failures = 0;
  for (const auto& e : entries) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    e.fn(c);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
    std::printf("[%s] criterion %d: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL",
                e.number, e.title, dt);
    for (const auto& note : c.notes)
      std::printf("       - %s\n", note.c_str());
    if (!c.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) -
                                              failures,
              entries.size());
  return failures;
}
