// Command-line front end: validate tables, list filters, classify filters
// across fold depths, build quotients, run the check suite, enumerate small
// algebras into a corpus, and emit implication diagrams.
//
// Exit codes: 0 success, 1 usage error, 2 the input fails to parse or
// validate, 3 the check suite found a counterexample to an asserted claim.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rezlat/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCounterexample = 3;

const char* yn(bool b) { return b ? "yes" : "no"; }

struct Loaded {
  rezlat::Lattice lattice;
  std::string label;
};

// Load + validate a lattice file, printing any problem to stderr.
// Returns std::nullopt after printing if the file is unusable.
std::optional<Loaded> load_or_report(const std::string& path) {
  std::string text;
  try {
    text = rezlat::read_text_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  try {
    auto v = rezlat::load_lattice(text);
    if (!v.ok()) {
      std::cerr << "invalid: " << rezlat::to_string(v.error->kind) << ": "
                << v.error->message << "\n";
      return std::nullopt;
    }
    std::string label = std::filesystem::path(path).stem().string();
    return Loaded{std::move(*v.lattice), std::move(label)};
  } catch (const rezlat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return std::nullopt;
  }
}

// Resolve a comma/space separated element list to a filter mask.
// Prints to stderr and returns std::nullopt on unknown names or non-filters.
std::optional<rezlat::Mask> filter_or_report(const rezlat::Lattice& L,
                                             const std::string& csv) {
  auto m = rezlat::mask_from_names(L, csv);
  if (!m) {
    std::cerr << "error: '" << csv
              << "' contains a name that is not an element of the lattice\n";
    return std::nullopt;
  }
  if (!rezlat::is_filter(L, *m)) {
    std::cerr << "error: " << rezlat::set_to_string(L, *m)
              << " is not a filter (it must be nonempty, closed under the "
                 "product, and upward closed)\n";
    return std::nullopt;
  }
  return m;
}

int cmd_validate(const std::string& path) {
  auto loaded = load_or_report(path);
  if (!loaded) return kExitInvalidInput;
  const auto& L = loaded->lattice;
  auto c = rezlat::classify(L);
  int holds = 0;
  for (const auto& r : rezlat::identity_report(L)) holds += r.holds ? 1 : 0;
  std::cout << "valid: size=" << L.size << " bottom=" << L.name(L.bot)
            << " top=" << L.name(L.top)
            << " digest=" << rezlat::lattice_digest(L) << "\n";
  std::cout << "classification: prelinear=" << yn(c.prelinear)
            << " divisible=" << yn(c.divisible)
            << " involutive=" << yn(c.involutive) << " heyting=" << yn(c.heyting)
            << " mv=" << yn(c.mv) << " locally_finite=" << yn(c.locally_finite)
            << " totally_ordered=" << yn(c.totally_ordered) << "\n";
  std::cout << "identities: " << holds << "/17 hold\n";
  return kExitOk;
}

int cmd_filters(const std::string& path, bool proper_only) {
  auto loaded = load_or_report(path);
  if (!loaded) return kExitInvalidInput;
  const auto& L = loaded->lattice;
  auto fs = proper_only ? rezlat::proper_filters(L) : rezlat::all_filters(L);
  for (auto f : fs) std::cout << rezlat::set_to_string(L, f) << "\n";
  std::cout << "count: " << fs.size() << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& path, const std::string& filter_spec,
                 int max_n, bool as_json) {
  auto loaded = load_or_report(path);
  if (!loaded) return kExitInvalidInput;
  const auto& L = loaded->lattice;
  auto fm = filter_or_report(L, filter_spec);
  if (!fm) return kExitUsage;
  if (max_n <= 0) max_n = L.size;
  if (as_json) {
    std::cout << rezlat::dump_stable(
        rezlat::report_document(L, loaded->label, max_n));
    return kExitOk;
  }
  auto fc = rezlat::classify_filter(L, *fm, max_n);
  std::cout << "lattice: " << loaded->label << " (size=" << L.size
            << ", digest=" << rezlat::lattice_digest(L) << ")\n";
  std::cout << "filter: " << rezlat::set_to_string(L, *fm)
            << " proper=" << yn(fc.proper) << "\n";
  std::cout << "flags: maximal=" << yn(fc.maximal)
            << " semi_maximal=" << yn(fc.semi_maximal)
            << " prime=" << yn(fc.prime)
            << " prime2=" << yn(fc.prime_second_kind)
            << " prime3=" << yn(fc.prime_third_kind)
            << " boolean=" << yn(fc.boolean_kind)
            << " boolean2=" << yn(fc.boolean_second_kind) << "\n";
  for (const auto& row : fc.rows)
    std::cout << "n=" << row.n << ": implicative=" << yn(row.implicative)
              << " positive_implicative=" << yn(row.positive_implicative)
              << " boolean=" << yn(row.boolean_filter)
              << " normal=" << yn(row.normal)
              << " fantastic=" << yn(row.fantastic)
              << " obstinate=" << yn(row.obstinate) << "\n";
  return kExitOk;
}

int cmd_quotient(const std::string& path, const std::string& filter_spec,
                 const std::string& out_path) {
  auto loaded = load_or_report(path);
  if (!loaded) return kExitInvalidInput;
  const auto& L = loaded->lattice;
  auto fm = filter_or_report(L, filter_spec);
  if (!fm) return kExitUsage;
  auto q = rezlat::quotient(L, *fm);
  std::string text;
  if (q.trivial) {
    text = "# quotient of " + loaded->label + " by " +
           rezlat::set_to_string(L, *fm) +
           ": trivial (single congruence class)\n";
  } else {
    text = "# quotient of " + loaded->label + " by " +
           rezlat::set_to_string(L, *fm) + ": " +
           std::to_string(q.classes.size()) + " classes\n" +
           rezlat::serialize(q.algebra);
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    rezlat::write_text_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_theorems(const std::string& path, int max_n, bool as_json) {
  auto loaded = load_or_report(path);
  if (!loaded) return kExitInvalidInput;
  const auto& L = loaded->lattice;
  if (max_n <= 0) max_n = L.size;
  auto checks = rezlat::run_theorem_suite(L, loaded->label, max_n);
  int asserted_failures = 0, recorded = 0;
  for (const auto& c : checks)
    if (!c.passed) {
      if (rezlat::check_is_asserted(c.id)) ++asserted_failures;
      else ++recorded;
    }
  if (as_json) {
    std::cout << rezlat::dump_stable(
        rezlat::report_document(L, loaded->label, max_n));
  } else {
    std::cout << "lattice: " << loaded->label << " (size=" << L.size
              << ", digest=" << rezlat::lattice_digest(L) << ")\n";
    for (const auto& c : checks) {
      if (c.passed) {
        std::cout << "ok   " << c.id << " cases=" << c.cases << "\n";
      } else if (rezlat::check_is_asserted(c.id)) {
        std::cout << "FAIL " << c.id << " failures=" << c.failure_count
                  << " cases=" << c.cases;
        if (!c.witnesses.empty()) std::cout << " witness: " << c.witnesses[0];
        std::cout << "\n";
      } else {
        std::cout << "note " << c.id
                  << " refuted as recorded failures=" << c.failure_count
                  << " cases=" << c.cases;
        if (!c.witnesses.empty()) std::cout << " witness: " << c.witnesses[0];
        std::cout << "\n";
      }
    }
    std::cout << "summary: checks=" << checks.size()
              << " asserted_failures=" << asserted_failures
              << " recorded_refutations=" << recorded << "\n";
  }
  return asserted_failures > 0 ? kExitCounterexample : kExitOk;
}

int cmd_enumerate(int size, const std::string& out_dir, int jobs) {
  try {
    auto members = rezlat::enumerate_residuated(size, jobs);
    auto res = rezlat::write_corpus(members, out_dir);
    std::cout << "enumerated " << members.size() << " algebras of size "
              << size << "\n";
    std::cout << "corpus: " << out_dir << " (" << res.member_files.size()
              << " members + index.json)\n";
    return kExitOk;
  } catch (const rezlat::SizeOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_diagram(const std::string& path, int n, const std::string& format,
                bool lattice_level) {
  std::vector<rezlat::LabeledLattice> corpus;
  try {
    corpus = rezlat::load_corpus(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (corpus.empty()) {
    std::cerr << "error: no lattice files found at " << path << "\n";
    return kExitInvalidInput;
  }
  auto d = lattice_level ? rezlat::lattice_diagram(corpus, n)
                         : rezlat::implication_diagram(corpus, n);
  if (format == "dot") {
    std::cout << rezlat::to_dot(d);
  } else if (format == "json") {
    std::cout << rezlat::dump_stable(rezlat::detail::edges_json(d));
  } else {
    std::cerr << "error: unknown format '" << format << "' (use dot or json)\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite residuated lattice toolkit"};
  app.require_subcommand(1);

  std::string path, filter_spec, out_path, format = "dot";
  int max_n = 0, size = 0, jobs = 1, n = 1;
  bool proper_only = false, as_json = false, lattice_level = false;

  auto* v = app.add_subcommand("validate", "validate an operation-table file");
  v->add_option("file", path, "lattice file")->required();

  auto* f = app.add_subcommand("filters", "list all filters of the algebra");
  f->add_option("file", path, "lattice file")->required();
  f->add_flag("--proper", proper_only, "list only proper filters");

  auto* c = app.add_subcommand(
      "classify", "classify one filter across fold depths 1..N");
  c->add_option("file", path, "lattice file")->required();
  c->add_option("--filter", filter_spec,
                "filter elements, comma or space separated")
      ->required();
  c->add_option("--max-n", max_n, "largest fold depth (default: lattice size)");
  c->add_flag("--json", as_json, "emit the full JSON report document");

  auto* q = app.add_subcommand("quotient",
                               "construct the quotient by a filter");
  q->add_option("file", path, "lattice file")->required();
  q->add_option("--filter", filter_spec,
                "filter elements, comma or space separated")
      ->required();
  q->add_option("--out", out_path, "write the quotient table to this file");

  auto* t = app.add_subcommand("theorems", "run the full check suite");
  t->add_option("file", path, "lattice file")->required();
  t->add_option("--max-n", max_n, "largest fold depth (default: lattice size)");
  t->add_flag("--json", as_json, "emit the full JSON report document");

  auto* e = app.add_subcommand(
      "enumerate", "enumerate all algebras of a size into a corpus directory");
  e->add_option("--size", size, "number of elements (2..6)")->required();
  e->add_option("--out", out_path, "corpus output directory")->required();
  e->add_option("--jobs", jobs, "worker threads (default 1)");

  auto* d = app.add_subcommand(
      "diagram", "emit the implication diagram over a corpus dir or file");
  d->add_option("path", path, "corpus directory or single lattice file")
      ->required();
  d->add_option("--n", n, "fold depth")->required();
  d->add_option("--format", format, "dot (default) or json");
  d->add_flag("--lattice-level", lattice_level,
              "relate whole-algebra classes instead of filter classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (v->parsed()) return cmd_validate(path);
  if (f->parsed()) return cmd_filters(path, proper_only);
  if (c->parsed()) return cmd_classify(path, filter_spec, max_n, as_json);
  if (q->parsed()) return cmd_quotient(path, filter_spec, out_path);
  if (t->parsed()) return cmd_theorems(path, max_n, as_json);
  if (e->parsed()) return cmd_enumerate(size, out_path, jobs);
  if (d->parsed()) return cmd_diagram(path, n, format, lattice_level);
  return kExitUsage;
}
