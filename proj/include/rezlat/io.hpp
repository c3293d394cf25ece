#pragma once
// Text format for lattice operation tables, a normalizing serializer,
// JSON report documents with stable key order, and corpus persistence.
//
// File grammar ('#' starts a comment that runs to end of line; blank lines
// are ignored; sections appear in this order):
//   elements <k>
//   names    <k distinct tokens>
//   otimes   followed by k rows of k name tokens
//   arrow    followed by k rows of k name tokens
//   le       (optional) followed by k rows of k entries in {0,1}
// The `le` section never defines the order — the order is always derived
// from the arrow table — it is only cross-checked against the derived one.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rezlat/core.hpp"
#include "rezlat/enumerate.hpp"
#include "rezlat/filters.hpp"
#include "rezlat/nfold.hpp"
#include "rezlat/theorems.hpp"

namespace rezlat {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

enum class ParseErrorKind {
  SyntaxError,
  UnknownName,
  DimensionMismatch,
  DuplicateName,
};

inline const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::UnknownName: return "UnknownName";
    case ParseErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ParseErrorKind::DuplicateName: return "DuplicateName";
  }
  return "?";
}

struct ParseError : std::runtime_error {
  ParseErrorKind kind;
  int line;  // 1-based
  int col;   // 1-based
  ParseError(ParseErrorKind k, int line_, int col_, const std::string& what_)
      : std::runtime_error(std::string(to_string(k)) + " at line " +
                           std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + what_),
        kind(k),
        line(line_),
        col(col_) {}
};

// Parsed file: the raw tables plus the optional declared order.
struct LatticeFile {
  RawAlgebra raw;
  std::optional<std::vector<std::vector<bool>>> declared_le;
};

namespace detail {

struct Tok {
  std::string text;
  int line;
  int col;
};

inline std::vector<Tok> tokenize(const std::string& text) {
  std::vector<Tok> toks;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    int start_col = col;
    std::string t;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\r' && text[i] != '\n' && text[i] != '#') {
      t.push_back(text[i]);
      ++i;
      ++col;
    }
    toks.push_back({std::move(t), line, start_col});
  }
  return toks;
}

struct Cursor {
  const std::vector<Tok>& toks;
  size_t pos = 0;
  int last_line = 1;
  int last_col = 1;

  bool done() const { return pos >= toks.size(); }
  const Tok& peek() const { return toks[pos]; }
  const Tok& next() {
    const Tok& t = toks[pos++];
    last_line = t.line;
    last_col = t.col + static_cast<int>(t.text.size());
    return t;
  }
  [[noreturn]] void fail_here(ParseErrorKind k, const std::string& msg) const {
    if (done()) throw ParseError(k, last_line, last_col, msg);
    throw ParseError(k, toks[pos].line, toks[pos].col, msg);
  }
};

}  // namespace detail

inline LatticeFile parse_lattice_file(const std::string& text) {
  auto toks = detail::tokenize(text);
  detail::Cursor cur{toks};

  auto expect_keyword = [&](const char* kw) {
    if (cur.done())
      cur.fail_here(ParseErrorKind::SyntaxError,
                    std::string("expected '") + kw + "'");
    const auto& t = cur.peek();
    if (t.text != kw)
      cur.fail_here(ParseErrorKind::SyntaxError,
                    std::string("expected '") + kw + "', found '" + t.text +
                        "'");
    cur.next();
  };

  expect_keyword("elements");
  if (cur.done())
    cur.fail_here(ParseErrorKind::SyntaxError, "expected element count");
  const auto& count_tok = cur.peek();
  int k = 0;
  try {
    size_t used = 0;
    k = std::stoi(count_tok.text, &used);
    if (used != count_tok.text.size()) throw std::invalid_argument("trail");
  } catch (const std::exception&) {
    cur.fail_here(ParseErrorKind::SyntaxError,
                  "element count must be an integer, found '" +
                      count_tok.text + "'");
  }
  if (k < 1 || k > 26)
    cur.fail_here(ParseErrorKind::SyntaxError,
                  "element count must be between 1 and 26");
  cur.next();

  expect_keyword("names");
  std::vector<std::string> names;
  std::vector<detail::Tok> name_toks;
  for (int i = 0; i < k; ++i) {
    if (cur.done() || cur.peek().text == "otimes" ||
        cur.peek().text == "arrow" || cur.peek().text == "le")
      cur.fail_here(ParseErrorKind::DimensionMismatch,
                    "expected " + std::to_string(k) + " names, found " +
                        std::to_string(i));
    const auto& t = cur.next();
    for (size_t j = 0; j < names.size(); ++j)
      if (names[j] == t.text)
        throw ParseError(ParseErrorKind::DuplicateName, t.line, t.col,
                         "name '" + t.text + "' appears more than once");
    names.push_back(t.text);
    name_toks.push_back(t);
  }

  auto index_of_name = [&](const detail::Tok& t) {
    for (int i = 0; i < k; ++i)
      if (names[i] == t.text) return i;
    throw ParseError(ParseErrorKind::UnknownName, t.line, t.col,
                     "'" + t.text + "' is not a declared element name");
  };

  auto parse_table = [&](const char* kw) {
    expect_keyword(kw);
    std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        if (cur.done())
          cur.fail_here(ParseErrorKind::DimensionMismatch,
                        std::string("table '") + kw + "' ended after " +
                            std::to_string(r * k + c) + " of " +
                            std::to_string(k * k) + " entries");
        table[r][c] = index_of_name(cur.next());
      }
    return table;
  };

  LatticeFile out;
  out.raw.size = k;
  out.raw.names = names;
  out.raw.otimes = parse_table("otimes");
  out.raw.arrow = parse_table("arrow");

  if (!cur.done() && cur.peek().text == "le") {
    cur.next();
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        if (cur.done())
          cur.fail_here(ParseErrorKind::DimensionMismatch,
                        "table 'le' ended after " + std::to_string(r * k + c) +
                            " of " + std::to_string(k * k) + " entries");
        const auto& t = cur.next();
        if (t.text == "0") le[r][c] = false;
        else if (t.text == "1") le[r][c] = true;
        else
          throw ParseError(ParseErrorKind::SyntaxError, t.line, t.col,
                           "'le' entries must be 0 or 1, found '" + t.text +
                               "'");
      }
    out.declared_le = std::move(le);
  }

  if (!cur.done())
    cur.fail_here(ParseErrorKind::SyntaxError,
                  "unexpected token '" + cur.peek().text + "' after tables");
  return out;
}

// Parse, validate, and cross-check the optional declared order. Parse errors
// throw ParseError; algebraic problems come back in the ValidateResult.
inline ValidateResult load_lattice(const std::string& text) {
  LatticeFile f = parse_lattice_file(text);
  ValidateResult v = validate(f.raw);
  if (v.ok() && f.declared_le) {
    const Lattice& L = *v.lattice;
    for (int x = 0; x < L.size; ++x)
      for (int y = 0; y < L.size; ++y)
        if ((*f.declared_le)[x][y] != L.le(x, y)) {
          ValidateResult bad;
          bad.error = ValidationError{
              ValidationErrorKind::OrderMismatch,
              {x, y},
              "declared order disagrees with the arrow-derived order at (" +
                  L.name(x) + ", " + L.name(y) + ")"};
          return bad;
        }
  }
  return v;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

// Normalized text form: fixed section order, single spaces, no comments,
// no `le` section (the order is derivable). parse(serialize(L)) validates
// back to L under the identity naming.
inline std::string serialize(const Lattice& L) {
  std::ostringstream out;
  out << "elements " << L.size << "\n";
  out << "names";
  for (int i = 0; i < L.size; ++i) out << " " << L.name(i);
  out << "\n";
  auto table = [&](const char* kw, const std::vector<std::vector<int>>& t) {
    out << kw << "\n";
    for (int r = 0; r < L.size; ++r) {
      for (int c = 0; c < L.size; ++c) {
        if (c) out << " ";
        out << L.name(t[r][c]);
      }
      out << "\n";
    }
  };
  table("otimes", L.otimes);
  table("arrow", L.arrow);
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON report document
// ---------------------------------------------------------------------------

inline const char* kReportSchemaVersion = "1";

namespace detail {

inline ordered_json names_array(const Lattice& L, Mask m) {
  ordered_json a = ordered_json::array();
  for (Elem x : to_elements(m, L)) a.push_back(L.name(x));
  return a;
}

inline ordered_json classification_json(const Lattice& L) {
  auto c = classify(L);
  ordered_json j;
  j["prelinear"] = c.prelinear;
  j["divisible"] = c.divisible;
  j["involutive"] = c.involutive;
  j["heyting"] = c.heyting;
  j["mv"] = c.mv;
  j["locally_finite"] = c.locally_finite;
  j["totally_ordered"] = c.totally_ordered;
  return j;
}

inline ordered_json identities_json(const Lattice& L) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : identity_report(L)) {
    ordered_json j;
    j["id"] = r.id;
    j["holds"] = r.holds;
    if (!r.holds) {
      ordered_json w = ordered_json::array();
      for (Elem x : r.witness) w.push_back(L.name(x));
      j["witness"] = w;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

inline ordered_json filter_classification_json(const Lattice& L, Mask f,
                                               int n_max) {
  auto fc = classify_filter(L, f, n_max);
  ordered_json j;
  j["elements"] = names_array(L, f);
  j["proper"] = fc.proper;
  j["maximal"] = fc.maximal;
  j["semi_maximal"] = fc.semi_maximal;
  j["prime"] = fc.prime;
  j["prime_second_kind"] = fc.prime_second_kind;
  j["prime_third_kind"] = fc.prime_third_kind;
  j["boolean"] = fc.boolean_kind;
  j["boolean_second_kind"] = fc.boolean_second_kind;
  j["exponent_bound"] = fc.exponent_bound;
  ordered_json rows = ordered_json::array();
  for (const auto& row : fc.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["implicative"] = row.implicative;
    r["positive_implicative"] = row.positive_implicative;
    r["boolean"] = row.boolean_filter;
    r["normal"] = row.normal;
    r["fantastic"] = row.fantastic;
    r["obstinate"] = row.obstinate;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline ordered_json lattice_rows_json(const Lattice& L, int n_max) {
  ordered_json rows = ordered_json::array();
  for (int n = 1; n <= n_max; ++n) {
    auto c = classify_lattice_n(L, n);
    ordered_json r;
    r["n"] = n;
    r["implicative"] = c.implicative_rl;
    r["positive_implicative"] = c.positive_implicative_rl;
    r["fantastic"] = c.fantastic_rl;
    r["boolean"] = c.boolean_rl;
    r["obstinate"] = c.obstinate_rl;
    rows.push_back(std::move(r));
  }
  return rows;
}

inline ordered_json checks_json(const std::vector<TheoremCheck>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["id"] = c.id;
    j["kind"] = to_string(c.kind);
    j["scope"] = to_string(c.scope);
    j["statement"] = c.statement;
    j["asserted"] = check_is_asserted(c.id);
    j["passed"] = c.passed;
    j["cases"] = c.cases;
    j["failure_count"] = c.failure_count;
    ordered_json w = ordered_json::array();
    for (const auto& s : c.witnesses) w.push_back(s);
    j["witnesses"] = std::move(w);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline ordered_json edges_json(const DiagramEdges& d) {
  ordered_json j;
  j["name"] = d.name;
  j["n"] = d.n;
  ordered_json nodes = ordered_json::array();
  for (const auto& s : d.nodes) nodes.push_back(s);
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& e : d.edges) {
    ordered_json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["status"] = to_string(e.status);
    je["instances"] = e.instances;
    ordered_json ev = ordered_json::array();
    for (const auto& s : e.evidence) ev.push_back(s);
    je["evidence"] = std::move(ev);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace detail

// Full report for one algebra: identity of the lattice, its classification,
// every filter's per-n classification matrix, the lattice-level matrix, the
// complete check suite, and single-member implication diagrams per n.
// Key order is fixed, so serialization is byte-stable across runs.
inline ordered_json report_document(const Lattice& L, const std::string& label,
                                    int n_max = 0) {
  if (n_max <= 0) n_max = L.size;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;

  ordered_json lat;
  lat["label"] = label;
  lat["size"] = L.size;
  lat["digest"] = lattice_digest(L);
  ordered_json nm = ordered_json::array();
  for (int i = 0; i < L.size; ++i) nm.push_back(L.name(i));
  lat["names"] = std::move(nm);
  lat["bottom"] = L.name(L.bot);
  lat["top"] = L.name(L.top);
  doc["lattice"] = std::move(lat);

  doc["classification"] = detail::classification_json(L);
  doc["identities"] = detail::identities_json(L);
  doc["lattice_rows"] = detail::lattice_rows_json(L, n_max);

  ordered_json filters = ordered_json::array();
  for (Mask f : all_filters(L))
    filters.push_back(detail::filter_classification_json(L, f, n_max));
  doc["filters"] = std::move(filters);

  auto checks = run_theorem_suite(L, label, n_max);
  int asserted_failures = 0, recorded_refutations = 0;
  for (const auto& c : checks)
    if (!c.passed) {
      if (check_is_asserted(c.id)) ++asserted_failures;
      else ++recorded_refutations;
    }
  ordered_json th;
  th["checks"] = detail::checks_json(checks);
  th["asserted_failures"] = asserted_failures;
  th["recorded_refutations"] = recorded_refutations;
  doc["theorems"] = std::move(th);

  std::vector<LabeledLattice> corpus;
  corpus.push_back({label, L});
  ordered_json fd = ordered_json::array();
  ordered_json ld = ordered_json::array();
  for (int n = 1; n <= n_max; ++n) {
    fd.push_back(detail::edges_json(implication_diagram(corpus, n)));
    ld.push_back(detail::edges_json(lattice_diagram(corpus, n)));
  }
  doc["filter_diagrams"] = std::move(fd);
  doc["lattice_diagrams"] = std::move(ld);
  return doc;
}

inline std::string dump_stable(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// corpus persistence
// ---------------------------------------------------------------------------

// One normalized lattice file per member plus an index with digests, sizes
// and classification summaries. Members arrive canonical and sorted, so the
// directory contents are byte-deterministic.
struct CorpusWriteResult {
  std::vector<std::string> member_files;
  std::string index_file;
};

inline CorpusWriteResult write_corpus(const std::vector<Lattice>& members,
                                      const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  CorpusWriteResult res;
  ordered_json index;
  index["schema_version"] = kReportSchemaVersion;
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < members.size(); ++i) {
    const Lattice& L = members[i];
    char buf[32];
    std::snprintf(buf, sizeof(buf), "rl%d_%03zu.rlat", L.size, i);
    std::string fname = buf;
    std::string path = (fs::path(dir) / fname).string();
    write_text_file(path, serialize(L));
    res.member_files.push_back(path);

    ordered_json e;
    e["file"] = fname;
    e["size"] = L.size;
    e["digest"] = lattice_digest(L);
    e["classification"] = detail::classification_json(L);
    arr.push_back(std::move(e));
  }
  index["members"] = std::move(arr);
  res.index_file = (fs::path(dir) / "index.json").string();
  write_text_file(res.index_file, dump_stable(index));
  return res;
}

// Loads every .rlat member of a corpus directory (sorted by file name), or a
// single lattice file, into labeled lattices. Throws on any invalid member.
inline std::vector<LabeledLattice> load_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.path().extension() == ".rlat")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<LabeledLattice> out;
  for (const auto& f : files) {
    auto v = load_lattice(read_text_file(f));
    if (!v.ok())
      throw std::runtime_error(f + ": " + v.error->message);
    out.push_back({fs::path(f).stem().string(), std::move(*v.lattice)});
  }
  return out;
}

}  // namespace rezlat
