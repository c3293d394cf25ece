#pragma once
// Shared test helpers: fixture loading and element-set shorthand.

#include <stdexcept>
#include <string>
#include <vector>

#include "rezlat/io.hpp"

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must be defined by the build"
#endif

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name + ".rlat";
}

inline rezlat::Lattice load_fixture(const std::string& name) {
  auto v = rezlat::load_lattice(rezlat::read_text_file(fixture_path(name)));
  if (!v.ok())
    throw std::runtime_error("fixture " + name +
                             " failed to validate: " + v.error->message);
  return std::move(*v.lattice);
}

// Element-set mask from a comma separated name list; throws on bad names.
inline rezlat::Mask fset(const rezlat::Lattice& L, const std::string& csv) {
  auto m = rezlat::mask_from_names(L, csv);
  if (!m) throw std::runtime_error("bad element list: " + csv);
  return *m;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"expob1", "expob2", "exp",
                                                 "expp", "exim3"};
  return names;
}

// The five valid fixtures plus every enumerated algebra up to max_size,
// labeled for suite runs.
inline std::vector<rezlat::LabeledLattice> fixtures_and_corpus(int max_size) {
  std::vector<rezlat::LabeledLattice> out;
  for (const auto& n : fixture_names()) out.push_back({n, load_fixture(n)});
  for (int k = 2; k <= max_size; ++k) {
    auto members = rezlat::enumerate_residuated(k);
    for (size_t i = 0; i < members.size(); ++i)
      out.push_back({"rl" + std::to_string(k) + "_" + std::to_string(i),
                     std::move(members[i])});
  }
  return out;
}
