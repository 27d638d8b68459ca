#ifndef LATTICA_LAWS_HPP_
#define LATTICA_LAWS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lattica/error.hpp"
#include "lattica/generate.hpp"
#include "lattica/io.hpp"

namespace lattica {

struct LawOptions {
  std::uint64_t seed = default_seed;
  std::size_t max_sem = 3;   // |Sem| cap for the category suites
  std::size_t count = 50;    // random instances per corpus
  Limits limits;
};

struct LawReport {
  std::string suite;
  bool ok = true;
  std::size_t instances = 0;
  std::vector<std::string> lines;
  /// Null when ok. Otherwise {"law", "statement", "instance", "detail"}; the
  /// instance is the first failure of a corpus ordered by size.
  Json witness;
};

/// thm3.6, thm4.4, prop5.6, prop5.7, lemma5.9, prop5.10, prop6.9, thm6.7, cor6.17.
const std::vector<std::string>& law_suite_names();

/// Throws std::invalid_argument for an unknown suite name.
LawReport run_law_suite(const std::string& name, const LawOptions& options = {});

}  // namespace lattica

#endif  // LATTICA_LAWS_HPP_
