#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace barth {

struct SuiteReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;
};

/// recursion-oracle, trisecant-identity, lemma51, cterm, bterm-experiment.
const std::vector<std::string>& suite_names();

/// Runs one named invariant suite. Randomized suites draw trial t from
/// TrialRng(seed, t), so any counterexample can be replayed from the printed
/// seed and trial index. Exhaustive and fixed-grid suites ignore trials/seed.
/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view name, long trials, std::uint64_t seed);

/// The fixed 50-case grid of the (b)-term experiment, for reuse in tests.
struct BTermCase {
  int n;
  std::vector<long> c;
};
std::vector<BTermCase> bterm_grid();

} // namespace barth
