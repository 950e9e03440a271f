#pragma once

#include "barth/normality.hpp"
#include "barth/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace barth {

/// One complete intersection CI(d_1..d_r) in P^n and everything the library
/// computes for it at secant order j.
struct CensusRow {
  // inputs
  long n = 0;
  long j = 0;
  std::vector<long> degrees;

  // values
  std::vector<Integer> chern;      // c_0..c_r of N = sum O(d_i)
  Integer degree;                  // prod d_i
  std::vector<Integer> top_twists; // c_r(N(-i)), i = 0..j
  Rational secant_degree;          // (j+1)-secants through a point
  Rational bisecant;
  Rational trisecant;
  Outcome jnormal = Outcome::inapplicable;
  Outcome twonormal = Outcome::inapplicable;
  Outcome zak = Outcome::inapplicable;

  // flags
  bool degenerate = false;
  bool non_integral = false;
  bool d_consistent = true;

  long codim() const { return static_cast<long>(degrees.size()); }
};

struct CensusSpec {
  long codim;
  long degree_lo, degree_hi;
  long n_lo, n_hi;
  long j;
};

enum class CensusFormat { csv, json };

/// Recomputes a row from its input fields. Throws DomainError unless
/// n > r and every degree is positive.
CensusRow compute_census_row(long n, std::vector<long> degrees, long j);

/// Rows ordered by n, then by nondecreasing degree tuples in lexicographic
/// order. Rows are evaluated in parallel; the order never depends on it.
std::vector<CensusRow> run_census(const CensusSpec& spec);

std::string census_csv_header();
std::string to_csv(const CensusRow& row);
nlohmann::ordered_json to_json(const CensusRow& row);

void write_census(const std::vector<CensusRow>& rows, CensusFormat format, std::ostream& out);

struct RecheckResult {
  std::size_t rows = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Re-reads a census file, recomputes each row from its inputs and compares
/// the serialized form byte for byte.
RecheckResult recheck_census(std::istream& in, CensusFormat format);

} // namespace barth
