#include "barth/census.hpp"

#include "barth/bundles.hpp"
#include "barth/errors.hpp"
#include "barth/parallel.hpp"
#include "barth/secants.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace barth {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt_one, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0)
      out += sep;
    out += fmt_one(xs[i]);
  }
  return out;
}

std::string int_str(const Integer& z) { return z.get_str(); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

long to_long(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(fmt::format("census line {}: bad integer '{}'", line, s), 0);
  }
}

// Nondecreasing tuples of length r over [lo, hi], lexicographic.
void enumerate_tuples(long r, long lo, long hi, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
  if (static_cast<long>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  const long start = cur.empty() ? lo : cur.back();
  for (long d = start; d <= hi; ++d) {
    cur.push_back(d);
    enumerate_tuples(r, lo, hi, cur, out);
    cur.pop_back();
  }
}

} // namespace

CensusRow compute_census_row(long n, std::vector<long> degrees, long j) {
  const long r = static_cast<long>(degrees.size());
  if (r < 1)
    throw DomainError("a complete intersection needs at least one degree");
  if (n <= r)
    throw DomainError(fmt::format("CI of codimension {} in P^{} is not positive-dimensional", r, n));
  if (j < 1)
    throw DomainError(fmt::format("secant order j = {} must be positive", j));
  for (long d : degrees) {
    if (d < 1)
      throw DomainError(fmt::format("hypersurface degree {} must be positive", d));
  }

  CensusRow row;
  row.n = n;
  row.j = j;
  row.degrees = degrees;

  BundleSpec e = line_bundle(static_cast<int>(n), degrees.front());
  for (std::size_t i = 1; i < degrees.size(); ++i)
    e = direct_sum(e, line_bundle(static_cast<int>(n), degrees[i]));

  // Elementary symmetric functions of the degrees, untruncated.
  row.chern.assign(static_cast<std::size_t>(r) + 1, 0);
  row.chern[0] = 1;
  for (long d : degrees) {
    for (long k = r; k >= 1; --k)
      row.chern[k] += row.chern[k - 1] * d;
  }
  row.degree = 1;
  for (long d : degrees)
    row.degree *= d;

  const ChernVector normal(static_cast<int>(n), row.chern);
  for (long i = 0; i <= j; ++i)
    row.top_twists.push_back(top_chern_twisted(normal, -i));

  const SecantDegree sd = multisecant_degree(normal, static_cast<int>(j));
  row.secant_degree = sd.value;
  row.degenerate = sd.degenerate;
  row.non_integral = sd.non_integral;
  row.bisecant = bisecant_degree(normal);
  row.trisecant = trisecant_closed(normal);
  row.jnormal = check_jnormal_bundle(e, j).outcome;
  row.twonormal = check_2normal(n - r, r, normal).outcome;
  row.zak = check_linear_normality_zak(n, r).outcome;
  row.d_consistent = normal.degree_consistent();
  return row;
}

std::vector<CensusRow> run_census(const CensusSpec& spec) {
  if (spec.codim < 1)
    throw DomainError(fmt::format("codimension {} must be positive", spec.codim));
  if (spec.degree_lo < 1 || spec.degree_lo > spec.degree_hi)
    throw DomainError(fmt::format("degree range {}..{} is empty or nonpositive", spec.degree_lo,
                                  spec.degree_hi));
  if (spec.n_lo <= spec.codim || spec.n_lo > spec.n_hi)
    throw DomainError(fmt::format("ambient range {}..{} must be nonempty with n > r = {}",
                                  spec.n_lo, spec.n_hi, spec.codim));

  std::vector<std::vector<long>> tuples;
  std::vector<long> cur;
  enumerate_tuples(spec.codim, spec.degree_lo, spec.degree_hi, cur, tuples);

  struct Input {
    long n;
    const std::vector<long>* degrees;
  };
  std::vector<Input> inputs;
  for (long n = spec.n_lo; n <= spec.n_hi; ++n) {
    for (const auto& t : tuples)
      inputs.push_back({n, &t});
  }
  spdlog::debug("census: {} rows", inputs.size());
  return parallel_map(inputs.size(), [&](std::size_t i) {
    return compute_census_row(inputs[i].n, *inputs[i].degrees, spec.j);
  });
}

std::string census_csv_header() {
  return "n,r,degrees,j,chern,degree,top_twists,secant_degree,bisecant,trisecant,"
         "jnormal,twonormal,zak,degenerate,non_integral,d_consistent";
}

std::string to_csv(const CensusRow& row) {
  const auto flag = [](bool b) { return b ? "1" : "0"; };
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", row.n, row.codim(),
                     join(row.degrees, [](long d) { return std::to_string(d); }), row.j,
                     join(row.chern, int_str), int_str(row.degree), join(row.top_twists, int_str),
                     to_string(row.secant_degree), to_string(row.bisecant),
                     to_string(row.trisecant), to_string(row.jnormal), to_string(row.twonormal),
                     to_string(row.zak), flag(row.degenerate), flag(row.non_integral),
                     flag(row.d_consistent));
}

nlohmann::ordered_json to_json(const CensusRow& row) {
  const auto strings = [](const std::vector<Integer>& xs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : xs)
      arr.push_back(x.get_str());
    return arr;
  };
  nlohmann::ordered_json j;
  j["inputs"] = {{"n", row.n}, {"r", row.codim()}, {"degrees", row.degrees}, {"j", row.j}};
  j["values"] = {{"chern", strings(row.chern)},
                 {"degree", row.degree.get_str()},
                 {"top_twists", strings(row.top_twists)},
                 {"secant_degree", to_string(row.secant_degree)},
                 {"bisecant", to_string(row.bisecant)},
                 {"trisecant", to_string(row.trisecant)},
                 {"verdicts",
                  {{"jnormal", std::string(to_string(row.jnormal))},
                   {"twonormal", std::string(to_string(row.twonormal))},
                   {"zak", std::string(to_string(row.zak))}}}};
  j["flags"] = {{"degenerate", row.degenerate},
                {"non_integral", row.non_integral},
                {"d_consistent", row.d_consistent}};
  j["citations"] = {"multisecant-product-formula", "j-normality-for-zero-loci",
                    "quadratic-normality", "zak-linear-normality"};
  return j;
}

void write_census(const std::vector<CensusRow>& rows, CensusFormat format, std::ostream& out) {
  if (format == CensusFormat::csv) {
    out << census_csv_header() << '\n';
    for (const auto& row : rows)
      out << to_csv(row) << '\n';
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows)
    arr.push_back(to_json(row));
  out << arr.dump(2) << '\n';
}

RecheckResult recheck_census(std::istream& in, CensusFormat format) {
  RecheckResult result;
  if (format == CensusFormat::csv) {
    std::string line;
    if (!std::getline(in, line) || line != census_csv_header())
      throw ParseError("census CSV header missing or altered", 0);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty())
        continue;
      const auto fields = split(line, ',');
      if (fields.size() != 16)
        throw ParseError(fmt::format("census line {}: expected 16 fields, got {}", lineno,
                                     fields.size()),
                         0);
      std::vector<long> degrees;
      for (const auto& d : split(fields[2], ';'))
        degrees.push_back(to_long(d, lineno));
      if (to_long(fields[1], lineno) != static_cast<long>(degrees.size()))
        throw ParseError(fmt::format("census line {}: r disagrees with the degree list", lineno), 0);
      const std::string again =
          to_csv(compute_census_row(to_long(fields[0], lineno), degrees, to_long(fields[3], lineno)));
      ++result.rows;
      if (again != line)
        result.mismatches.push_back(fmt::format("line {}: stored '{}' recomputed '{}'", lineno,
                                                line, again));
    }
    return result;
  }

  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("census JSON: {}", e.what()), e.byte);
  }
  if (!doc.is_array())
    throw ParseError("census JSON must be an array of rows", 0);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& stored = doc[i];
    try {
      const auto& inputs = stored.at("inputs");
      const auto again = to_json(compute_census_row(inputs.at("n").get<long>(),
                                                    inputs.at("degrees").get<std::vector<long>>(),
                                                    inputs.at("j").get<long>()));
      ++result.rows;
      if (again.dump() != stored.dump())
        result.mismatches.push_back(fmt::format("row {}: stored {} recomputed {}", i,
                                                stored.dump(), again.dump()));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(fmt::format("census JSON row {}: {}", i, e.what()), 0);
    }
  }
  return result;
}

} // namespace barth
