#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorlie/algebra_file.hpp"

namespace colorlie::report {

/// Bad command-line input that is not a file syntax error (e.g. an unusable
/// parameter value). Maps to exit code 2 like ParseError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

/// Parses "text", "csv" or "json"; throws InputError otherwise.
Format parse_format(const std::string& name);

/// A rendered report and the exit code it implies: 0 success, 1 mathematical failure.
struct Output {
  std::string body;
  int exit_code = 0;
};

constexpr int default_betti_degree = 12;
constexpr int default_series_degree = 40;

/// `param` is a scalar in the scalar grammar or "generic"; when absent the
/// file's own `parameter` is used, and t stays generic if there is none.
struct Options {
  std::optional<int> max_degree;
  std::optional<std::string> param;
  bool representatives = false;
  Format format = Format::text;
};

Output check(const AlgebraFile& file, const Options& opt);
Output cohomology(const AlgebraFile& file, const Options& opt);
/// Betti numbers up to max_degree (default 40) and their recognized series.
Output series(const AlgebraFile& file, const Options& opt);
/// Recognition of an explicit integer sequence.
Output series(const std::vector<std::int64_t>& seq, const Options& opt);
Output dual(const AlgebraFile& file, const Options& opt);
Output hilbert(const AlgebraFile& file, const Options& opt);
Output pbw(const AlgebraFile& file, const Options& opt);

struct TableRow {
  std::string id;
  /// Printed parameter value, "generic", or "-" for parameter-free rows.
  std::string param;
  /// Parameter actually placed in the brackets after reconciliation.
  std::string bracket_param;
  std::vector<std::int64_t> h;
  /// Recognized from the first 41 Betti numbers; "inconclusive" otherwise.
  std::string series;
  std::string expected;
  bool pass = false;
};

/// Every catalog entry at the acceptance parameter samples, followed by the
/// abelian family. Rows are ordered as listed regardless of evaluation order.
std::vector<TableRow> table_rows(int max_degree);
Output table(const Options& opt);

}  // namespace colorlie::report
