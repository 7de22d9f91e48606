#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xyent/model.hpp"

namespace xyent {

// Inclusive arithmetic grid start, start+step, ..., stop. A single value is
// the degenerate range {v, v, 1}.
struct ValueRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static ValueRange single(double v) { return {v, v, 1.0}; }
  void validate() const;
  std::vector<double> values() const;
};

// "a:b:step" or a single number.
ValueRange parse_range(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

// Known sweep quantities, in canonical order: one-site quantities are
// emitted with r = 0, two-site quantities once per requested separation.
const std::vector<std::string>& known_quantities();

struct SweepSpec {
  ValueRange gamma = ValueRange::single(1.0);
  ValueRange lambda = ValueRange::single(1.0);
  ValueRange temperature = ValueRange::single(0.0);  // T = 0 means beta = inf
  std::vector<int> r_list = {1};
  std::vector<std::string> quantities;
  IntegrationSpec tolerance;

  void validate() const;
};

// One record of a parameter sweep; r = 0 marks one-site quantities.
struct ResultRow {
  double gamma = 0.0;
  double lambda = 0.0;
  double temperature = 0.0;
  int r = 0;
  std::string quantity;
  double value = 0.0;
};

// All quantities at a single parameter point.
std::vector<ResultRow> evaluate_point(double gamma, double lambda,
                                      double temperature, int r,
                                      const IntegrationSpec& spec = {});

// Full grid sweep; rows come back sorted lexicographically by
// (gamma, lambda, temperature, r, quantity).
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

// CSV schema: header "gamma,lambda,temperature,r,quantity,value", floats at
// 12 significant digits, newline-terminated rows.
std::string format_value(double v);
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<ResultRow>& rows,
                    const std::string& path);
std::vector<ResultRow> read_csv(std::istream& in);
std::vector<ResultRow> read_csv_file(const std::string& path);

// JSON mirror of SweepSpec for reproducible sweep recipes.
SweepSpec parse_job_file(const std::string& path);
SweepSpec parse_job_text(const std::string& text);

// Critical-point report: closed forms against the quadrature/determinant
// route, plus the concurrence per separation.
struct CriticalRow {
  int r = 0;
  double xx_closed = 0.0;
  double xx_quadrature = 0.0;
  double yy_closed = 0.0;
  double yy_quadrature = 0.0;
  double zz = 0.0;
  double concurrence = 0.0;
};

struct CriticalReport {
  std::vector<CriticalRow> rows;
  int first_zero_r = -1;  // smallest r with zero concurrence, -1 if none
};

CriticalReport critical_report(int r_max, const IntegrationSpec& spec = {});
void print_critical_report(const CriticalReport& report, std::ostream& out);

// Finite-chain oracle sweep, serialized side by side with the
// thermodynamic-limit values; n_sites = 0 marks the limit rows.
struct OracleSweep {
  int n_sites = 8;
  ValueRange gamma = ValueRange::single(1.0);
  ValueRange lambda = ValueRange::single(1.0);
  ValueRange temperature = ValueRange::single(0.0);
  int r_max = 1;
  IntegrationSpec tolerance;

  void validate() const;
};

struct OracleCsvRow {
  double gamma = 0.0;
  double lambda = 0.0;
  double temperature = 0.0;
  int r = 0;
  std::string quantity;
  double value = 0.0;
  int n_sites = 0;
};

std::vector<OracleCsvRow> run_oracle_comparison(const OracleSweep& spec);
void write_oracle_csv(const std::vector<OracleCsvRow>& rows,
                      std::ostream& out);
void write_oracle_csv_file(const std::vector<OracleCsvRow>& rows,
                           const std::string& path);

}  // namespace xyent
