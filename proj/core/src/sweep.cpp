#include "xyent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xyent/entanglement.hpp"
#include "xyent/states.hpp"

namespace xyent {
namespace {

double beta_from_temperature(double t) {
  if (!(t >= 0.0)) throw DomainError("temperature must be nonnegative");
  return t == 0.0 ? beta_infinity : 1.0 / t;
}

double clamp_report(double v) { return std::clamp(v, -1.0, 1.0); }

bool is_two_site(const std::string& q) {
  return q == "xx" || q == "yy" || q == "zz" || q == "concurrence" ||
         q == "eof";
}

void check_quantities(const std::vector<std::string>& quantities) {
  if (quantities.empty()) {
    throw DomainError("at least one quantity must be requested");
  }
  const auto& known = known_quantities();
  for (const auto& q : quantities) {
    if (std::find(known.begin(), known.end(), q) == known.end()) {
      std::ostringstream msg;
      msg << "unknown quantity '" << q << "'; valid names:";
      for (const auto& k : known) msg << ' ' << k;
      throw DomainError(msg.str());
    }
  }
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a,
                                         const ResultRow& b) {
    return std::tie(a.gamma, a.lambda, a.temperature, a.r, a.quantity) <
           std::tie(b.gamma, b.lambda, b.temperature, b.r, b.quantity);
  });
}

// Emit the requested quantities at one grid point into rows.
void emit_point(double gamma, double lambda, double temperature,
                const std::vector<int>& r_list,
                const std::vector<std::string>& quantities,
                const IntegrationSpec& tol, std::vector<ResultRow>& rows) {
  const ModelParams params{gamma, lambda, beta_from_temperature(temperature)};
  params.validate();

  auto push = [&](int r, const char* q, double v) {
    rows.push_back(ResultRow{gamma, lambda, temperature, r, q, v});
  };

  bool need_thermal_site =
      std::find(quantities.begin(), quantities.end(), "sz") !=
          quantities.end() ||
      std::find(quantities.begin(), quantities.end(), "entropy_thermal") !=
          quantities.end();
  bool need_ground_site =
      std::find(quantities.begin(), quantities.end(), "sx") !=
          quantities.end() ||
      std::find(quantities.begin(), quantities.end(), "entropy_ground") !=
          quantities.end();
  bool need_two_site = std::any_of(quantities.begin(), quantities.end(),
                                   [](const std::string& q) {
                                     return is_two_site(q);
                                   });

  if (need_thermal_site) {
    const OneSiteState site = one_site_thermal(params, tol);
    for (const auto& q : quantities) {
      if (q == "sz") push(0, "sz", clamp_report(site.bz()));
      if (q == "entropy_thermal") {
        push(0, "entropy_thermal", von_neumann_entropy(site));
      }
    }
  }
  if (need_ground_site) {
    const OneSiteState site = one_site_ground(params, tol);
    for (const auto& q : quantities) {
      if (q == "sx") push(0, "sx", clamp_report(site.bx()));
      if (q == "entropy_ground") {
        push(0, "entropy_ground", von_neumann_entropy(site));
      }
    }
  }
  if (need_two_site) {
    const int r_max = *std::max_element(r_list.begin(), r_list.end());
    const GVector g(params, r_max, tol);
    for (int r : r_list) {
      const CorrelatorSet c = correlators(r, g);
      const TwoSiteState state(c.sz, c.xx, c.yy, c.zz);
      for (const auto& q : quantities) {
        if (q == "xx") push(r, "xx", clamp_report(c.xx));
        if (q == "yy") push(r, "yy", clamp_report(c.yy));
        if (q == "zz") push(r, "zz", clamp_report(c.zz));
        if (q == "concurrence") {
          push(r, "concurrence", concurrence_x_state(state));
        }
        if (q == "eof") {
          push(r, "eof", eof_from_concurrence(concurrence_x_state(state)));
        }
      }
    }
  }
}

void write_text_file(const std::string& text, const std::string& path) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp(path + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error("failed while writing '" + path + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("failed to move output into place at '" + path + "'");
  }
}

constexpr const char* kCsvHeader = "gamma,lambda,temperature,r,quantity,value";
constexpr const char* kOracleCsvHeader =
    "gamma,lambda,temperature,r,quantity,value,n_sites";

}  // namespace

void ValueRange::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw DomainError("range bounds must be finite");
  }
  if (!(step > 0.0)) throw DomainError("range step must be positive");
  if (stop < start) throw DomainError("range stop must not precede start");
}

std::vector<double> ValueRange::values() const {
  validate();
  const long long count =
      static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) out.push_back(start + i * step);
  return out;
}

ValueRange parse_range(const std::string& text) {
  const auto first = text.find(':');
  try {
    std::size_t used = 0;
    if (first == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw SchemaError("trailing text in '" + text + "'");
      return ValueRange::single(v);
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
      throw SchemaError("range must be 'start:stop:step', got '" + text + "'");
    }
    ValueRange r;
    r.start = std::stod(text.substr(0, first));
    r.stop = std::stod(text.substr(first + 1, second - first - 1));
    r.step = std::stod(text.substr(second + 1));
    r.validate();
    return r;
  } catch (const std::invalid_argument&) {
    throw SchemaError("cannot parse range '" + text + "'");
  } catch (const std::out_of_range&) {
    throw SchemaError("number out of range in '" + text + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw SchemaError("cannot parse integer list '" + text + "'");
    }
  }
  if (out.empty()) throw SchemaError("empty integer list");
  return out;
}

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> names = {
      "sz", "sx", "xx", "yy", "zz", "entropy_ground", "entropy_thermal",
      "concurrence", "eof"};
  return names;
}

void SweepSpec::validate() const {
  gamma.validate();
  lambda.validate();
  temperature.validate();
  tolerance.validate();
  check_quantities(quantities);
  if (r_list.empty()) throw DomainError("r list must be nonempty");
  for (int r : r_list) {
    if (r < 1) throw DomainError("separations must satisfy r >= 1");
  }
}

std::vector<ResultRow> evaluate_point(double gamma, double lambda,
                                      double temperature, int r,
                                      const IntegrationSpec& spec) {
  const ModelParams params{gamma, lambda, beta_from_temperature(temperature)};
  params.validate();
  if (r < 1) throw DomainError("separation must satisfy r >= 1");

  std::vector<std::string> quantities = {"sz", "entropy_thermal",
                                         "xx", "yy", "zz",
                                         "concurrence", "eof"};
  if (gamma == 1.0 && temperature == 0.0) {
    quantities.emplace_back("sx");
    quantities.emplace_back("entropy_ground");
  }
  std::vector<ResultRow> rows;
  emit_point(gamma, lambda, temperature, {r}, quantities, spec, rows);
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<ResultRow> rows;
  for (double gamma : spec.gamma.values()) {
    for (double lambda : spec.lambda.values()) {
      for (double temperature : spec.temperature.values()) {
        emit_point(gamma, lambda, temperature, spec.r_list, spec.quantities,
                   spec.tolerance, rows);
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::string format_value(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    out << format_value(row.gamma) << ',' << format_value(row.lambda) << ','
        << format_value(row.temperature) << ',' << row.r << ',' << row.quantity
        << ',' << format_value(row.value) << '\n';
  }
}

void write_csv_file(const std::vector<ResultRow>& rows,
                    const std::string& path) {
  std::ostringstream text;
  write_csv(rows, text);
  write_text_file(text.str(), path);
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw SchemaError(std::string("CSV header must be exactly '") +
                      kCsvHeader + "'");
  }
  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 6 fields, got " << fields.size();
      throw SchemaError(msg.str());
    }
    try {
      ResultRow row;
      row.gamma = std::stod(fields[0]);
      row.lambda = std::stod(fields[1]);
      row.temperature = std::stod(fields[2]);
      row.r = std::stoi(fields[3]);
      row.quantity = fields[4];
      row.value = std::stod(fields[5]);
      if (!std::isfinite(row.value)) {
        throw SchemaError("non-finite value in CSV");
      }
      rows.push_back(std::move(row));
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception&) {
      std::ostringstream msg;
      msg << "line " << line_no << ": cannot parse '" << line << "'";
      throw SchemaError(msg.str());
    }
  }
  return rows;
}

std::vector<ResultRow> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_csv(in);
}

namespace {

ValueRange range_from_json(const nlohmann::json& j, const char* field) {
  if (j.is_number()) return ValueRange::single(j.get<double>());
  if (j.is_object()) {
    for (const auto& key : {"from", "to", "step"}) {
      if (!j.contains(key)) {
        throw SchemaError(std::string("range object for '") + field +
                          "' needs 'from', 'to' and 'step'");
      }
    }
    ValueRange r{j.at("from").get<double>(), j.at("to").get<double>(),
                 j.at("step").get<double>()};
    r.validate();
    return r;
  }
  throw SchemaError(std::string("field '") + field +
                    "' must be a number or a {from, to, step} object");
}

}  // namespace

SweepSpec parse_job_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid job JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("job file must hold a JSON object");

  SweepSpec spec;
  try {
    if (!j.contains("lambda")) throw SchemaError("job file needs 'lambda'");
    spec.lambda = range_from_json(j.at("lambda"), "lambda");
    if (j.contains("gamma")) spec.gamma = range_from_json(j.at("gamma"), "gamma");
    if (j.contains("temperature")) {
      spec.temperature = range_from_json(j.at("temperature"), "temperature");
    }
    if (j.contains("r")) {
      if (j.at("r").is_number_integer()) {
        spec.r_list = {j.at("r").get<int>()};
      } else if (j.at("r").is_array()) {
        spec.r_list = j.at("r").get<std::vector<int>>();
      } else {
        throw SchemaError("'r' must be an integer or an array of integers");
      }
    }
    if (!j.contains("quantities") || !j.at("quantities").is_array()) {
      throw SchemaError("job file needs a 'quantities' array");
    }
    spec.quantities = j.at("quantities").get<std::vector<std::string>>();
    if (j.contains("tol")) {
      const double tol = j.at("tol").get<double>();
      spec.tolerance.abs_tol = tol;
      spec.tolerance.rel_tol = tol;
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid job file: ") + e.what());
  }
  spec.validate();
  return spec;
}

SweepSpec parse_job_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open job file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_job_text(buffer.str());
}

CriticalReport critical_report(int r_max, const IntegrationSpec& spec) {
  if (r_max < 1) throw DomainError("critical report needs r_max >= 1");
  const ModelParams critical = ModelParams::ising(1.0);
  const GVector g(critical, r_max, spec);

  CriticalReport report;
  report.rows.reserve(static_cast<std::size_t>(r_max));
  for (int r = 1; r <= r_max; ++r) {
    const CorrelatorSet closed = critical_correlators(r);
    CriticalRow row;
    row.r = r;
    row.xx_closed = closed.xx;
    row.xx_quadrature = xx_correlator(r, g);
    row.yy_closed = closed.yy;
    row.yy_quadrature = yy_correlator(r, g);
    row.zz = closed.zz;
    row.concurrence =
        concurrence_x_state(TwoSiteState(closed.sz, closed.xx, closed.yy,
                                         closed.zz));
    if (row.concurrence == 0.0 && report.first_zero_r < 0) {
      report.first_zero_r = r;
    }
    report.rows.push_back(row);
  }
  return report;
}

void print_critical_report(const CriticalReport& report, std::ostream& out) {
  out << "critical point gamma = 1, lambda = 1, T = 0\n";
  out << "   r        xx(closed)    xx(quadrature)        yy(closed)"
         "    yy(quadrature)                zz       concurrence\n";
  char buf[160];
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof(buf),
                  "%4d  %16.12f  %16.12f  %16.12f  %16.12f  %16.12f  %16.12f\n",
                  row.r, row.xx_closed, row.xx_quadrature, row.yy_closed,
                  row.yy_quadrature, row.zz, row.concurrence);
    out << buf;
  }
  if (report.first_zero_r > 0) {
    out << "concurrence vanishes from r = " << report.first_zero_r << " on\n";
  } else {
    out << "concurrence nonzero for every reported separation\n";
  }
}

void OracleSweep::validate() const {
  gamma.validate();
  lambda.validate();
  temperature.validate();
  tolerance.validate();
  if (n_sites < 2 || n_sites > 14) {
    throw SizeError("oracle chains must have 2 <= N <= 14 sites");
  }
  if (r_max < 1 || 2 * r_max >= n_sites) {
    throw DomainError("oracle separations must satisfy 1 <= r < N/2");
  }
}

std::vector<OracleCsvRow> run_oracle_comparison(const OracleSweep& spec) {
  spec.validate();
  std::vector<OracleCsvRow> rows;

  auto push = [&rows](double gamma, double lambda, double t, int r,
                      const char* quantity, double value, int n_sites) {
    rows.push_back(OracleCsvRow{gamma, lambda, t, r, quantity, value, n_sites});
  };

  for (double gamma : spec.gamma.values()) {
    for (double lambda : spec.lambda.values()) {
      const ChainSpec base{spec.n_sites,
                           ModelParams{gamma, lambda, beta_infinity}};
      const Eigensystem es = symmetric_eigensystem(build_hamiltonian(base));
      for (double t : spec.temperature.values()) {
        const ModelParams params{gamma, lambda, beta_from_temperature(t)};
        const ChainSpec chain{spec.n_sites, params};
        const auto oracle = oracle_report(chain, spec.r_max, es);

        push(gamma, lambda, t, 0, "sz", oracle.front().sz, spec.n_sites);
        push(gamma, lambda, t, 0, "entropy_thermal", oracle.front().entropy1,
             spec.n_sites);
        for (const auto& row : oracle) {
          push(gamma, lambda, t, row.r, "xx", row.xx, spec.n_sites);
          push(gamma, lambda, t, row.r, "yy", row.yy, spec.n_sites);
          push(gamma, lambda, t, row.r, "zz", row.zz, spec.n_sites);
          push(gamma, lambda, t, row.r, "concurrence", row.concurrence,
               spec.n_sites);
        }

        // Matched thermodynamic-limit rows, marked with n_sites = 0.
        const OneSiteState site = one_site_thermal(params, spec.tolerance);
        push(gamma, lambda, t, 0, "sz", site.bz(), 0);
        push(gamma, lambda, t, 0, "entropy_thermal", von_neumann_entropy(site),
             0);
        const GVector g(params, spec.r_max, spec.tolerance);
        for (int r = 1; r <= spec.r_max; ++r) {
          const CorrelatorSet c = correlators(r, g);
          const TwoSiteState state(c.sz, c.xx, c.yy, c.zz);
          push(gamma, lambda, t, r, "xx", c.xx, 0);
          push(gamma, lambda, t, r, "yy", c.yy, 0);
          push(gamma, lambda, t, r, "zz", c.zz, 0);
          push(gamma, lambda, t, r, "concurrence", concurrence_x_state(state),
               0);
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(),
            [](const OracleCsvRow& a, const OracleCsvRow& b) {
              return std::tie(a.gamma, a.lambda, a.temperature, a.r,
                              a.quantity, a.n_sites) <
                     std::tie(b.gamma, b.lambda, b.temperature, b.r,
                              b.quantity, b.n_sites);
            });
  return rows;
}

void write_oracle_csv(const std::vector<OracleCsvRow>& rows,
                      std::ostream& out) {
  out << kOracleCsvHeader << '\n';
  for (const auto& row : rows) {
    out << format_value(row.gamma) << ',' << format_value(row.lambda) << ','
        << format_value(row.temperature) << ',' << row.r << ',' << row.quantity
        << ',' << format_value(row.value) << ',' << row.n_sites << '\n';
  }
}

void write_oracle_csv_file(const std::vector<OracleCsvRow>& rows,
                           const std::string& path) {
  std::ostringstream text;
  write_oracle_csv(rows, text);
  write_text_file(text.str(), path);
}

}  // namespace xyent
