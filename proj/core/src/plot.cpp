#include "xyent/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace xyent {
namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 520;
constexpr double kMarginLeft = 72;
constexpr double kMarginRight = 36;
constexpr double kMarginTop = 42;
constexpr double kMarginBottom = 58;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> ticks;
};

Axis make_axis(double lo, double hi) {
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  Axis axis;
  axis.lo = lo - pad;
  axis.hi = hi + pad;
  const double raw = (axis.hi - axis.lo) / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  for (double t = std::ceil(axis.lo / step) * step; t <= axis.hi + 1e-12;
       t += step) {
    axis.ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return axis;
}

struct SeriesKey {
  double gamma;
  double temperature;
  int r;
  std::string quantity;
  bool operator<(const SeriesKey& o) const {
    return std::tie(gamma, temperature, r, quantity) <
           std::tie(o.gamma, o.temperature, o.r, o.quantity);
  }
};

std::string series_label(const SeriesKey& key, bool many_gamma, bool many_t,
                         bool many_r, bool many_q) {
  std::ostringstream label;
  label << key.quantity;
  if (many_r || key.r > 0) label << " r=" << key.r;
  if (many_gamma) label << " gamma=" << fmt(key.gamma);
  if (many_t) label << " T=" << fmt(key.temperature);
  return label.str();
}

void svg_open(std::ostringstream& svg) {
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_axes(std::ostringstream& svg, const Axis& x, const Axis& y,
              const std::string& x_label, const std::string& y_label) {
  const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
  const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
  auto sx = [&](double v) {
    return px0 + (v - x.lo) / (x.hi - x.lo) * (px1 - px0);
  };
  auto sy = [&](double v) {
    return py0 + (v - y.lo) / (y.hi - y.lo) * (py1 - py0);
  };
  svg << "<g stroke=\"#cccccc\" stroke-width=\"0.6\">\n";
  for (double t : x.ticks) {
    svg << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << fmt(py0) << "\" x2=\""
        << fmt(sx(t)) << "\" y2=\"" << fmt(py1) << "\"/>\n";
  }
  for (double t : y.ticks) {
    svg << "<line x1=\"" << fmt(px0) << "\" y1=\"" << fmt(sy(t)) << "\" x2=\""
        << fmt(px1) << "\" y2=\"" << fmt(sy(t)) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<rect x=\"" << fmt(px0) << "\" y=\"" << fmt(py1) << "\" width=\""
      << fmt(px1 - px0) << "\" height=\"" << fmt(py0 - py1)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double t : x.ticks) {
    svg << "<text x=\"" << fmt(sx(t)) << "\" y=\"" << fmt(py0 + 18)
        << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
  }
  for (double t : y.ticks) {
    svg << "<text x=\"" << fmt(px0 - 8) << "\" y=\"" << fmt(sy(t) + 4)
        << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
  }
  svg << "<text x=\"" << fmt(0.5 * (px0 + px1)) << "\" y=\""
      << fmt(kHeight - 14) << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  svg << "<text x=\"16\" y=\"" << fmt(0.5 * (py0 + py1))
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fmt(0.5 * (py0 + py1)) << ")\">" << y_label << "</text>\n";
  svg << "</g>\n";
}

std::string heat_color(double t) {
  // Compact five-stop approximation of a dark-to-bright colormap.
  static const double stops[5][3] = {{0.267, 0.005, 0.329},
                                     {0.229, 0.322, 0.546},
                                     {0.128, 0.567, 0.551},
                                     {0.369, 0.789, 0.383},
                                     {0.993, 0.906, 0.144}};
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * 4.0;
  const int i = std::min(3, static_cast<int>(pos));
  const double f = pos - i;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(255 * (stops[i][0] * (1 - f) + stops[i + 1][0] * f)),
                static_cast<int>(255 * (stops[i][1] * (1 - f) + stops[i + 1][1] * f)),
                static_cast<int>(255 * (stops[i][2] * (1 - f) + stops[i + 1][2] * f)));
  return buf;
}

std::string render_curves(const std::vector<ResultRow>& rows) {
  std::map<SeriesKey, std::vector<std::pair<double, double>>> series;
  std::set<double> gammas, temps;
  std::set<int> rs;
  std::set<std::string> quantities;
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  bool first = true;
  for (const auto& row : rows) {
    series[SeriesKey{row.gamma, row.temperature, row.r, row.quantity}]
        .emplace_back(row.lambda, row.value);
    gammas.insert(row.gamma);
    temps.insert(row.temperature);
    rs.insert(row.r);
    quantities.insert(row.quantity);
    if (first) {
      x_lo = x_hi = row.lambda;
      y_lo = y_hi = row.value;
      first = false;
    }
    x_lo = std::min(x_lo, row.lambda);
    x_hi = std::max(x_hi, row.lambda);
    y_lo = std::min(y_lo, row.value);
    y_hi = std::max(y_hi, row.value);
  }

  const Axis x = make_axis(x_lo, x_hi);
  const Axis y = make_axis(y_lo, y_hi);
  const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
  const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
  auto sx = [&](double v) {
    return px0 + (v - x.lo) / (x.hi - x.lo) * (px1 - px0);
  };
  auto sy = [&](double v) {
    return py0 + (v - y.lo) / (y.hi - y.lo) * (py1 - py0);
  };

  std::ostringstream svg;
  svg_open(svg);
  svg_axes(svg, x, y, "lambda", "value");

  int color = 0;
  std::ostringstream legend;
  for (auto& [key, points] : series) {
    std::sort(points.begin(), points.end());
    const char* stroke = kPalette[color % 8];
    svg << "<polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.6\" points=\"";
    for (const auto& [lx, ly] : points) {
      svg << fmt(sx(lx)) << ',' << fmt(sy(ly)) << ' ';
    }
    svg << "\"/>\n";

    const double ly = kMarginTop + 16 + 16 * color;
    legend << "<line x1=\"" << fmt(px1 - 150) << "\" y1=\"" << fmt(ly - 4)
           << "\" x2=\"" << fmt(px1 - 126) << "\" y2=\"" << fmt(ly - 4)
           << "\" stroke=\"" << stroke << "\" stroke-width=\"1.6\"/>"
           << "<text x=\"" << fmt(px1 - 120) << "\" y=\"" << fmt(ly)
           << "\" font-family=\"sans-serif\" font-size=\"11\">"
           << series_label(key, gammas.size() > 1, temps.size() > 1,
                           rs.size() > 1, quantities.size() > 1)
           << "</text>\n";
    ++color;
  }
  svg << legend.str();
  svg << "</svg>\n";
  return svg.str();
}

std::string render_heatmap(const std::vector<ResultRow>& rows) {
  std::set<double> gammas;
  std::set<std::pair<int, std::string>> kinds;
  std::set<double> lambdas, temps;
  for (const auto& row : rows) {
    gammas.insert(row.gamma);
    kinds.insert({row.r, row.quantity});
    lambdas.insert(row.lambda);
    temps.insert(row.temperature);
  }
  if (gammas.size() != 1 || kinds.size() != 1 || lambdas.size() < 2 ||
      temps.size() < 2) {
    throw SchemaError(
        "a heat map needs one quantity at one gamma and r, varying over both "
        "lambda and temperature");
  }

  std::vector<double> xs(lambdas.begin(), lambdas.end());
  std::vector<double> ys(temps.begin(), temps.end());
  std::map<std::pair<double, double>, double> value;
  double v_lo = rows.front().value, v_hi = rows.front().value;
  for (const auto& row : rows) {
    value[{row.lambda, row.temperature}] = row.value;
    v_lo = std::min(v_lo, row.value);
    v_hi = std::max(v_hi, row.value);
  }
  if (v_hi == v_lo) v_hi = v_lo + 1.0;

  const double px0 = kMarginLeft, px1 = kWidth - kMarginRight - 60;
  const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
  const double cw = (px1 - px0) / xs.size();
  const double ch = (py0 - py1) / ys.size();

  std::ostringstream svg;
  svg_open(svg);
  svg << "<g stroke=\"none\">\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const auto it = value.find({xs[i], ys[j]});
      if (it == value.end()) continue;
      const double t = (it->second - v_lo) / (v_hi - v_lo);
      svg << "<rect x=\"" << fmt(px0 + i * cw) << "\" y=\""
          << fmt(py0 - (j + 1) * ch) << "\" width=\"" << fmt(cw + 0.5)
          << "\" height=\"" << fmt(ch + 0.5) << "\" fill=\"" << heat_color(t)
          << "\"/>\n";
    }
  }
  svg << "</g>\n";

  // Frame, tick labels and a color bar with extremal values.
  svg << "<rect x=\"" << fmt(px0) << "\" y=\"" << fmt(py1) << "\" width=\""
      << fmt(px1 - px0) << "\" height=\"" << fmt(py0 - py1)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  const int x_stride = std::max<std::size_t>(1, xs.size() / 8);
  for (std::size_t i = 0; i < xs.size(); i += x_stride) {
    svg << "<text x=\"" << fmt(px0 + (i + 0.5) * cw) << "\" y=\""
        << fmt(py0 + 18) << "\" text-anchor=\"middle\">" << fmt(xs[i])
        << "</text>\n";
  }
  const int y_stride = std::max<std::size_t>(1, ys.size() / 8);
  for (std::size_t j = 0; j < ys.size(); j += y_stride) {
    svg << "<text x=\"" << fmt(px0 - 8) << "\" y=\""
        << fmt(py0 - (j + 0.5) * ch + 4) << "\" text-anchor=\"end\">"
        << fmt(ys[j]) << "</text>\n";
  }
  svg << "<text x=\"" << fmt(0.5 * (px0 + px1)) << "\" y=\""
      << fmt(kHeight - 14) << "\" text-anchor=\"middle\">lambda</text>\n";
  svg << "<text x=\"16\" y=\"" << fmt(0.5 * (py0 + py1))
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fmt(0.5 * (py0 + py1)) << ")\">temperature</text>\n";
  svg << "<text x=\"" << fmt(0.5 * (px0 + px1)) << "\" y=\""
      << fmt(kMarginTop - 14) << "\" text-anchor=\"middle\">"
      << kinds.begin()->second << " r=" << kinds.begin()->first
      << "</text>\n";

  const double bar_x = px1 + 20;
  const int bar_steps = 64;
  const double bar_h = (py0 - py1) / bar_steps;
  for (int s = 0; s < bar_steps; ++s) {
    svg << "<rect x=\"" << fmt(bar_x) << "\" y=\""
        << fmt(py0 - (s + 1) * bar_h) << "\" width=\"16\" height=\""
        << fmt(bar_h + 0.5) << "\" fill=\""
        << heat_color((s + 0.5) / bar_steps) << "\"/>\n";
  }
  svg << "<text x=\"" << fmt(bar_x + 20) << "\" y=\"" << fmt(py0)
      << "\">" << fmt(v_lo) << "</text>\n";
  svg << "<text x=\"" << fmt(bar_x + 20) << "\" y=\"" << fmt(py1 + 10)
      << "\">" << fmt(v_hi) << "</text>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_svg(const std::vector<ResultRow>& rows, PlotMode mode) {
  if (rows.empty()) throw SchemaError("nothing to plot: no data rows");
  if (mode == PlotMode::automatic) {
    std::set<double> gammas, lambdas, temps;
    std::set<std::pair<int, std::string>> kinds;
    for (const auto& row : rows) {
      gammas.insert(row.gamma);
      lambdas.insert(row.lambda);
      temps.insert(row.temperature);
      kinds.insert({row.r, row.quantity});
    }
    mode = (gammas.size() == 1 && kinds.size() == 1 && lambdas.size() > 1 &&
            temps.size() > 1)
               ? PlotMode::heatmap
               : PlotMode::curves;
  }
  return mode == PlotMode::heatmap ? render_heatmap(rows) : render_curves(rows);
}

void render_svg_file(const std::vector<ResultRow>& rows,
                     const std::string& path, PlotMode mode) {
  const std::string svg = render_svg(rows, mode);
  const std::filesystem::path tmp(path + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << svg;
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error("failed while writing '" + path + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("failed to move output into place at '" + path + "'");
  }
}

}  // namespace xyent
