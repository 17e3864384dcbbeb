#pragma once

// Number formatting, angle parsing and the CSV/SVG plot writers.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "radtrig/trig_kernel.hpp"

namespace radtrig::io {

/// 15 significant digits, '.' separator, independent of the global locale.
inline std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

namespace detail {

inline std::optional<double> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace detail

/// Decimal radians ("4.712", "-1e-3") or a multiple of π: "pi", "-pi/4",
/// "3pi/2", "0.5*pi", "2*pi/3".
inline std::optional<double> parse_angle(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return detail::parse_decimal(s);

  std::string_view coef(s.data(), pos);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  double multiplier = 1.0;
  if (coef == "-") {
    multiplier = -1.0;
  } else if (!coef.empty() && coef != "+") {
    const auto c = detail::parse_decimal(coef);
    if (!c) return std::nullopt;
    multiplier = *c;
  }

  std::string_view rest(s.data() + pos + 2, s.size() - pos - 2);
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    rest.remove_prefix(1);
    const auto d = detail::parse_decimal(rest);
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return multiplier * pi / divisor;
}

// ---------------------------------------------------------------------------
// Plot output
// ---------------------------------------------------------------------------

struct Series {
  std::vector<double> x;
  std::vector<double> y;
};

/// Header line, then one row per sample. Extra columns are appended in order.
inline void write_csv(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << format_number(columns[c][r]);
    }
    out << '\n';
  }
}

/// One polyline in a viewBox fitted to the data with a 5% margin, plus a
/// marker circle per entry of markers. The y axis points up.
inline void write_svg(std::ostream& out, const Series& line,
                      const std::vector<std::pair<double, double>>& markers = {}) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  const auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (std::size_t i = 0; i < line.x.size(); ++i) grow(line.x[i], line.y[i]);
  for (const auto& [x, y] : markers) grow(x, y);
  if (!(xmin <= xmax)) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  double width = xmax - xmin;
  double height = ymax - ymin;
  if (width == 0.0) width = 1.0;
  if (height == 0.0) height = 1.0;
  const double mx = 0.05 * width;
  const double my = 0.05 * height;
  const double vw = width + 2 * mx;
  const double vh = height + 2 * my;
  const double stroke = 0.004 * std::max(vw, vh);
  const auto n = format_number;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << n(xmin - mx) << ' ' << n(-ymax - my) << ' ' << n(vw) << ' ' << n(vh)
      << "\">\n"
      << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" << n(stroke)
      << "\" points=\"";
  for (std::size_t i = 0; i < line.x.size(); ++i) {
    out << (i ? " " : "") << n(line.x[i]) << ',' << n(-line.y[i]);
  }
  out << "\"/>\n";
  for (const auto& [x, y] : markers) {
    out << "<circle cx=\"" << n(x) << "\" cy=\"" << n(-y) << "\" r=\""
        << n(3 * stroke) << "\" fill=\"#c0392b\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace radtrig::io
