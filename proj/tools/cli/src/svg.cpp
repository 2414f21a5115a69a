#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "format.hpp"

namespace chordiv::cli {

namespace {

// viridis-like ramp through five anchors
std::string colour(double t) {
  static constexpr double kAnchors[5][3] = {
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const int i = std::min(3, static_cast<int>(t));
  const double f = t - i;
  char buf[8];
  int c[3];
  for (int k = 0; k < 3; ++k) {
    c[k] = static_cast<int>(std::lround(kAnchors[i][k] + f * (kAnchors[i + 1][k] - kAnchors[i][k])));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string sweep_heatmap_svg(const SweepGrid& grid, const std::vector<SweepRow>& rows,
                              const std::string& title) {
  constexpr int kPlot = 480, kLeft = 60, kTop = 40, kBottom = 70;
  const int na = static_cast<int>(grid.alpha_values.size());
  const int nb = static_cast<int>(grid.beta_values.size());
  const double cw = static_cast<double>(kPlot) / na;
  const double ch = static_cast<double>(kPlot) / nb;

  double lo = 0.0, hi = 0.0;
  if (!rows.empty()) {
    const auto [mn, mx] = std::minmax_element(rows.begin(), rows.end(),
                                              [](auto& a, auto& b) { return a.value < b.value; });
    lo = mn->value;
    hi = mx->value;
  }
  const double span = hi > lo ? hi - lo : 1.0;

  const auto index_of = [](const std::vector<double>& axis, double v) {
    return static_cast<int>(std::lower_bound(axis.begin(), axis.end(), v) - axis.begin());
  };

  std::ostringstream os;
  const int width = kLeft + kPlot + 20, height = kTop + kPlot + kBottom;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlot << "\" height=\""
     << kPlot << "\" fill=\"#dddddd\"/>\n";
  for (const auto& r : rows) {
    const int i = index_of(grid.alpha_values, r.alpha);
    const int j = index_of(grid.beta_values, r.beta);
    const double x = kLeft + i * cw;
    const double y = kTop + kPlot - (j + 1) * ch;  // beta grows upwards
    os << "<rect x=\"" << fmt12(x) << "\" y=\"" << fmt12(y) << "\" width=\"" << fmt12(cw)
       << "\" height=\"" << fmt12(ch) << "\" fill=\"" << colour((r.value - lo) / span)
       << "\"><title>alpha=" << roundtrip(r.alpha) << " beta=" << roundtrip(r.beta)
       << " value=" << fmt12(r.value) << "</title></rect>\n";
  }
  os << "<text x=\"" << kLeft + kPlot / 2 << "\" y=\"" << kTop + kPlot + 20
     << "\" text-anchor=\"middle\">alpha</text>\n";
  os << "<text x=\"20\" y=\"" << kTop + kPlot / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << kTop + kPlot / 2 << ")\">beta</text>\n";
  // colour bar with the min/max annotation
  const int bar_y = kTop + kPlot + 34;
  for (int k = 0; k < 100; ++k) {
    os << "<rect x=\"" << kLeft + k * kPlot / 100 << "\" y=\"" << bar_y << "\" width=\""
       << kPlot / 100 + 1 << "\" height=\"10\" fill=\"" << colour(k / 99.0) << "\"/>\n";
  }
  os << "<text x=\"" << kLeft << "\" y=\"" << bar_y + 26 << "\">min=" << fmt12(lo) << "</text>\n";
  os << "<text x=\"" << kLeft + kPlot << "\" y=\"" << bar_y + 26
     << "\" text-anchor=\"end\">max=" << fmt12(hi) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace chordiv::cli
