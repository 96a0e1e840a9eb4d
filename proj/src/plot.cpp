#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sivie::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_error_svg(std::ostream& out, std::span<const double> zeta, std::span<const double> abs_error,
                     const std::string& title) {
  if (zeta.size() != abs_error.size() || zeta.empty()) throw std::invalid_argument("error plot needs aligned, non-empty data");
  const auto [xmin_it, xmax_it] = std::minmax_element(zeta.begin(), zeta.end());
  double xmin = *xmin_it;
  double xmax = *xmax_it;
  if (xmax <= xmin) xmax = xmin + 1.0;
  double ymax = *std::max_element(abs_error.begin(), abs_error.end());
  if (!(ymax > 0.0) || !std::isfinite(ymax)) ymax = 1.0;
  ymax *= 1.05;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - y / ymax * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
      << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 5; ++k) {
    const double x = xmin + (xmax - xmin) * k / 5.0;
    const double y = ymax * k / 5.0;
    out << "<line x1=\"" << fmt("%.2f", px(x)) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << fmt("%.2f", px(x))
        << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt("%.2f", px(x)) << "\" y=\"" << kTop + plot_h + 20 << "\" text-anchor=\"middle\">"
        << fmt("%.2g", x) << "</text>\n";
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt("%.2f", py(y)) << "\" x2=\"" << kLeft << "\" y2=\""
        << fmt("%.2f", py(y)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt("%.2f", py(y) + 4) << "\" text-anchor=\"end\">"
        << fmt("%.2e", y) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">zeta</text>\n";
  out << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kTop + plot_h / 2 << ")\">absolute error</text>\n";

  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    if (i) out << ' ';
    out << fmt("%.2f", px(zeta[i])) << ',' << fmt("%.2f", py(abs_error[i]));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace sivie::cli
