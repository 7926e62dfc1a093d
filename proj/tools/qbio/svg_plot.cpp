#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace qbio::cli {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string coord(double v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

bool write_svg_plot(const Report& report, const std::string& path,
                    std::string* error) {
  if (!report.has_series() || report.rows.size() < 2 || report.columns.size() < 2) {
    if (error) *error = "no plottable series in this command's output";
    return false;
  }

  double x_min = report.rows.front()[0], x_max = x_min;
  double y_min = report.rows.front()[1], y_max = y_min;
  for (const auto& row : report.rows) {
    x_min = std::min(x_min, row[0]);
    x_max = std::max(x_max, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      y_min = std::min(y_min, row[c]);
      y_max = std::max(y_max, row[c]);
    }
  }
  if (!(x_max > x_min)) x_max = x_min + 1.0;
  if (!(y_max > y_min)) {
    y_max = y_min + 1.0;
    y_min -= 1.0;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + plot_w * (x - x_min) / (x_max - x_min);
  };
  const auto py = [&](double y) {
    return kMarginTop + plot_h * (1.0 - (y - y_min) / (y_max - y_min));
  };

  std::ofstream out(path);
  if (!out) {
    if (error) *error = "cannot open '" + path + "' for writing";
    return false;
  }

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kMarginLeft << "\" y=\"22\" font-family=\"monospace\" "
      << "font-size=\"14\">qbio " << report.command << "</text>\n";

  // frame
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#444\"/>\n";

  // axis extents
  out << "<text x=\"" << kMarginLeft << "\" y=\"" << (kHeight - 18)
      << "\" font-family=\"monospace\" font-size=\"11\">" << label(x_min)
      << "</text>\n";
  out << "<text x=\"" << (kWidth - kMarginRight - 60) << "\" y=\""
      << (kHeight - 18) << "\" font-family=\"monospace\" font-size=\"11\">"
      << label(x_max) << "</text>\n";
  out << "<text x=\"6\" y=\"" << (kMarginTop + 10)
      << "\" font-family=\"monospace\" font-size=\"11\">" << label(y_max)
      << "</text>\n";
  out << "<text x=\"6\" y=\"" << (kMarginTop + plot_h)
      << "\" font-family=\"monospace\" font-size=\"11\">" << label(y_min)
      << "</text>\n";
  out << "<text x=\"" << (kMarginLeft + plot_w / 2 - 10) << "\" y=\""
      << (kHeight - 18) << "\" font-family=\"monospace\" font-size=\"11\">"
      << report.columns[0] << "</text>\n";

  const std::size_t curves = report.columns.size() - 1;
  for (std::size_t c = 0; c < curves; ++c) {
    const char* color = kPalette[c % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : report.rows) {
      out << coord(px(row[0])) << ',' << coord(py(row[c + 1])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << (kMarginLeft + 8 + 120 * static_cast<int>(c))
        << "\" y=\"" << (kMarginTop - 8) << "\" font-family=\"monospace\" "
        << "font-size=\"11\" fill=\"" << color << "\">" << report.columns[c + 1]
        << "</text>\n";
  }
  out << "</svg>\n";
  if (!out.good()) {
    if (error) *error = "write to '" + path + "' failed";
    return false;
  }
  return true;
}

}  // namespace qbio::cli
