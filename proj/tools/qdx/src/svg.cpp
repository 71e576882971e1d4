#include "qdx/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qdx/fixtures.hpp"

namespace qdx::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

constexpr std::array<const char*, 4> kColours{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

std::string render_slice_svg(const std::vector<SweepRow>& rows,
                             const std::vector<Measure>& measures) {
  if (rows.empty()) throw std::invalid_argument("empty slice");
  const double x_min = rows.front().gamma_t;
  const double x_max = std::max(rows.back().gamma_t, x_min + 1e-12);
  double y_max = 0.0;
  for (const auto& r : rows)
    for (auto m : measures) y_max = std::max(y_max, r.measure(m));
  y_max = y_max > 0.0 ? y_max * 1.05 : 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + plot_w * (x - x_min) / (x_max - x_min); };
  auto py = [&](double y) { return kTop + plot_h * (1.0 - std::max(y, 0.0) / y_max); };

  const auto& head = rows.front();
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kLeft) + "\" y=\"24\" font-size=\"14\">" +
         std::string(channel_name(head.channel)) + ", N = " + std::to_string(head.n) +
         ", theta = " + tick_label(head.theta) + " rad</text>\n";

  // Axes and ticks.
  svg += "<g stroke=\"black\" fill=\"none\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
         num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g fill=\"black\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x_min + (x_max - x_min) * i / 5.0;
    const double yv = y_max * i / 5.0;
    svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(yv) + 4) +
           "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\">\xCE\xB3t</text>\n";
  std::string y_label;
  for (auto m : measures) y_label += (y_label.empty() ? "" : ", ") + std::string(measure_name(m));
  svg += "<text transform=\"translate(18 " + num(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + y_label + "</text>\n</g>\n";

  for (std::size_t k = 0; k < measures.size(); ++k) {
    const char* colour = kColours[k % kColours.size()];
    svg += "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"";
    svg += colour;
    svg += "\" points=\"";
    for (const auto& r : rows) svg += num(px(r.gamma_t)) + "," + num(py(r.measure(measures[k]))) + " ";
    svg += "\"/>\n";
    const double ly = kTop + 16.0 * static_cast<double>(k + 1);
    svg += "<line x1=\"" + num(kWidth - kRight + 15) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
           num(kWidth - kRight + 40) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + colour +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kWidth - kRight + 46) + "\" y=\"" + num(ly) + "\">" +
           std::string(measure_name(measures[k])) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::vector<std::filesystem::path> write_slice_plots(const std::filesystem::path& dir,
                                                     const std::vector<SweepRow>& rows,
                                                     const std::vector<Measure>& measures) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto same_slice = [](const SweepRow& a, const SweepRow& b) {
    return a.channel == b.channel && a.n == b.n && a.theta == b.theta;
  };
  for (std::size_t begin = 0; begin < rows.size();) {
    std::size_t end = begin + 1;
    while (end < rows.size() && same_slice(rows[begin], rows[end])) ++end;
    const std::vector<SweepRow> slice(rows.begin() + static_cast<std::ptrdiff_t>(begin),
                                      rows.begin() + static_cast<std::ptrdiff_t>(end));
    const auto& r = slice.front();
    const auto path = dir / (std::string(channel_name(r.channel)) + "_n" + std::to_string(r.n) +
                             "_theta" + format_number(r.theta) + ".svg");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << render_slice_svg(slice, measures);
    written.push_back(path);
    begin = end;
  }
  return written;
}

}  // namespace qdx::cli
