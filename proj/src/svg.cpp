#include "aimtk/svg.hpp"

#include <algorithm>
#include <cmath>

#include "aimtk/csvio.hpp"

namespace aimtk::svg {

namespace {
constexpr int kW = 720, kH = 480;
constexpr int kL = 70, kR = 150, kT = 40, kB = 50;  // margins

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) { return io::fmt_fixed(v, 2); }

std::string text(double x, double y, const std::string& s,
                 const std::string& extra = "") {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) +
         "\" font-size=\"12\" font-family=\"sans-serif\" " + extra + ">" + s +
         "</text>\n";
}
}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       const std::vector<double>& x,
                       const std::vector<Series>& series, bool log_y,
                       bool reverse_x) {
  double ymin = 1e300, ymax = -1e300;
  for (const auto& s : series)
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  auto ty = [&](double v) {
    double a = log_y ? std::log10(v) : v;
    double lo = log_y ? std::log10(ymin) : ymin;
    double hi = log_y ? std::log10(ymax) : ymax;
    return kH - kB - (a - lo) / (hi - lo) * (kH - kT - kB);
  };
  double xmin = *std::min_element(x.begin(), x.end());
  double xmax = *std::max_element(x.begin(), x.end());
  auto tx = [&](double v) {
    double t = xmax > xmin ? (v - xmin) / (xmax - xmin) : 0.5;
    if (reverse_x) t = 1.0 - t;
    return kL + t * (kW - kL - kR);
  };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    io::fmt_u64(kW) + "\" height=\"" + io::fmt_u64(kH) +
                    "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += text(kL, kT - 16, title, "font-weight=\"bold\"");
  out += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kH - kB) + "\" x2=\"" +
         num(kW - kR) + "\" y2=\"" + num(kH - kB) +
         "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kT) + "\" x2=\"" +
         num(kL) + "\" y2=\"" + num(kH - kB) + "\" stroke=\"black\"/>\n";
  out += text((kW - kR + kL) / 2.0, kH - 12, x_label);
  out += text(8, kT - 4, y_label);

  for (double v : x) {
    out += "<line x1=\"" + num(tx(v)) + "\" y1=\"" + num(kH - kB) +
           "\" x2=\"" + num(tx(v)) + "\" y2=\"" + num(kH - kB + 4) +
           "\" stroke=\"black\"/>\n";
    out += text(tx(v) - 10, kH - kB + 18, io::fmt_fixed(v, 0));
  }
  if (log_y) {
    int dlo = static_cast<int>(std::floor(std::log10(ymin)));
    int dhi = static_cast<int>(std::ceil(std::log10(ymax)));
    for (int d = dlo; d <= dhi; ++d) {
      double v = std::pow(10.0, d);
      if (v < ymin || v > ymax) continue;
      out += "<line x1=\"" + num(kL - 4) + "\" y1=\"" + num(ty(v)) +
             "\" x2=\"" + num(kW - kR) + "\" y2=\"" + num(ty(v)) +
             "\" stroke=\"#dddddd\"/>\n";
      out += text(8, ty(v) + 4, "1e" + std::to_string(d));
    }
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % 8];
    std::string pts;
    for (std::size_t j = 0; j < x.size() && j < series[i].y.size(); ++j)
      pts += num(tx(x[j])) + "," + num(ty(series[i].y[j])) + " ";
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    double ly = kT + 16.0 * static_cast<double>(i);
    out += "<rect x=\"" + num(kW - kR + 10) + "\" y=\"" + num(ly) +
           "\" width=\"12\" height=\"12\" fill=\"" + color + "\"/>\n";
    out += text(kW - kR + 28, ly + 10, series[i].name);
  }
  out += "</svg>\n";
  return out;
}

std::string stacked_bars(const std::string& title, const std::string& y_label,
                         const std::vector<std::string>& categories,
                         const std::vector<Series>& parts) {
  double ymax = 0;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    double sum = 0;
    for (const auto& p : parts)
      if (c < p.y.size()) sum += p.y[c];
    ymax = std::max(ymax, sum);
  }
  if (ymax <= 0) ymax = 1;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    io::fmt_u64(kW) + "\" height=\"" + io::fmt_u64(kH) +
                    "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += text(kL, kT - 16, title, "font-weight=\"bold\"");
  out += text(8, kT - 4, y_label);
  double plot_w = kW - kL - kR;
  double bar_w = plot_w / static_cast<double>(categories.size()) * 0.6;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    double cx = kL + plot_w * (static_cast<double>(c) + 0.5) /
                         static_cast<double>(categories.size());
    double y = kH - kB;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      double v = c < parts[p].y.size() ? parts[p].y[c] : 0.0;
      double h = v / ymax * (kH - kT - kB);
      y -= h;
      out += "<rect x=\"" + num(cx - bar_w / 2) + "\" y=\"" + num(y) +
             "\" width=\"" + num(bar_w) + "\" height=\"" + num(h) +
             "\" fill=\"" + kPalette[p % 8] + "\"/>\n";
    }
    out += text(cx - 12, kH - kB + 18, categories[c]);
  }
  out += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kH - kB) + "\" x2=\"" +
         num(kW - kR) + "\" y2=\"" + num(kH - kB) + "\" stroke=\"black\"/>\n";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    double ly = kT + 16.0 * static_cast<double>(p);
    out += "<rect x=\"" + num(kW - kR + 10) + "\" y=\"" + num(ly) +
           "\" width=\"12\" height=\"12\" fill=\"" + kPalette[p % 8] +
           "\"/>\n";
    out += text(kW - kR + 28, ly + 10, parts[p].name);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace aimtk::svg
