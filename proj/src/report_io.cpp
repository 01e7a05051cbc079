#include "opencat/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace opencat {

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trapped_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "N,h,k,re,im,modulus,target,abs_err\n";
  for (const auto& r : rows)
    os << r.n << ',' << format_number(r.h) << ',' << r.k << ',' << format_number(r.re) << ','
       << format_number(r.im) << ',' << format_number(r.modulus) << ',' << format_number(r.target) << ','
       << format_number(r.abs_err) << '\n';
}

void write_nontrap_csv(std::ostream& os, const std::vector<NontrapRow>& rows) {
  os << "N,h,top_modulus,slope_vs_prev\n";
  for (const auto& r : rows)
    os << r.n << ',' << format_number(r.h) << ',' << format_number(r.top_modulus) << ','
       << format_number(r.slope_vs_prev) << '\n';
}

void write_classical_csv(std::ostream& os, const EscapeReport& report) {
  os << "q,num_orbits,min_orbit_max_norm,all_escape\n";
  for (const auto& r : report.rows)
    os << r.q << ',' << r.num_orbits << ','
       << (r.min_orbit_max_norm ? format_number(*r.min_orbit_max_norm) : std::string()) << ','
       << (r.all_escape ? "true" : "false") << '\n';
}

namespace {

constexpr double kWidth = 640, kHeight = 420, kMargin = 60;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

struct Axes {
  double x0, x1, y0, y1;
  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); }
};

Axes padded(double x0, double x1, double y0, double y1) {
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  const double dx = 0.05 * (x1 - x0), dy = 0.05 * (y1 - y0);
  return {x0 - dx, x1 + dx, y0 - dy, y1 + dy};
}

void open_svg(std::ostream& os, const Axes& ax, const std::string& xlabel, const std::string& ylabel) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
     << kHeight - kMargin << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
     << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\" font-size=\"13\">"
     << xlabel << "</text>\n"
     << "<text x=\"15\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 15 " << kHeight / 2
     << ")\" text-anchor=\"middle\" font-size=\"13\">" << ylabel << "</text>\n";
  char buf[160];
  for (int i = 0; i <= 4; ++i) {
    const double x = ax.x0 + (ax.x1 - ax.x0) * i / 4, y = ax.y0 + (ax.y1 - ax.y0) * i / 4;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" font-size=\"10\">%.3g</text>\n",
                  ax.px(x), kHeight - kMargin + 14, x);
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" font-size=\"10\">%.3g</text>\n",
                  kMargin - 4, ax.py(y) + 3, y);
    os << buf;
  }
}

void polyline(std::ostream& os, const Axes& ax, const std::vector<std::pair<double, double>>& pts, const char* color) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  char buf[64];
  for (const auto& [x, y] : pts) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", ax.px(x), ax.py(y));
    os << buf;
  }
  os << "\"/>\n";
  for (const auto& [x, y] : pts) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"", ax.px(x), ax.py(y));
    os << buf << color << "\"/>\n";
  }
}

}  // namespace

void write_trapped_svg(std::ostream& os, const std::vector<SweepRow>& rows) {
  std::map<int, std::vector<std::pair<double, double>>> series;
  std::map<int, double> targets;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& r : rows) {
    series[r.k].emplace_back(r.n, r.re);
    targets[r.k] = r.target;
    x0 = std::min(x0, double(r.n)), x1 = std::max(x1, double(r.n));
    y0 = std::min({y0, r.re, r.target}), y1 = std::max({y1, r.re, r.target});
  }
  if (rows.empty()) x0 = y0 = 0, x1 = y1 = 1;
  const auto ax = padded(x0, x1, y0, y1);
  open_svg(os, ax, "N", "Re mu_k");
  for (const auto& [k, pts] : series) {
    const char* color = kColors[k % 8];
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-dasharray=\"2,3\"/>\n",
                  ax.px(ax.x0), ax.py(targets[k]), ax.px(ax.x1), ax.py(targets[k]), color);
    os << buf;
    polyline(os, ax, pts, color);
  }
  os << "</svg>\n";
}

void write_nontrap_svg(std::ostream& os, const std::vector<NontrapRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& r : rows) {
    if (!(r.top_modulus > 0)) continue;
    const double x = std::log10(double(r.n)), y = std::log10(r.top_modulus);
    pts.emplace_back(x, y);
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  if (pts.empty()) x0 = y0 = 0, x1 = y1 = 1;
  const auto ax = padded(x0, x1, y0, y1);
  open_svg(os, ax, "log10 N", "log10 spectral radius");
  polyline(os, ax, pts, kColors[0]);
  os << "</svg>\n";
}

}  // namespace opencat
