#include "report/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "common.hpp"

namespace kandae::report {

namespace {

constexpr double kFloor = 1e-18;
constexpr int kPanelW = 420;
constexpr int kPanelH = 300;
constexpr int kMarginL = 70;
constexpr int kMarginR = 15;
constexpr int kMarginT = 30;
constexpr int kMarginB = 45;

const char* const kPalette[] = {"#1f6fb2", "#d1495b", "#3a7d44", "#8e5ba6"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct Panel {
  std::ostringstream& out;
  double x0, x1;    // data x-range
  double ly0, ly1;  // log10 y-range
  int ox, oy;       // top-left corner of the panel on the canvas

  double px(double x) const {
    const double f = (x - x0) / (x1 - x0);
    return ox + kMarginL + f * (kPanelW - kMarginL - kMarginR);
  }
  double py(double ly) const {
    const double f = (ly - ly0) / (ly1 - ly0);
    return oy + kPanelH - kMarginB - f * (kPanelH - kMarginT - kMarginB);
  }
};

double clamp_log(double v) {
  return std::log10(std::max(std::fabs(v), kFloor));
}

void render_panel(std::ostringstream& out, int ox, int oy, const std::string& title,
                  const std::string& x_label, const std::vector<PlotSeries>& series) {
  require(!series.empty(), "plot: no series");
  double x0 = 0.0, x1 = 0.0, ly0 = 0.0, ly1 = 0.0;
  bool first = true;
  for (const auto& s : series) {
    require(s.xs != nullptr && s.ys != nullptr, "plot: null series");
    require(!s.xs->empty(), "plot: refusing to plot an empty trajectory");
    require(s.xs->size() == s.ys->size(), "plot: series length mismatch");
    for (std::size_t i = 0; i < s.xs->size(); ++i) {
      const double x = (*s.xs)[i];
      const double ly = clamp_log((*s.ys)[i]);
      if (first) {
        x0 = x1 = x;
        ly0 = ly1 = ly;
        first = false;
      } else {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        ly0 = std::min(ly0, ly);
        ly1 = std::max(ly1, ly);
      }
    }
  }
  if (x1 <= x0) x1 = x0 + 1.0;
  ly0 = std::floor(ly0);
  ly1 = std::ceil(ly1);
  if (ly1 <= ly0) ly1 = ly0 + 1.0;

  const Panel p{out, x0, x1, ly0, ly1, ox, oy};

  out << "<g>\n";
  out << "<rect x=\"" << ox + kMarginL << "\" y=\"" << oy + kMarginT << "\" width=\""
      << kPanelW - kMarginL - kMarginR << "\" height=\"" << kPanelH - kMarginT - kMarginB
      << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << ox + kPanelW / 2 << "\" y=\"" << oy + 18
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" << title
      << "</text>\n";
  out << "<text x=\"" << ox + kPanelW / 2 << "\" y=\"" << oy + kPanelH - 8
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">"
      << x_label << "</text>\n";

  // x ticks at quarters of the range
  for (int i = 0; i <= 4; ++i) {
    const double x = x0 + (x1 - x0) * i / 4.0;
    const double gx = p.px(x);
    out << "<line x1=\"" << fmt(gx) << "\" y1=\"" << oy + kPanelH - kMarginB
        << "\" x2=\"" << fmt(gx) << "\" y2=\"" << oy + kPanelH - kMarginB + 4
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt(gx) << "\" y=\"" << oy + kPanelH - kMarginB + 16
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">"
        << fmt(x, "%.3g") << "</text>\n";
  }

  // y ticks at whole decades, thinned to at most 8 labels
  const int decades = static_cast<int>(ly1 - ly0);
  const int step = std::max(1, (decades + 7) / 8);
  for (int d = 0; d <= decades; d += step) {
    const double ly = ly0 + d;
    const double gy = p.py(ly);
    out << "<line x1=\"" << ox + kMarginL - 4 << "\" y1=\"" << fmt(gy) << "\" x2=\""
        << ox + kMarginL << "\" y2=\"" << fmt(gy)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << ox + kMarginL - 7 << "\" y=\"" << fmt(gy + 3.5)
        << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">1e"
        << static_cast<int>(ly) << "</text>\n";
  }

  for (std::size_t s = 0; s < series.size(); ++s) {
    out << "<polyline fill=\"none\" stroke=\""
        << kPalette[s % (sizeof kPalette / sizeof kPalette[0])]
        << "\" stroke-width=\"1.2\" points=\"";
    const auto& xs = *series[s].xs;
    const auto& ys = *series[s].ys;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out << " ";
      out << fmt(p.px(xs[i])) << "," << fmt(p.py(clamp_log(ys[i])));
    }
    out << "\"/>\n";
    if (series.size() > 1) {
      const int lx = ox + kMarginL + 10;
      const int ly = oy + kMarginT + 14 + 14 * static_cast<int>(s);
      out << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 18
          << "\" y2=\"" << ly - 4 << "\" stroke=\""
          << kPalette[s % (sizeof kPalette / sizeof kPalette[0])]
          << "\" stroke-width=\"1.2\"/>\n";
      out << "<text x=\"" << lx + 23 << "\" y=\"" << ly
          << "\" font-family=\"monospace\" font-size=\"10\">" << series[s].label
          << "</text>\n";
    }
  }
  out << "</g>\n";
}

std::string document(int w, int h, const std::string& body) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n"
      << body << "</svg>\n";
  return out.str();
}

}  // namespace

std::string log_line_plot_svg(const std::string& title, const std::string& x_label,
                              const std::vector<PlotSeries>& series) {
  std::ostringstream body;
  render_panel(body, 0, 0, title, x_label, series);
  return document(kPanelW, kPanelH, body.str());
}

std::string ae_plot_svg(const RunReport& rep, std::size_t var_index) {
  require(var_index < rep.variable_names.size(), "ae plot: bad variable index");
  PlotSeries s;
  s.label = rep.variable_names[var_index];
  s.xs = &rep.times;
  s.ys = &rep.ae[var_index];
  return log_line_plot_svg("AE " + rep.variable_names[var_index], "t", {s});
}

std::string driftoff_panel_svg(const RunReport& rep) {
  std::ostringstream body;
  const char* titles[3] = {"level 3 residual", "level 2 residual", "level 1 residual"};
  for (int col = 0; col < 3; ++col) {
    const std::size_t level_idx = static_cast<std::size_t>(2 - col);  // levels 3, 2, 1
    PlotSeries s;
    s.label = titles[col];
    s.xs = &rep.times;
    s.ys = &rep.drift[level_idx];
    render_panel(body, col * kPanelW, 0, titles[col], "t", {s});
  }
  return document(3 * kPanelW, kPanelH, body.str());
}

}  // namespace kandae::report
