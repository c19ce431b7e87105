#include "sketchlab/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace sketchlab {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string row_label(const TrialSummary& row, const std::string& label) {
  return label.empty() ? row.task : label;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<TrialSummary>& rows, const std::string& label) {
  os << "figure,instance,embedding,n,d_or_basis,ell,trials,mean,stderr,median,theory,z,opt_tail\n";
  for (const auto& row : rows) {
    os << row_label(row, label) << ',' << row.instance << ',' << row.embedding << ',' << row.n
       << ',' << row.d_or_basis << ',' << row.ell << ',' << row.trials << ','
       << format_double(row.mean) << ',' << format_double(row.std_err) << ','
       << format_double(row.median) << ',' << opt_field(row.theory) << ',' << opt_field(row.z)
       << ',' << opt_field(row.opt_tail) << '\n';
  }
}

std::string csv_string(const std::vector<TrialSummary>& rows, const std::string& label) {
  std::ostringstream os;
  write_csv(os, rows, label);
  return os.str();
}

void write_json(std::ostream& os, const std::vector<TrialSummary>& rows,
                const std::string& label) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j{{"figure", row_label(row, label)},
                     {"instance", row.instance},
                     {"embedding", row.embedding},
                     {"n", row.n},
                     {"d_or_basis", row.d_or_basis},
                     {"ell", row.ell},
                     {"trials", row.trials},
                     {"mean", row.mean},
                     {"stderr", row.std_err},
                     {"median", row.median}};
    if (row.theory) j["theory"] = *row.theory;
    if (row.z) j["z"] = *row.z;
    if (row.opt_tail) j["opt_tail"] = *row.opt_tail;
    if (row.k > 0) j["k"] = row.k;
    if (row.high_variance) j["high_variance"] = true;
    if (row.failed) j["error"] = row.error;
    out.push_back(std::move(j));
  }
  os << out.dump(2) << '\n';
}

namespace {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> mean;    // (ell, value)
  std::vector<std::pair<double, double>> theory;  // dashed
};

struct Panel {
  std::string title;
  std::vector<Series> series;
  double xmin = 1e300, xmax = 0, ymin = 1e300, ymax = 0;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

double clamp_log(double v, double floor_value) { return v > floor_value ? v : floor_value; }

}  // namespace

void write_svg(std::ostream& os, const std::vector<TrialSummary>& rows, const std::string& title) {
  std::vector<Panel> panels;
  for (const auto& row : rows) {
    if (row.failed) continue;
    auto panel = std::find_if(panels.begin(), panels.end(),
                              [&](const Panel& p) { return p.title == row.instance; });
    if (panel == panels.end()) {
      panels.push_back(Panel{row.instance, {}, 1e300, 0, 1e300, 0});
      panel = std::prev(panels.end());
    }
    auto series = std::find_if(panel->series.begin(), panel->series.end(),
                               [&](const Series& s) { return s.name == row.embedding; });
    if (series == panel->series.end()) {
      panel->series.push_back(Series{row.embedding, {}, {}});
      series = std::prev(panel->series.end());
    }
    const double x = static_cast<double>(row.ell);
    const double y = clamp_log(row.mean, 1e-16);
    series->mean.emplace_back(x, y);
    panel->xmin = std::min(panel->xmin, x);
    panel->xmax = std::max(panel->xmax, x);
    panel->ymin = std::min(panel->ymin, y);
    panel->ymax = std::max(panel->ymax, y);
    if (row.theory && *row.theory > 0) {
      series->theory.emplace_back(x, *row.theory);
      panel->ymin = std::min(panel->ymin, *row.theory);
      panel->ymax = std::max(panel->ymax, *row.theory);
    }
  }

  const int plot_w = 420, plot_h = 320, margin_l = 60, margin_b = 46, margin_t = 36, gap = 24;
  const int legend_w = 120;
  const int width = margin_l + (plot_w + gap) * std::max<int>(1, static_cast<int>(panels.size())) +
                    legend_w;
  const int height = margin_t + plot_h + margin_b;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<text x=\"" << margin_l << "\" y=\"16\" font-size=\"14\">" << title << "</text>\n";

  std::vector<std::string> legend_names;
  int panel_index = 0;
  for (const auto& panel : panels) {
    const int x0 = margin_l + panel_index * (plot_w + gap);
    const int y0 = margin_t;
    const double lx0 = std::log10(std::max(panel.xmin, 1.0));
    const double lx1 = std::log10(std::max(panel.xmax, panel.xmin + 1.0));
    const double ly0 = std::log10(clamp_log(panel.ymin, 1e-16)) - 0.05;
    const double ly1 = std::log10(clamp_log(panel.ymax, 1e-15)) + 0.05;
    auto sx = [&](double v) {
      return x0 + (std::log10(v) - lx0) / std::max(1e-12, lx1 - lx0) * plot_w;
    };
    auto sy = [&](double v) {
      return y0 + plot_h -
             (std::log10(clamp_log(v, 1e-16)) - ly0) / std::max(1e-12, ly1 - ly0) * plot_h;
    };

    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << plot_w << "\" height=\""
       << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << x0 + plot_w / 2 << "\" y=\"" << y0 - 6
       << "\" text-anchor=\"middle\">" << panel.title << "</text>\n";

    for (int e = static_cast<int>(std::ceil(ly0)); e <= static_cast<int>(std::floor(ly1)); ++e) {
      const double y = sy(std::pow(10.0, e));
      os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x0 + plot_w << "\" y2=\"" << y
         << "\" stroke=\"#ddd\"/>\n";
      os << "<text x=\"" << x0 - 4 << "\" y=\"" << y + 3
         << "\" text-anchor=\"end\">1e" << e << "</text>\n";
    }
    for (int e = static_cast<int>(std::ceil(lx0)); e <= static_cast<int>(std::floor(lx1)); ++e) {
      const double x = sx(std::pow(10.0, e));
      os << "<line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x << "\" y2=\""
         << y0 + plot_h << "\" stroke=\"#ddd\"/>\n";
      os << "<text x=\"" << x << "\" y=\"" << y0 + plot_h + 14
         << "\" text-anchor=\"middle\">1e" << e << "</text>\n";
    }
    os << "<text x=\"" << x0 + plot_w / 2 << "\" y=\"" << y0 + plot_h + 32
       << "\" text-anchor=\"middle\">sketch dimension</text>\n";

    int color_index = 0;
    for (const auto& series : panel.series) {
      const char* color = kPalette[color_index % 8];
      auto polyline = [&](const std::vector<std::pair<double, double>>& pts, bool dashed) {
        if (pts.size() < 2) return;
        os << "<polyline fill=\"none\" stroke=\"" << color << "\""
           << (dashed ? " stroke-dasharray=\"5,4\" opacity=\"0.6\"" : "") << " points=\"";
        for (const auto& [x, y] : pts) os << sx(x) << ',' << sy(y) << ' ';
        os << "\"/>\n";
      };
      polyline(series.mean, false);
      polyline(series.theory, true);
      if (std::find(legend_names.begin(), legend_names.end(), series.name) ==
          legend_names.end()) {
        legend_names.push_back(series.name);
      }
      ++color_index;
    }
    ++panel_index;
  }

  const int lx = width - legend_w + 8;
  int ly = margin_t + 10;
  for (std::size_t i = 0; i < legend_names.size(); ++i) {
    const char* color = kPalette[i % 8];
    os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 18 << "\" y2=\""
       << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << lx + 22 << "\" y=\"" << ly << "\">" << legend_names[i] << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
}

}  // namespace sketchlab
