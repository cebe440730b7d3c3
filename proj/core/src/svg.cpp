#include "neyman/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>

namespace neyman {

namespace {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

struct Subplot {
    std::string title;
    std::vector<Series> series;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void text(std::ofstream& os, double x, double y, const std::string& s,
          const char* anchor, double size, const char* fill = "#333333") {
    os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\""
       << num(size) << "\" text-anchor=\"" << anchor
       << "\" font-family=\"sans-serif\" fill=\"" << fill << "\">"
       << xml_escape(s) << "</text>\n";
}

void line(std::ofstream& os, double x1, double y1, double x2, double y2,
          const char* stroke, double width, const char* dash = nullptr) {
    os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
       << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
       << "\" stroke-width=\"" << num(width) << "\"";
    if (dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
}

// One framed subplot with a linear x axis and log10 y axis.
void draw_subplot(std::ofstream& os, double ox, double oy, double w, double h,
                  const Subplot& plot, const std::string& x_label,
                  const std::string& y_label, bool reference_unit_line) {
    const double pad_l = 52, pad_r = 10, pad_t = 24, pad_b = 34;
    const double ax = ox + pad_l, ay = oy + pad_t;
    const double aw = w - pad_l - pad_r, ah = h - pad_t - pad_b;

    double xmin = 0, xmax = 1, ymin_log = 0, ymax_log = 1;
    bool have = false;
    for (const auto& s : plot.series) {
        for (const auto& [x, y] : s.points) {
            if (!(y > 0.0)) continue;
            const double ly = std::log10(y);
            if (!have) {
                xmin = xmax = x;
                ymin_log = ymax_log = ly;
                have = true;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin_log = std::min(ymin_log, ly);
                ymax_log = std::max(ymax_log, ly);
            }
        }
    }
    if (reference_unit_line && have) {
        ymin_log = std::min(ymin_log, 0.0);
        ymax_log = std::max(ymax_log, 0.0);
    }
    if (!have) {
        xmin = 0;
        xmax = 1;
        ymin_log = -1;
        ymax_log = 1;
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax_log - ymin_log < 0.2) {
        ymin_log -= 0.1;
        ymax_log += 0.1;
    } else {
        const double margin = 0.05 * (ymax_log - ymin_log);
        ymin_log -= margin;
        ymax_log += margin;
    }

    const auto sx = [&](double x) { return ax + (x - xmin) / (xmax - xmin) * aw; };
    const auto sy = [&](double y) {
        return ay + ah - (std::log10(y) - ymin_log) / (ymax_log - ymin_log) * ah;
    };

    os << "<rect x=\"" << num(ax) << "\" y=\"" << num(ay) << "\" width=\""
       << num(aw) << "\" height=\"" << num(ah)
       << "\" fill=\"none\" stroke=\"#666666\" stroke-width=\"1\"/>\n";
    text(os, ox + w / 2, oy + 14, plot.title, "middle", 12);

    for (double fx : {0.0, 0.5, 1.0}) {
        const double xv = xmin + fx * (xmax - xmin);
        const double px = sx(xv);
        line(os, px, ay + ah, px, ay + ah + 4, "#666666", 1);
        text(os, px, ay + ah + 16, num(xv), "middle", 9);
    }
    const int lo = static_cast<int>(std::ceil(ymin_log));
    const int hi = static_cast<int>(std::floor(ymax_log));
    int step = 1;
    while ((hi - lo) / step > 5) ++step;
    for (int k = lo; k <= hi; k += step) {
        const double py = ay + ah - (k - ymin_log) / (ymax_log - ymin_log) * ah;
        line(os, ax - 4, py, ax, py, "#666666", 1);
        line(os, ax, py, ax + aw, py, "#eeeeee", 1);
        text(os, ax - 6, py + 3, num(std::pow(10.0, k)), "end", 9);
    }
    text(os, ax + aw / 2, oy + h - 6, x_label, "middle", 10);
    text(os, ox + 12, ay - 8, y_label, "start", 10);

    if (reference_unit_line) {
        const double py = sy(1.0);
        line(os, ax, py, ax + aw, py, "#999999", 1, "4,3");
    }

    for (const auto& s : plot.series) {
        std::string path;
        bool pen_down = false;
        for (const auto& [x, y] : s.points) {
            if (!(y > 0.0)) {
                pen_down = false;
                continue;
            }
            path += pen_down ? " L " : " M ";
            path += num(sx(x)) + " " + num(sy(y));
            pen_down = true;
            os << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y))
               << "\" r=\"2\" fill=\"" << s.color << "\"/>\n";
        }
        if (!path.empty()) {
            os << "<path d=\"" << path << "\" fill=\"none\" stroke=\""
               << s.color << "\" stroke-width=\"1.5\"/>\n";
        }
    }
}

void write_figure(const std::filesystem::path& path,
                  const std::vector<Subplot>& plots,
                  const std::vector<std::pair<std::string, std::string>>& legend,
                  const std::string& x_label, const std::string& y_label,
                  bool reference_unit_line) {
    const int n = static_cast<int>(plots.size());
    const int ncols =
        std::max(1, static_cast<int>(std::ceil(std::sqrt(double(n)))));
    const int nrows = (n + ncols - 1) / ncols;
    const double cell_w = 300, cell_h = 240, margin = 10, legend_h = 26;
    const double width = margin * 2 + ncols * cell_w;
    const double height = margin * 2 + legend_h + nrows * cell_h;

    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open: " + path.string());
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
       << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
       << " " << num(height) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    double lx = margin + 4;
    for (const auto& [label, color] : legend) {
        line(os, lx, margin + 12, lx + 18, margin + 12, color.c_str(), 2.5);
        text(os, lx + 22, margin + 16, label, "start", 11);
        lx += 30 + 7.0 * static_cast<double>(label.size()) + 18;
    }

    for (int i = 0; i < n; ++i) {
        const int r = i / ncols, col = i % ncols;
        draw_subplot(os, margin + col * cell_w, margin + legend_h + r * cell_h,
                     cell_w, cell_h, plots[static_cast<std::size_t>(i)],
                     x_label, y_label, reference_unit_line);
    }
    os << "</svg>\n";
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void write_variance_grid_svg(const ExperimentResult& result,
                             const std::filesystem::path& path) {
    std::vector<std::string> instances;
    std::vector<std::string> strategies;
    for (const auto& c : result.cells) {
        if (std::find(instances.begin(), instances.end(), c.instance) ==
            instances.end()) {
            instances.push_back(c.instance);
        }
        if (std::find(strategies.begin(), strategies.end(), c.strategy) ==
            strategies.end()) {
            strategies.push_back(c.strategy);
        }
    }
    std::vector<Subplot> plots;
    std::vector<std::pair<std::string, std::string>> legend;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
        legend.emplace_back(strategies[s], kPalette[s % 8]);
    }
    for (const auto& inst : instances) {
        Subplot plot;
        plot.title = inst;
        for (std::size_t s = 0; s < strategies.size(); ++s) {
            Series series{strategies[s], kPalette[s % 8], {}};
            for (const auto& c : result.cells) {
                if (c.instance == inst && c.strategy == strategies[s]) {
                    series.points.emplace_back(
                        static_cast<double>(c.horizon), c.variance);
                }
            }
            plot.series.push_back(std::move(series));
        }
        plots.push_back(std::move(plot));
    }
    write_figure(path, plots, legend, "samples T", "variance", false);
}

void write_clip_ratio_svg(const ExperimentResult& result,
                          const std::filesystem::path& path) {
    std::vector<std::string> instances;
    for (const auto& r : result.clip_rows) {
        if (std::find(instances.begin(), instances.end(), r.instance) ==
            instances.end()) {
            instances.push_back(r.instance);
        }
    }
    Subplot plot;
    plot.title = "predicted / empirical clipping time";
    std::vector<std::pair<std::string, std::string>> legend;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        Series series{instances[i], kPalette[i % 8], {}};
        for (const auto& r : result.clip_rows) {
            if (r.instance == instances[i] && r.valid &&
                !std::isnan(r.ratio)) {
                series.points.emplace_back(r.alpha, r.ratio);
            }
        }
        legend.emplace_back(instances[i], kPalette[i % 8]);
        plot.series.push_back(std::move(series));
    }
    write_figure(path, {plot}, legend, "alpha", "ratio", true);
}

std::vector<std::filesystem::path> emit_plots(const ExperimentResult& result,
                                              const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    if (!result.cells.empty()) {
        const auto p = dir / "comparison_variance.svg";
        write_variance_grid_svg(result, p);
        written.push_back(p);
    }
    if (!result.clip_rows.empty()) {
        const auto p = dir / "clip_ratio.svg";
        write_clip_ratio_svg(result, p);
        written.push_back(p);
    }
    return written;
}

}  // namespace neyman
