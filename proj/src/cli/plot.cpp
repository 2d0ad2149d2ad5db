#include "cli/plot.hpp"

#include "bj/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>

namespace bj::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 400;
constexpr double kLeft = 80;
constexpr double kRight = 24;
constexpr double kTop = 44;
constexpr double kBottom = 56;

constexpr std::array<const char*, 6> kColours{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::array<char, 6> kMarks{'*', 'o', '+', 'x', '#', '%'};

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void finish() {
        if (!std::isfinite(lo)) {
            lo = -1;
            hi = 1;
        }
        if (hi - lo < 1e-300) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
};

std::size_t point_count(const LineChart& c) {
    std::size_t n = c.x_labels.size();
    for (const auto& l : c.lines) n = std::max(n, l.y.size());
    for (const auto& b : c.bands) n = std::max(n, b.lower.size());
    return n;
}

Range y_range(const LineChart& c) {
    Range r;
    for (const auto& l : c.lines) for (double v : l.y) r.add(v);
    for (const auto& b : c.bands) {
        for (double v : b.lower) r.add(v);
        for (double v : b.upper) r.add(v);
    }
    r.finish();
    return r;
}

struct Frame {
    std::size_t n;
    Range y;

    [[nodiscard]] double px(double i) const {
        const double span = n > 1 ? static_cast<double>(n - 1) : 1.0;
        return kLeft + (kWidth - kLeft - kRight) * i / span;
    }
    [[nodiscard]] double py(double v) const {
        return kTop + (kHeight - kTop - kBottom) * (y.hi - v) / (y.hi - y.lo);
    }
};

std::string svg_open(const std::string& title) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\" font-size=\"11\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{3}</text>\n",
        kWidth, kHeight, kWidth / 2, escape(title));
}

std::string svg_axes(const Frame& f) {
    std::string out = fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333\"/>\n", kLeft, kTop,
        kWidth - kLeft - kRight, kHeight - kTop - kBottom);
    for (int i = 0; i <= 4; ++i) {
        const double v = f.y.lo + (f.y.hi - f.y.lo) * i / 4.0;
        const double y = f.py(v);
        out += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>\n", kLeft, y,
                           kWidth - kRight, y);
        out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 6, y + 4, v);
    }
    return out;
}

std::string polyline(const Frame& f, const std::vector<double>& y, const char* colour, bool dashed) {
    std::string out;
    std::string pts;
    auto flush = [&] {
        if (!pts.empty()) {
            out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.6\"{} points=\"{}\"/>\n",
                               colour, dashed ? " stroke-dasharray=\"5,4\"" : "", pts);
            pts.clear();
        }
    };
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!std::isfinite(y[i])) {
            flush();
            continue;
        }
        pts += fmt::format("{}{:.2f},{:.2f}", pts.empty() ? "" : " ", f.px(static_cast<double>(i)), f.py(y[i]));
    }
    flush();
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError(fmt::format("cannot write '{}'", path.string()));
    }
    out << text;
    if (!out) {
        throw DataError(fmt::format("failed writing '{}'", path.string()));
    }
}

std::vector<std::filesystem::path> write_pair(const std::filesystem::path& dir, const std::string& name,
                                              const std::string& svg, const std::string& ascii) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw DataError(fmt::format("cannot create plot directory '{}': {}", dir.string(), ec.message()));
    }
    const auto svg_path = dir / (name + ".svg");
    const auto txt_path = dir / (name + ".txt");
    write_text(svg_path, svg);
    write_text(txt_path, ascii);
    return {svg_path, txt_path};
}

}  // namespace

std::string render_svg(const LineChart& chart) {
    const Frame f{point_count(chart), y_range(chart)};
    std::string out = svg_open(chart.title) + svg_axes(f);

    for (std::size_t b = 0; b < chart.bands.size(); ++b) {
        const auto& band = chart.bands[b];
        std::string fwd, back;
        for (std::size_t i = 0; i < band.lower.size() && i < band.upper.size(); ++i) {
            if (!std::isfinite(band.lower[i]) || !std::isfinite(band.upper[i])) continue;
            fwd += fmt::format("{:.2f},{:.2f} ", f.px(static_cast<double>(i)), f.py(band.lower[i]));
            back.insert(0, fmt::format("{:.2f},{:.2f} ", f.px(static_cast<double>(i)), f.py(band.upper[i])));
        }
        if (!fwd.empty()) {
            out += fmt::format("<polygon fill=\"#1f77b4\" fill-opacity=\"{:.2f}\" stroke=\"none\" points=\"{}{}\"/>\n",
                               band.opacity, fwd, back);
        }
    }
    for (std::size_t l = 0; l < chart.lines.size(); ++l) {
        out += polyline(f, chart.lines[l].y, kColours[l % kColours.size()], chart.lines[l].dashed);
    }

    const std::size_t n = chart.x_labels.size();
    const std::size_t every = std::max<std::size_t>(1, (n + 7) / 8);
    for (std::size_t i = 0; i < n; i += every) {
        out += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                           f.px(static_cast<double>(i)), kHeight - kBottom + 18, escape(chart.x_labels[i]));
    }
    double ly = kTop + 14;
    for (std::size_t l = 0; l < chart.lines.size(); ++l) {
        if (chart.lines[l].label.empty()) continue;
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
                           kWidth - kRight - 150, ly - 4, kWidth - kRight - 130, kColours[l % kColours.size()]);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", kWidth - kRight - 124, ly,
                           escape(chart.lines[l].label));
        ly += 14;
    }
    return out + "</svg>\n";
}

std::string render_svg(const BarChart& chart) {
    Range r;
    for (double v : chart.values) r.add(v);
    r.add(chart.bound);
    r.add(-chart.bound);
    r.add(0.0);
    r.finish();
    const std::size_t n = chart.lags.size();
    const Frame f{n + 2, r};
    std::string out = svg_open(chart.title) + svg_axes(f);
    out += fmt::format("<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#333\"/>\n", kLeft,
                       f.py(0.0), kWidth - kRight);
    for (double b : {chart.bound, -chart.bound}) {
        out += fmt::format(
            "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#1f77b4\" stroke-dasharray=\"5,4\"/>\n",
            kLeft, f.py(b), kWidth - kRight);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double x = f.px(static_cast<double>(i + 1));
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#222\" "
                           "stroke-width=\"3\"/>\n",
                           x, f.py(0.0), f.py(chart.values[i]));
        out += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", x,
                           kHeight - kBottom + 18, chart.lags[i]);
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">Lag</text>\n", kWidth / 2, kHeight - 14);
    return out + "</svg>\n";
}

std::string render_ascii(const LineChart& chart) {
    constexpr int rows = 20;
    constexpr int cols = 72;
    const std::size_t n = point_count(chart);
    const Range r = y_range(chart);
    std::vector<std::string> grid(rows, std::string(cols, ' '));
    auto col_of = [&](std::size_t i) {
        return n > 1 ? static_cast<int>(std::lround(static_cast<double>(i) * (cols - 1) / static_cast<double>(n - 1)))
                     : 0;
    };
    auto row_of = [&](double v) {
        return std::clamp(static_cast<int>(std::lround((r.hi - v) / (r.hi - r.lo) * (rows - 1))), 0, rows - 1);
    };
    for (const auto& band : chart.bands) {
        for (std::size_t i = 0; i < band.lower.size() && i < band.upper.size(); ++i) {
            if (!std::isfinite(band.lower[i]) || !std::isfinite(band.upper[i])) continue;
            for (int rr = row_of(band.upper[i]); rr <= row_of(band.lower[i]); ++rr) {
                grid[static_cast<std::size_t>(rr)][static_cast<std::size_t>(col_of(i))] = '.';
            }
        }
    }
    for (std::size_t l = 0; l < chart.lines.size(); ++l) {
        const auto& y = chart.lines[l].y;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!std::isfinite(y[i])) continue;
            grid[static_cast<std::size_t>(row_of(y[i]))][static_cast<std::size_t>(col_of(i))] =
                kMarks[l % kMarks.size()];
        }
    }
    std::string out = chart.title + "\n";
    for (int rr = 0; rr < rows; ++rr) {
        std::string label;
        if (rr == 0) label = fmt::format("{:.4g}", r.hi);
        if (rr == rows - 1) label = fmt::format("{:.4g}", r.lo);
        out += fmt::format("{:>11} |{}\n", label, grid[static_cast<std::size_t>(rr)]);
    }
    out += fmt::format("{:>11} +{}\n", "", std::string(cols, '-'));
    if (!chart.x_labels.empty()) {
        out += fmt::format("{:>11}  {}{:>{}}\n", "", chart.x_labels.front(), chart.x_labels.back(),
                           cols - static_cast<int>(chart.x_labels.front().size()));
    }
    for (std::size_t l = 0; l < chart.lines.size(); ++l) {
        if (!chart.lines[l].label.empty()) {
            out += fmt::format("  {} {}\n", kMarks[l % kMarks.size()], chart.lines[l].label);
        }
    }
    if (!chart.bands.empty()) out += "  . interval band\n";
    return out;
}

std::string render_ascii(const BarChart& chart) {
    constexpr int half = 30;
    std::string out = chart.title + "\n";
    const int bound_col = static_cast<int>(std::lround(std::min(1.0, chart.bound) * half));
    for (std::size_t i = 0; i < chart.lags.size(); ++i) {
        std::string line(2 * half + 1, ' ');
        line[half] = '|';
        if (bound_col > 0 && bound_col <= half) {
            line[static_cast<std::size_t>(half - bound_col)] = ':';
            line[static_cast<std::size_t>(half + bound_col)] = ':';
        }
        const double v = std::clamp(chart.values[i], -1.0, 1.0);
        const int len = static_cast<int>(std::lround(std::abs(v) * half));
        for (int k = 1; k <= len; ++k) {
            line[static_cast<std::size_t>(v < 0 ? half - k : half + k)] = '#';
        }
        out += fmt::format("{:>4} {:>10.4f} {}\n", chart.lags[i], chart.values[i], line);
    }
    out += fmt::format("bounds (:) at ±{:.4f}\n", chart.bound);
    return out;
}

std::vector<std::filesystem::path> write_plot(const std::filesystem::path& dir, const std::string& name,
                                              const LineChart& chart) {
    return write_pair(dir, name, render_svg(chart), render_ascii(chart));
}

std::vector<std::filesystem::path> write_plot(const std::filesystem::path& dir, const std::string& name,
                                              const BarChart& chart) {
    return write_pair(dir, name, render_svg(chart), render_ascii(chart));
}

}  // namespace bj::cli
