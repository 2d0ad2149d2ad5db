#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bj::cli {

/// One polyline; NaN entries leave gaps.
struct PlotLine {
    std::vector<double> y;
    std::string label;
    bool dashed = false;
};

/// Shaded band between two curves (NaN entries are skipped).
struct PlotBand {
    std::vector<double> lower;
    std::vector<double> upper;
    double opacity = 0.25;
};

struct LineChart {
    std::string title;
    std::vector<std::string> x_labels;
    std::vector<PlotLine> lines;
    std::vector<PlotBand> bands;
};

struct BarChart {
    std::string title;
    std::vector<int> lags;
    std::vector<double> values;
    /// Drawn as dashed horizontal lines at +/- bound.
    double bound = 0;
};

/// Writes <dir>/<name>.svg and <dir>/<name>.txt; returns both paths.
std::vector<std::filesystem::path> write_plot(const std::filesystem::path& dir, const std::string& name,
                                              const LineChart& chart);
std::vector<std::filesystem::path> write_plot(const std::filesystem::path& dir, const std::string& name,
                                              const BarChart& chart);

[[nodiscard]] std::string render_svg(const LineChart& chart);
[[nodiscard]] std::string render_svg(const BarChart& chart);
[[nodiscard]] std::string render_ascii(const LineChart& chart);
[[nodiscard]] std::string render_ascii(const BarChart& chart);

}  // namespace bj::cli
