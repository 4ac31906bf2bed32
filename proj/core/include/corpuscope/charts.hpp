#pragma once

#include <string>
#include <vector>

#include "corpuscope/matrix.hpp"

namespace corpuscope {

// Chart builders behind emit_plots. Each returns a complete SVG document.

struct ChartSeries {
    std::string name;
    std::vector<double> xs;
    std::vector<double> ys;
};

struct ChartBandSeries {
    std::string name;
    std::vector<double> xs;
    std::vector<double> fitted;
    std::vector<double> lo;
    std::vector<double> hi;
};

struct ChartScatterPoint {
    double x = 0.0;
    double y = 0.0;
    std::string label;
    int cls = 0;       // palette / legend index
    double size = 4.0; // marker radius in px
};

struct ChartEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    double weight = 0.0;
};

const std::vector<std::string>& chart_palette();

std::string chart_grouped_bars(const std::string& title, const std::vector<std::string>& x_labels,
                               const std::vector<std::pair<std::string, std::vector<double>>>& series);

std::string chart_line(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<ChartSeries>& series);

// Grid of small line charts sharing the x axis, one panel per series.
std::string chart_line_panels(const std::string& title, const std::vector<ChartSeries>& panels,
                              int columns);

std::string chart_scatter(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<ChartScatterPoint>& points,
                          const std::vector<std::string>& class_names, bool label_points);

std::string chart_heatmap(const std::string& title, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, const Matrix& values,
                          bool diverging);

// Circular-layout graph; edge thickness proportional to weight.
std::string chart_graph(const std::string& title, const std::vector<std::string>& node_labels,
                        const std::vector<ChartEdge>& edges);

std::string chart_curves_with_bands(const std::string& title, const std::string& x_label,
                                    const std::string& y_label,
                                    const std::vector<ChartBandSeries>& series);

std::string chart_stacked_bars(const std::string& title, const std::vector<std::string>& x_labels,
                               const std::vector<std::pair<std::string, std::vector<double>>>& series);

}  // namespace corpuscope
