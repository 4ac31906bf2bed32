#include "corpuscope/charts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "corpuscope/svg.hpp"

namespace corpuscope {

namespace {

constexpr double kMarginLeft = 62.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 48.0;

std::string tick_format(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range nice_range(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) return {0.0, 1.0};
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = (hi - lo) * 0.06;
    return {lo - pad, hi + pad};
}

void draw_frame(SvgCanvas& svg, const LinearScale& sx, const LinearScale& sy,
                const std::string& title, const std::string& x_label,
                const std::string& y_label) {
    const double x0 = sx.r0, x1 = sx.r1;
    const double y0 = sy.r0, y1 = sy.r1;  // y0 is the bottom (larger pixel value)
    svg.line(x0, y0, x1, y0, "#444444", 1.0);
    svg.line(x0, y0, x0, y1, "#444444", 1.0);
    if (!title.empty()) {
        svg.text((x0 + x1) / 2.0, y1 - 12.0, title, 13.0, "middle", "#111111");
    }
    if (!x_label.empty()) {
        svg.text((x0 + x1) / 2.0, y0 + 36.0, x_label, 11.0, "middle");
    }
    if (!y_label.empty()) {
        svg.text(x0 - 44.0, (y0 + y1) / 2.0, y_label, 11.0, "middle", "#333333", -90.0);
    }
    // y ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = sy.d0 + (sy.d1 - sy.d0) * i / 4.0;
        const double py = sy(v);
        svg.line(x0 - 3.0, py, x0, py, "#444444", 1.0);
        svg.line(x0, py, x1, py, "#dddddd", 0.5);
        svg.text(x0 - 6.0, py + 3.5, tick_format(v), 9.0, "end");
    }
}

void draw_x_ticks(SvgCanvas& svg, const LinearScale& sx, const LinearScale& sy, int count) {
    for (int i = 0; i <= count; ++i) {
        const double v = sx.d0 + (sx.d1 - sx.d0) * i / count;
        const double px = sx(v);
        svg.line(px, sy.r0, px, sy.r0 + 3.0, "#444444", 1.0);
        svg.text(px, sy.r0 + 15.0, tick_format(v), 9.0, "middle");
    }
}

}  // namespace

const std::vector<std::string>& chart_palette() {
    static const std::vector<std::string> palette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
        "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
        "#98df8a", "#ff9896", "#c5b0d5", "#c49c94", "#f7b6d2", "#dbdb8d",
        "#9edae5", "#393b79"};
    return palette;
}

std::string chart_grouped_bars(const std::string& title, const std::vector<std::string>& x_labels,
                               const std::vector<std::pair<std::string, std::vector<double>>>& series) {
    const double width = std::max(560.0, 30.0 * double(x_labels.size()) + 120.0);
    const double height = 360.0;
    SvgCanvas svg(width, height);

    double top = 0.0;
    for (const auto& [name, vals] : series) {
        for (double v : vals) top = std::max(top, v);
    }
    if (top <= 0.0) top = 1.0;

    LinearScale sx{-0.5, double(x_labels.size()) - 0.5, kMarginLeft, width - kMarginRight};
    LinearScale sy{0.0, top * 1.06, height - kMarginBottom, kMarginTop};
    draw_frame(svg, sx, sy, title, "", "publications");

    const double slot = (sx.r1 - sx.r0) / std::max<std::size_t>(1, x_labels.size());
    const double bar_w = slot * 0.8 / std::max<std::size_t>(1, series.size());
    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string& color = chart_palette()[s % chart_palette().size()];
        const auto& vals = series[s].second;
        for (std::size_t i = 0; i < x_labels.size() && i < vals.size(); ++i) {
            const double cx = sx(double(i)) - slot * 0.4 + bar_w * double(s);
            const double y = sy(vals[i]);
            svg.rect(cx, y, bar_w, sy(0.0) - y, color, 0.9);
        }
        // legend
        const double lx = sx.r0 + 10.0 + 130.0 * double(s);
        svg.rect(lx, kMarginTop + 4.0, 10.0, 10.0, color);
        svg.text(lx + 14.0, kMarginTop + 13.0, series[s].first, 10.0);
    }
    for (std::size_t i = 0; i < x_labels.size(); ++i) {
        const double px = sx(double(i));
        svg.text(px, sy.r0 + 14.0, x_labels[i], 8.5, "middle", "#333333", -45.0);
    }
    return svg.str();
}

std::string chart_line(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<ChartSeries>& series) {
    const double width = 620.0, height = 360.0;
    SvgCanvas svg(width, height);

    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (first) {
                xlo = xhi = s.xs[i];
                ylo = yhi = s.ys[i];
                first = false;
            }
            xlo = std::min(xlo, s.xs[i]);
            xhi = std::max(xhi, s.xs[i]);
            ylo = std::min(ylo, s.ys[i]);
            yhi = std::max(yhi, s.ys[i]);
        }
    }
    const Range ry = nice_range(ylo, yhi);
    LinearScale sx{xlo, xhi == xlo ? xlo + 1 : xhi, kMarginLeft, width - kMarginRight};
    LinearScale sy{ry.lo, ry.hi, height - kMarginBottom, kMarginTop};
    draw_frame(svg, sx, sy, title, x_label, y_label);
    draw_x_ticks(svg, sx, sy, 5);

    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string& color = chart_palette()[s % chart_palette().size()];
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < series[s].xs.size(); ++i) {
            pts.emplace_back(sx(series[s].xs[i]), sy(series[s].ys[i]));
        }
        svg.polyline(pts, color, 1.6);
        for (const auto& p : pts) svg.circle(p.first, p.second, 2.2, color);
        if (series.size() > 1) {
            const double lx = sx.r0 + 10.0 + 150.0 * double(s);
            svg.line(lx, kMarginTop + 9.0, lx + 14.0, kMarginTop + 9.0, color, 2.0);
            svg.text(lx + 18.0, kMarginTop + 12.0, series[s].name, 10.0);
        }
    }
    return svg.str();
}

std::string chart_line_panels(const std::string& title, const std::vector<ChartSeries>& panels,
                              int columns) {
    columns = std::max(1, columns);
    const int rows = int((panels.size() + columns - 1) / std::size_t(columns));
    const double panel_w = 300.0, panel_h = 210.0;
    const double width = panel_w * columns + 40.0;
    const double height = panel_h * rows + 50.0;
    SvgCanvas svg(width, height);
    svg.text(width / 2.0, 22.0, title, 14.0, "middle", "#111111");

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const int r = int(p) / columns, c = int(p) % columns;
        const double ox = 20.0 + c * panel_w;
        const double oy = 36.0 + r * panel_h;
        const auto& s = panels[p];

        double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
        if (!s.xs.empty()) {
            xlo = *std::min_element(s.xs.begin(), s.xs.end());
            xhi = *std::max_element(s.xs.begin(), s.xs.end());
            ylo = *std::min_element(s.ys.begin(), s.ys.end());
            yhi = *std::max_element(s.ys.begin(), s.ys.end());
        }
        const Range ry = nice_range(ylo, yhi);
        LinearScale sx{xlo, xhi == xlo ? xlo + 1 : xhi, ox + 52.0, ox + panel_w - 16.0};
        LinearScale sy{ry.lo, ry.hi, oy + panel_h - 36.0, oy + 26.0};
        draw_frame(svg, sx, sy, s.name, "", "");
        draw_x_ticks(svg, sx, sy, 4);

        const std::string& color = chart_palette()[p % chart_palette().size()];
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            pts.emplace_back(sx(s.xs[i]), sy(s.ys[i]));
        }
        svg.polyline(pts, color, 1.5);
        for (const auto& pt : pts) svg.circle(pt.first, pt.second, 2.0, color);
    }
    return svg.str();
}

std::string chart_scatter(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<ChartScatterPoint>& points,
                          const std::vector<std::string>& class_names, bool label_points) {
    const double width = 640.0, height = 480.0;
    SvgCanvas svg(width, height);

    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    for (const auto& p : points) {
        if (first) {
            xlo = xhi = p.x;
            ylo = yhi = p.y;
            first = false;
        }
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    const Range rx = nice_range(xlo, xhi), ry = nice_range(ylo, yhi);
    LinearScale sx{rx.lo, rx.hi, kMarginLeft, width - kMarginRight};
    LinearScale sy{ry.lo, ry.hi, height - kMarginBottom, kMarginTop};
    draw_frame(svg, sx, sy, title, x_label, y_label);
    draw_x_ticks(svg, sx, sy, 5);

    // zero axes help read CA maps
    if (rx.lo < 0.0 && rx.hi > 0.0) svg.line(sx(0.0), sy.r0, sx(0.0), sy.r1, "#bbbbbb", 0.8, true);
    if (ry.lo < 0.0 && ry.hi > 0.0) svg.line(sx.r0, sy(0.0), sx.r1, sy(0.0), "#bbbbbb", 0.8, true);

    for (const auto& p : points) {
        const std::string& color = chart_palette()[std::size_t(p.cls) % chart_palette().size()];
        svg.circle(sx(p.x), sy(p.y), p.size, color, 0.75);
        if (label_points && !p.label.empty()) {
            svg.text(sx(p.x) + p.size + 2.0, sy(p.y) + 3.0, p.label, 8.5, "start", "#555555");
        }
    }
    for (std::size_t c = 0; c < class_names.size(); ++c) {
        const double lx = sx.r0 + 10.0 + 120.0 * double(c);
        svg.circle(lx, kMarginTop + 9.0, 4.0, chart_palette()[c % chart_palette().size()]);
        svg.text(lx + 8.0, kMarginTop + 12.0, class_names[c], 10.0);
    }
    return svg.str();
}

namespace {

std::string heat_color(double t, bool diverging) {
    t = std::clamp(t, 0.0, 1.0);
    int r, g, b;
    if (diverging) {
        // blue -> white -> red
        if (t < 0.5) {
            const double u = t * 2.0;
            r = int(49 + (255 - 49) * u);
            g = int(104 + (255 - 104) * u);
            b = int(166 + (255 - 166) * u);
        } else {
            const double u = (t - 0.5) * 2.0;
            r = int(255 - (255 - 178) * u);
            g = int(255 - (255 - 24) * u);
            b = int(255 - (255 - 43) * u);
        }
    } else {
        // white -> blue
        r = int(255 - (255 - 33) * t);
        g = int(255 - (255 - 102) * t);
        b = int(255 - (255 - 172) * t);
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string chart_heatmap(const std::string& title, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, const Matrix& values,
                          bool diverging) {
    const std::size_t n_rows = values.rows(), n_cols = values.cols();
    const double cell = std::max(14.0, std::min(26.0, 420.0 / std::max<std::size_t>(1, n_cols)));
    const double width = kMarginLeft + cell * double(n_cols) + 90.0;
    const double height = kMarginTop + 14.0 + cell * double(n_rows) + kMarginBottom;
    SvgCanvas svg(width, height);
    svg.text(width / 2.0, 20.0, title, 13.0, "middle", "#111111");

    double vmin = 0.0, vmax = 1.0;
    bool first = true;
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            const double v = values(i, j);
            if (!std::isfinite(v)) continue;
            if (first) {
                vmin = vmax = v;
                first = false;
            }
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    }
    if (diverging) {
        const double a = std::max(std::abs(vmin), std::abs(vmax));
        vmin = -a;
        vmax = a;
    }
    if (vmax == vmin) vmax = vmin + 1.0;

    const double oy = kMarginTop + 14.0;
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            const double v = values(i, j);
            const double x = kMarginLeft + cell * double(j);
            const double y = oy + cell * double(i);
            if (std::isfinite(v)) {
                svg.rect(x, y, cell, cell, heat_color((v - vmin) / (vmax - vmin), diverging), 1.0,
                         "#ffffff", 0.5);
            } else {
                svg.rect(x, y, cell, cell, "#eeeeee", 1.0, "#ffffff", 0.5);
            }
        }
        svg.text(kMarginLeft - 5.0, oy + cell * double(i) + cell / 2.0 + 3.0, row_labels[i], 8.5,
                 "end");
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
        svg.text(kMarginLeft + cell * double(j) + cell / 2.0, oy + cell * double(n_rows) + 12.0,
                 col_labels[j], 8.5, "middle", "#333333", -45.0);
    }
    // color bar
    const double bx = kMarginLeft + cell * double(n_cols) + 24.0;
    const int bar_steps = 32;
    const double bar_h = cell * double(n_rows);
    for (int s = 0; s < bar_steps; ++s) {
        const double t = 1.0 - double(s) / double(bar_steps - 1);
        svg.rect(bx, oy + bar_h * double(s) / bar_steps, 14.0, bar_h / bar_steps + 0.5,
                 heat_color(t, diverging));
    }
    svg.text(bx + 18.0, oy + 8.0, tick_format(vmax), 8.5);
    svg.text(bx + 18.0, oy + bar_h, tick_format(vmin), 8.5);
    return svg.str();
}

std::string chart_graph(const std::string& title, const std::vector<std::string>& node_labels,
                        const std::vector<ChartEdge>& edges) {
    const double width = 520.0, height = 520.0;
    SvgCanvas svg(width, height);
    svg.text(width / 2.0, 22.0, title, 13.0, "middle", "#111111");

    const double cx = width / 2.0, cy = height / 2.0 + 10.0, radius = 190.0;
    const std::size_t n = node_labels.size();
    std::vector<std::pair<double, double>> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = -1.5707963267948966 + 6.283185307179586 * double(i) / double(std::max<std::size_t>(1, n));
        pos[i] = {cx + radius * std::cos(a), cy + radius * std::sin(a)};
    }
    double wmax = 0.0;
    for (const auto& e : edges) wmax = std::max(wmax, e.weight);
    if (wmax <= 0.0) wmax = 1.0;
    for (const auto& e : edges) {
        if (e.a >= n || e.b >= n) continue;
        svg.line(pos[e.a].first, pos[e.a].second, pos[e.b].first, pos[e.b].second, "#1f77b4",
                 0.8 + 4.0 * e.weight / wmax);
        const double mx = (pos[e.a].first + pos[e.b].first) / 2.0;
        const double my = (pos[e.a].second + pos[e.b].second) / 2.0;
        svg.text(mx + 4.0, my - 4.0, tick_format(e.weight), 8.5, "start", "#555555");
    }
    for (std::size_t i = 0; i < n; ++i) {
        svg.circle(pos[i].first, pos[i].second, 12.0, "#ff7f0e", 0.9);
        svg.text(pos[i].first, pos[i].second + 3.5, node_labels[i], 8.5, "middle", "#111111");
    }
    return svg.str();
}

std::string chart_curves_with_bands(const std::string& title, const std::string& x_label,
                                    const std::string& y_label,
                                    const std::vector<ChartBandSeries>& series) {
    const double width = 680.0, height = 440.0;
    SvgCanvas svg(width, height);

    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (first) {
                xlo = xhi = s.xs[i];
                ylo = s.lo[i];
                yhi = s.hi[i];
                first = false;
            }
            xlo = std::min(xlo, s.xs[i]);
            xhi = std::max(xhi, s.xs[i]);
            ylo = std::min(ylo, s.lo[i]);
            yhi = std::max(yhi, s.hi[i]);
        }
    }
    const Range ry = nice_range(ylo, yhi);
    LinearScale sx{xlo, xhi == xlo ? xlo + 1 : xhi, kMarginLeft, width - kMarginRight};
    LinearScale sy{ry.lo, ry.hi, height - kMarginBottom, kMarginTop};
    draw_frame(svg, sx, sy, title, x_label, y_label);
    draw_x_ticks(svg, sx, sy, 5);

    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string& color = chart_palette()[s % chart_palette().size()];
        const auto& bs = series[s];
        std::vector<std::pair<double, double>> band;
        for (std::size_t i = 0; i < bs.xs.size(); ++i) band.emplace_back(sx(bs.xs[i]), sy(bs.hi[i]));
        for (std::size_t i = bs.xs.size(); i-- > 0;) band.emplace_back(sx(bs.xs[i]), sy(bs.lo[i]));
        svg.polygon(band, color, 0.15);

        std::vector<std::pair<double, double>> mid, lo, hi;
        for (std::size_t i = 0; i < bs.xs.size(); ++i) {
            mid.emplace_back(sx(bs.xs[i]), sy(bs.fitted[i]));
            lo.emplace_back(sx(bs.xs[i]), sy(bs.lo[i]));
            hi.emplace_back(sx(bs.xs[i]), sy(bs.hi[i]));
        }
        svg.polyline(lo, color, 0.7, true);
        svg.polyline(hi, color, 0.7, true);
        svg.polyline(mid, color, 1.8);
        if (!mid.empty()) {
            svg.text(mid.back().first + 3.0, mid.back().second + 3.0, bs.name, 8.5, "start", color);
        }
    }
    return svg.str();
}

std::string chart_stacked_bars(const std::string& title, const std::vector<std::string>& x_labels,
                               const std::vector<std::pair<std::string, std::vector<double>>>& series) {
    const double width = std::max(620.0, 30.0 * double(x_labels.size()) + 160.0);
    const double height = 420.0;
    SvgCanvas svg(width, height);

    double top = 0.0;
    for (std::size_t i = 0; i < x_labels.size(); ++i) {
        double sum = 0.0;
        for (const auto& [name, vals] : series) {
            if (i < vals.size()) sum += vals[i];
        }
        top = std::max(top, sum);
    }
    if (top <= 0.0) top = 1.0;

    LinearScale sx{-0.5, double(x_labels.size()) - 0.5, kMarginLeft, width - kMarginRight - 110.0};
    LinearScale sy{0.0, top * 1.05, height - kMarginBottom, kMarginTop};
    draw_frame(svg, sx, sy, title, "", "documents");

    const double slot = (sx.r1 - sx.r0) / std::max<std::size_t>(1, x_labels.size());
    for (std::size_t i = 0; i < x_labels.size(); ++i) {
        double acc = 0.0;
        for (std::size_t s = 0; s < series.size(); ++s) {
            const double v = i < series[s].second.size() ? series[s].second[i] : 0.0;
            if (v <= 0.0) continue;
            const double y1 = sy(acc), y2 = sy(acc + v);
            svg.rect(sx(double(i)) - slot * 0.38, y2, slot * 0.76, y1 - y2,
                     chart_palette()[s % chart_palette().size()], 0.95);
            acc += v;
        }
        svg.text(sx(double(i)), sy.r0 + 14.0, x_labels[i], 8.5, "middle", "#333333", -45.0);
    }
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double ly = kMarginTop + 14.0 * double(s);
        svg.rect(width - 124.0, ly, 10.0, 10.0, chart_palette()[s % chart_palette().size()]);
        svg.text(width - 110.0, ly + 9.0, series[s].first, 9.5);
    }
    return svg.str();
}

}  // namespace corpuscope
