#pragma once

#include <string>
#include <utility>
#include <vector>

namespace corpuscope {

// Minimal SVG document builder. Output is fully self-contained (no external
// assets, labels embedded as <text>) and byte-deterministic for fixed input.
class SvgCanvas {
public:
    SvgCanvas(double width, double height);

    void rect(double x, double y, double w, double h, const std::string& fill,
              double opacity = 1.0, const std::string& stroke = "", double stroke_width = 0.0);
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0, bool dashed = false);
    void circle(double cx, double cy, double r, const std::string& fill, double opacity = 1.0);
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                  double width = 1.0, bool dashed = false);
    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill,
                 double opacity = 1.0);
    // anchor: "start", "middle" or "end"; rotate in degrees about (x, y).
    void text(double x, double y, const std::string& content, double size = 11.0,
              const std::string& anchor = "start", const std::string& fill = "#333333",
              double rotate = 0.0);

    double width() const { return width_; }
    double height() const { return height_; }

    std::string str() const;

    static std::string escape(const std::string& s);

private:
    double width_;
    double height_;
    std::string body_;
};

// Maps a data interval onto a pixel interval (inverted ranges allowed, which
// is how y axes are drawn).
struct LinearScale {
    double d0 = 0.0, d1 = 1.0;
    double r0 = 0.0, r1 = 1.0;
    double operator()(double v) const {
        if (d1 == d0) return (r0 + r1) / 2.0;
        return r0 + (v - d0) / (d1 - d0) * (r1 - r0);
    }
};

std::string svg_format(double v);

}  // namespace corpuscope
