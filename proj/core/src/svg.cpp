#include "corpuscope/svg.hpp"

#include <cmath>
#include <cstdio>

namespace corpuscope {

std::string svg_format(double v) {
    if (!std::isfinite(v)) v = 0.0;
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string SvgCanvas::escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

SvgCanvas::SvgCanvas(double width, double height) : width_(width), height_(height) {}

void SvgCanvas::rect(double x, double y, double w, double h, const std::string& fill,
                     double opacity, const std::string& stroke, double stroke_width) {
    body_ += "<rect x=\"" + svg_format(x) + "\" y=\"" + svg_format(y) + "\" width=\"" +
             svg_format(w) + "\" height=\"" + svg_format(h) + "\" fill=\"" + fill + "\"";
    if (opacity != 1.0) body_ += " fill-opacity=\"" + svg_format(opacity) + "\"";
    if (!stroke.empty()) {
        body_ += " stroke=\"" + stroke + "\" stroke-width=\"" + svg_format(stroke_width) + "\"";
    }
    body_ += "/>\n";
}

void SvgCanvas::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                     double width, bool dashed) {
    body_ += "<line x1=\"" + svg_format(x1) + "\" y1=\"" + svg_format(y1) + "\" x2=\"" +
             svg_format(x2) + "\" y2=\"" + svg_format(y2) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"" + svg_format(width) + "\"";
    if (dashed) body_ += " stroke-dasharray=\"4 3\"";
    body_ += "/>\n";
}

void SvgCanvas::circle(double cx, double cy, double r, const std::string& fill, double opacity) {
    body_ += "<circle cx=\"" + svg_format(cx) + "\" cy=\"" + svg_format(cy) + "\" r=\"" +
             svg_format(r) + "\" fill=\"" + fill + "\"";
    if (opacity != 1.0) body_ += " fill-opacity=\"" + svg_format(opacity) + "\"";
    body_ += "/>\n";
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>>& pts,
                         const std::string& stroke, double width, bool dashed) {
    if (pts.empty()) return;
    body_ += "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) body_ += ' ';
        body_ += svg_format(pts[i].first) + "," + svg_format(pts[i].second);
    }
    body_ += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + svg_format(width) + "\"";
    if (dashed) body_ += " stroke-dasharray=\"4 3\"";
    body_ += "/>\n";
}

void SvgCanvas::polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill,
                        double opacity) {
    if (pts.empty()) return;
    body_ += "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) body_ += ' ';
        body_ += svg_format(pts[i].first) + "," + svg_format(pts[i].second);
    }
    body_ += "\" fill=\"" + fill + "\"";
    if (opacity != 1.0) body_ += " fill-opacity=\"" + svg_format(opacity) + "\"";
    body_ += "/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& content, double size,
                     const std::string& anchor, const std::string& fill, double rotate) {
    body_ += "<text x=\"" + svg_format(x) + "\" y=\"" + svg_format(y) + "\" font-size=\"" +
             svg_format(size) + "\" font-family=\"sans-serif\" text-anchor=\"" + anchor +
             "\" fill=\"" + fill + "\"";
    if (rotate != 0.0) {
        body_ += " transform=\"rotate(" + svg_format(rotate) + " " + svg_format(x) + " " +
                 svg_format(y) + ")\"";
    }
    body_ += ">" + escape(content) + "</text>\n";
}

std::string SvgCanvas::str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + svg_format(width_) +
           "\" height=\"" + svg_format(height_) + "\" viewBox=\"0 0 " + svg_format(width_) + " " +
           svg_format(height_) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + svg_format(width_) + "\" height=\"" +
           svg_format(height_) + "\" fill=\"#ffffff\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

}  // namespace corpuscope
