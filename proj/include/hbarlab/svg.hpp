#pragma once

#include <string>
#include <vector>

#include "hbarlab/cvec.hpp"

namespace hbarlab {
namespace svg {

/// Minimal deterministic SVG 1.1 writer: fixed decimal formatting, no
/// timestamps, elements emitted in insertion order.
class Document {
 public:
    Document(double width, double height) : width_(width), height_(height) {}

    /// Map world coordinates [x0,x1]x[y0,y1] onto the canvas (y flipped).
    void set_viewport(double x0, double y0, double x1, double y1);

    void line(double x0, double y0, double x1, double y1, const std::string& style);
    void dashed_line(double x0, double y0, double x1, double y1, const std::string& color);
    void polyline(const std::vector<Complex>& pts, const std::string& style, bool close = false);
    void circle(double cx, double cy, double world_radius, const std::string& style);
    void dot(double cx, double cy, const std::string& color);
    void text(double x, double y, const std::string& content, const std::string& color = "black");
    void cross(double x, double y, const std::string& color);

    std::string str() const;
    void write(const std::string& path) const;

 private:
    std::pair<double, double> map(double x, double y) const;
    double scale() const;

    double width_, height_;
    double x0_ = 0, y0_ = 0, x1_ = 1, y1_ = 1;
    std::vector<std::string> body_;
};

std::string format_number(double v);

}  // namespace svg
}  // namespace hbarlab
