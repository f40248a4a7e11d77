#include "hbarlab/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hbarlab/errors.hpp"

namespace hbarlab {
namespace svg {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    // avoid the negative-zero artifact so outputs stay byte-stable
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

void Document::set_viewport(double x0, double y0, double x1, double y1) {
    x0_ = x0;
    y0_ = y0;
    x1_ = x1;
    y1_ = y1;
}

double Document::scale() const {
    return std::min(width_ / (x1_ - x0_), height_ / (y1_ - y0_));
}

std::pair<double, double> Document::map(double x, double y) const {
    const double s = scale();
    return {(x - x0_) * s, height_ - (y - y0_) * s};
}

void Document::line(double x0, double y0, double x1, double y1, const std::string& style) {
    const auto a = map(x0, y0);
    const auto b = map(x1, y1);
    std::ostringstream os;
    os << "<line x1=\"" << format_number(a.first) << "\" y1=\"" << format_number(a.second)
       << "\" x2=\"" << format_number(b.first) << "\" y2=\"" << format_number(b.second) << "\" "
       << style << "/>";
    body_.push_back(os.str());
}

void Document::dashed_line(double x0, double y0, double x1, double y1,
                           const std::string& color) {
    line(x0, y0, x1, y1,
         "stroke=\"" + color + "\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
}

void Document::polyline(const std::vector<Complex>& pts, const std::string& style, bool close) {
    std::ostringstream os;
    os << (close ? "<polygon points=\"" : "<polyline fill=\"none\" points=\"");
    for (const auto& p : pts) {
        const auto m = map(p.real(), p.imag());
        os << format_number(m.first) << "," << format_number(m.second) << " ";
    }
    os << "\" " << style << "/>";
    body_.push_back(os.str());
}

void Document::circle(double cx, double cy, double world_radius, const std::string& style) {
    const auto c = map(cx, cy);
    std::ostringstream os;
    os << "<circle cx=\"" << format_number(c.first) << "\" cy=\"" << format_number(c.second)
       << "\" r=\"" << format_number(world_radius * scale()) << "\" " << style << "/>";
    body_.push_back(os.str());
}

void Document::dot(double cx, double cy, const std::string& color) {
    const auto c = map(cx, cy);
    std::ostringstream os;
    os << "<circle cx=\"" << format_number(c.first) << "\" cy=\"" << format_number(c.second)
       << "\" r=\"3\" fill=\"" << color << "\"/>";
    body_.push_back(os.str());
}

void Document::text(double x, double y, const std::string& content, const std::string& color) {
    const auto c = map(x, y);
    std::ostringstream os;
    os << "<text x=\"" << format_number(c.first) << "\" y=\"" << format_number(c.second)
       << "\" font-size=\"12\" fill=\"" << color << "\">" << content << "</text>";
    body_.push_back(os.str());
}

void Document::cross(double x, double y, const std::string& color) {
    const auto c = map(x, y);
    std::ostringstream os;
    os << "<path d=\"M " << format_number(c.first - 4) << " " << format_number(c.second - 4)
       << " L " << format_number(c.first + 4) << " " << format_number(c.second + 4) << " M "
       << format_number(c.first - 4) << " " << format_number(c.second + 4) << " L "
       << format_number(c.first + 4) << " " << format_number(c.second - 4) << "\" stroke=\""
       << color << "\" stroke-width=\"1.5\"/>";
    body_.push_back(os.str());
}

std::string Document::str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << format_number(width_) << "\" height=\"" << format_number(height_) << "\">\n";
    for (const auto& e : body_) os << e << "\n";
    os << "</svg>\n";
    return os.str();
}

void Document::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("svg: cannot open " + path);
    f << str();
}

}  // namespace svg
}  // namespace hbarlab
