#include "maxchord/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace maxchord {

namespace {

constexpr double kSize = 500.0;
constexpr double kCenter = 250.0;
constexpr double kRadius = 200.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// point 0 at the top, clockwise on screen
double angle_of(int i, int m) { return -std::numbers::pi / 2 + 2 * std::numbers::pi * i / m; }

std::pair<double, double> at(double angle, double radius) {
    return {kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
}

void line(std::ostringstream& os, const char* cls, std::pair<double, double> a,
          std::pair<double, double> b, const char* extra = "") {
    os << "  <line class=\"" << cls << "\" x1=\"" << fmt(a.first) << "\" y1=\"" << fmt(a.second)
       << "\" x2=\"" << fmt(b.first) << "\" y2=\"" << fmt(b.second) << "\" stroke=\"black\"" << extra
       << "/>\n";
}

} // namespace

std::string render_svg(const ChordDiagram& d, AxisOption axis) {
    const int m = d.points();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    os << "  <circle class=\"rim\" cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"" << kRadius
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (axis != AxisOption::none && m > 0) {
        // type I through point 0 and the opposite point; type II through the
        // midpoint of the arc before point 0 and the opposite arc midpoint
        const double a = axis == AxisOption::type1 ? angle_of(0, m)
                                                   : angle_of(0, m) - std::numbers::pi / m;
        line(os, "axis", at(a, kRadius + 30), at(a + std::numbers::pi, kRadius + 30),
             " stroke-dasharray=\"6 4\"");
    }
    for (const auto& [a, b] : d.chord_pairs())
        line(os, "chord", at(angle_of(a, m), kRadius), at(angle_of(b, m), kRadius));
    for (int i = 0; i < m; ++i) {
        const auto [x, y] = at(angle_of(i, m), kRadius);
        os << "  <circle class=\"point\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
           << "\" r=\"3\" fill=\"black\"/>\n";
        const auto [lx, ly] = at(angle_of(i, m), kRadius + 16);
        os << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\"12\">" << i + 1
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace maxchord
