#include "plateau/svg.hpp"

#include <cstdio>
#include <sstream>

namespace plateau {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const char* kDepthColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                              "#ff7f0e", "#8c564b", "#17becf"};

}  // namespace

std::string boxes_svg(const DoubleCover& cover, const BoxTree& tree) {
    const double W = 1000.0, H = 1000.0;
    double a0 = to_double(cover.a_m), a1 = to_double(cover.a_M);
    double b0 = to_double(cover.b_M), b1 = to_double(cover.b_m);
    auto sx = [&](double a) { return (a - a0) / (a1 - a0) * W; };
    auto sy = [&](double b) { return (b1 - b) / (b1 - b0) * H; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\" "
          "stroke=\"black\"/>\n";
    for (const ParamBox& box : tree.boxes) {
        if (box.depth == 0) continue;
        double xl = sx(to_double(box.rect.a_lo));
        double xr = sx(to_double(box.rect.a_hi));
        double yt = sy(to_double(box.rect.b_hi));
        double yb = sy(to_double(box.rect.b_lo));
        const char* color = kDepthColors[(box.depth - 1) % 7];
        os << "<rect x=\"" << fmt(xl) << "\" y=\"" << fmt(yt) << "\" width=\"" << fmt(xr - xl)
           << "\" height=\"" << fmt(yb - yt) << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"" << fmt(3.0 / box.depth) << "\"><title>" << box.label
           << " depth=" << box.depth << "</title></rect>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace plateau
