#include "acp/svg.hpp"

#include <algorithm>
#include <sstream>

namespace acp {

namespace {

void fmt(std::ostringstream& os, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgCircle>& circles, const SvgOptions& opt,
                       bool unit_frame) {
    double min_x = -1, min_y = -1, max_x = 1, max_y = 1;
    if (!unit_frame && !circles.empty()) {
        min_x = min_y = 1e300;
        max_x = max_y = -1e300;
        for (auto& c : circles) {
            min_x = std::min(min_x, c.x - c.r);
            max_x = std::max(max_x, c.x + c.r);
            min_y = std::min(min_y, c.y - c.r);
            max_y = std::max(max_y, c.y + c.r);
        }
    }
    double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
    if (pad <= 0) pad = 0.1;
    min_x -= pad; min_y -= pad; max_x += pad; max_y += pad;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"";
    if (opt.explicit_viewbox) {
        fmt(os, opt.viewbox[0]); os << " "; fmt(os, opt.viewbox[1]); os << " ";
        fmt(os, opt.viewbox[2]); os << " "; fmt(os, opt.viewbox[3]);
    } else {
        fmt(os, min_x); os << " "; fmt(os, min_y); os << " ";
        fmt(os, max_x - min_x); os << " "; fmt(os, max_y - min_y);
    }
    // flip the y axis so the packing appears with the usual orientation
    os << "\">\n<g transform=\"scale(1,-1)\" stroke-width=\"" << 0.004 * (max_x - min_x) << "\">\n";
    if (unit_frame)
        os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\"/>\n";
    for (auto& c : circles) {
        os << "<circle cx=\"";
        fmt(os, c.x);
        os << "\" cy=\"";
        fmt(os, c.y);
        os << "\" r=\"";
        fmt(os, c.r);
        os << "\" fill=\"none\" stroke=\"" << (c.dashed ? "#cc3333" : "#000000") << "\"";
        if (c.dashed) os << " stroke-dasharray=\"" << 0.02 * (max_x - min_x) << "\"";
        os << "/>\n";
        if (opt.show_labels && !c.label.empty()) {
            os << "<text x=\"";
            fmt(os, c.x);
            os << "\" y=\"";
            fmt(os, -c.y);
            os << "\" transform=\"scale(1,-1)\" font-size=\"" << 0.05 * (max_x - min_x)
               << "\" text-anchor=\"middle\">" << c.label << "</text>\n";
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::vector<SvgCircle> svg_circles(const EuclideanPacking& p) {
    std::vector<SvgCircle> out;
    for (int i = 0; i < p.triangulation.vertex_count; ++i)
        out.push_back({p.centers[i].re.to_double(), p.centers[i].im.to_double(),
                       p.radii[i].to_double(), false, std::to_string(i)});
    return out;
}

std::vector<SvgCircle> svg_circles(const TorusPacking& p) {
    std::vector<SvgCircle> out;
    for (int i = 0; i < p.triangulation.vertex_count; ++i)
        out.push_back({p.centers[i].re.to_double(), p.centers[i].im.to_double(),
                       p.radii[i].to_double(), false, std::to_string(i)});
    return out;
}

std::vector<SvgCircle> svg_circles(const HyperbolicPacking& p) {
    std::vector<SvgCircle> out;
    Precision prec(p.precision_digits);
    BigReal one(1, prec), two(2, prec);
    for (int i = 0; i < p.triangulation.vertex_count; ++i) {
        // hyperbolic circle -> euclidean circle in the disk model
        BigReal t = tanh(p.radii[i] / two);
        BigReal n = norm(p.centers[i]);
        BigReal den = one - t * t * n;
        BigReal fac = (one - t * t) / den;
        BigReal er = t * (one - n) / den;
        out.push_back({(fac * p.centers[i].re).to_double(), (fac * p.centers[i].im).to_double(),
                       er.to_double(), false, std::to_string(i)});
    }
    return out;
}

std::vector<SvgCircle> svg_dual_circles(const EuclideanPacking& p, const std::map<int, Circle>& dual) {
    std::vector<SvgCircle> out;
    for (auto& [fi, c] : dual)
        out.push_back({c.center.re.to_double(), c.center.im.to_double(), c.radius.to_double(), true,
                       "f" + std::to_string(fi)});
    return out;
}

}  // namespace acp
