#pragma once

#include <map>
#include <string>

#include "acp/mobius.hpp"

namespace acp {

struct SvgOptions {
    bool show_dual = false;
    bool show_labels = false;
    // optional explicit viewbox (min_x, min_y, width, height); derived from
    // the circles when absent
    bool explicit_viewbox = false;
    double viewbox[4] = {0, 0, 1, 1};
};

struct SvgCircle {
    double x = 0, y = 0, r = 0;
    bool dashed = false;
    std::string label;
};

std::string render_svg(const std::vector<SvgCircle>& circles, const SvgOptions& opt,
                       bool unit_frame = false);

std::vector<SvgCircle> svg_circles(const EuclideanPacking& p);
std::vector<SvgCircle> svg_circles(const TorusPacking& p);
// hyperbolic circles drawn as their euclidean representatives in the disk model
std::vector<SvgCircle> svg_circles(const HyperbolicPacking& p);
std::vector<SvgCircle> svg_dual_circles(const EuclideanPacking& p, const std::map<int, Circle>& dual);

}  // namespace acp
