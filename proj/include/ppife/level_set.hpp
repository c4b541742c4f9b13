// Interface description as a signed level-set function: phi < 0 inside the
// minus subdomain, phi > 0 in the plus subdomain.
#pragma once

#include <functional>
#include <string>
#include <utility>

#include "ppife/core.hpp"

namespace ppife {

// Vertices with |phi| <= this are treated as lying on the interface and are
// assigned to the plus side.
inline constexpr double kZeroTol = 1e-14;

struct LevelSetInterface {
    std::function<double(double, double)> phi;
    std::function<Vec2(double, double)> grad_phi;
    std::string description;

    double operator()(const Point2& p) const { return phi(p.x, p.y); }

    Side side_of(const Point2& p) const {
        return phi(p.x, p.y) < -kZeroTol ? Side::minus : Side::plus;
    }
};

// Circle of radius r0 (centered at `center`): phi = (x-cx)^2 + (y-cy)^2 - r0^2.
inline LevelSetInterface circle_level_set(double r0, Point2 center = {0.0, 0.0}) {
    LevelSetInterface ls;
    ls.phi = [=](double x, double y) {
        const double dx = x - center.x, dy = y - center.y;
        return dx * dx + dy * dy - r0 * r0;
    };
    ls.grad_phi = [=](double x, double y) {
        return Vec2{2.0 * (x - center.x), 2.0 * (y - center.y)};
    };
    ls.description = "circle r0=" + std::to_string(r0);
    return ls;
}

// Half-plane phi = n . (X - p0), handy for constructing straight-cut tests.
inline LevelSetInterface line_level_set(Vec2 normal, Point2 p0) {
    LevelSetInterface ls;
    ls.phi = [=](double x, double y) { return dot(normal, Vec2{x, y} - p0); };
    ls.grad_phi = [=](double, double) { return normal; };
    ls.description = "line";
    return ls;
}

}  // namespace ppife
