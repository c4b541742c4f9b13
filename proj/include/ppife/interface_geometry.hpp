// Geometry of interface elements: classification of elements against the
// level set, edge-intersection points D and E, and the straight-line
// partition of a cut element into the two polygonal pieces used by the
// immersed basis construction.
//
// Mesh hypotheses enforced here: the interface crosses an element boundary
// at exactly two points lying on distinct edges, and never cuts a boundary
// element. Violations are collected into a report rather than thrown, so
// callers can decide whether to abort or refine.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ppife/core.hpp"
#include "ppife/level_set.hpp"
#include "ppife/mesh.hpp"

namespace ppife {

// Cut elements whose smaller piece is below this area fraction are demoted
// to non-interface elements on the majority side.
inline constexpr double kSliverAreaFraction = 1e-10;

// Samples per edge when counting interface crossings.
inline constexpr int kEdgeRootSamples = 64;

struct CutElementGeometry {
    int element = -1;
    Point2 D, E;                   // cut points, ordered by ascending local edge index
    int edge_of_D = -1, edge_of_E = -1;  // local edge indices
    Vec2 nbar;                     // unit normal of line DE, oriented minus -> plus
    std::vector<Point2> sub_minus, sub_plus;   // ccw polygons, T = sub_minus U sub_plus
    std::vector<int> idx_minus, idx_plus;      // local vertex indices split by sign
    double area_minus = 0.0, area_plus = 0.0;
    double element_area = 0.0;
    double h = 0.0;                // element size scale (max cell side)
};

struct HypothesisReport {
    struct Item {
        int element;
        std::string what;
    };
    std::vector<Item> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const {
        std::string s;
        for (const auto& v : violations)
            s += "element " + std::to_string(v.element) + ": " + v.what + "; ";
        return s;
    }
};

struct Classification {
    std::vector<bool> is_interface;        // per element
    std::vector<Side> element_side;        // majority/centroid side, meaningful when not interface
    std::vector<int> interface_elements;   // ascending
    std::vector<int> noninterface_elements;
    HypothesisReport report;
};

namespace detail {

inline int sign_of(double phi) { return phi < -kZeroTol ? -1 : +1; }

// Count sign changes of phi along the segment, sampling kEdgeRootSamples
// subintervals. Returns the bracket endpoints of each detected root.
inline std::vector<std::pair<double, double>> edge_root_brackets(
    const LevelSetInterface& ls, const Point2& a, const Point2& b) {
    std::vector<std::pair<double, double>> brackets;
    const int m = kEdgeRootSamples;
    int prev = sign_of(ls.phi(a.x, a.y));
    double tprev = 0.0;
    for (int i = 1; i <= m; ++i) {
        const double t = static_cast<double>(i) / m;
        const Point2 p = a + (b - a) * t;
        const int s = sign_of(ls.phi(p.x, p.y));
        if (s != prev) brackets.emplace_back(tprev, t);
        prev = s;
        tprev = t;
    }
    return brackets;
}

// Bracketed root refinement: bisection with secant acceleration. phi is only
// assumed continuous, so every step keeps the bracket valid.
inline double refine_root(const LevelSetInterface& ls, const Point2& a, const Point2& b,
                          double t_lo, double t_hi, double tol_t) {
    auto f = [&](double t) {
        const Point2 p = a + (b - a) * t;
        return ls.phi(p.x, p.y);
    };
    double f_lo = f(t_lo), f_hi = f(t_hi);
    if (f_lo == 0.0) return t_lo;
    if (f_hi == 0.0) return t_hi;
    for (int it = 0; it < 200 && (t_hi - t_lo) > tol_t; ++it) {
        double t_mid = 0.5 * (t_lo + t_hi);
        if (f_hi != f_lo) {
            const double t_sec = t_lo - f_lo * (t_hi - t_lo) / (f_hi - f_lo);
            // accept the secant step only if it lands inside the bracket
            if (t_sec > t_lo + 0.1 * tol_t && t_sec < t_hi - 0.1 * tol_t) t_mid = t_sec;
        }
        const double f_mid = f(t_mid);
        if (f_mid == 0.0) return t_mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            t_lo = t_mid;
            f_lo = f_mid;
        } else {
            t_hi = t_mid;
            f_hi = f_mid;
        }
    }
    // return the endpoint with the smaller residual
    return std::abs(f_lo) <= std::abs(f_hi) ? t_lo : t_hi;
}

inline double polygon_area(const std::vector<Point2>& poly) {
    double s = 0.0;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * s;
}

inline Point2 polygon_centroid(const std::vector<Point2>& poly) {
    const double a = polygon_area(poly);
    const int n = static_cast<int>(poly.size());
    if (std::abs(a) < 1e-300 || n < 3) {
        Point2 c;
        for (const Point2& p : poly) c += p;
        return c / std::max(1, n);
    }
    Point2 c;
    for (int i = 0; i < n; ++i) {
        const Point2 &p = poly[i], &q = poly[(i + 1) % n];
        const double w = cross(p, q);
        c += (p + q) * w;
    }
    return c / (6.0 * a);
}

}  // namespace detail

inline Classification classify_elements(const Mesh& mesh, const LevelSetInterface& ls) {
    Classification cls;
    const int ne = mesh.num_elements();
    cls.is_interface.assign(ne, false);
    cls.element_side.assign(ne, Side::plus);
    const int nv = mesh.nodes_per_element();

    for (int e = 0; e < ne; ++e) {
        bool has_minus = false, has_plus = false;
        for (int i = 0; i < nv; ++i) {
            const Side s = ls.side_of(mesh.node(mesh.element_vertex(e, i)));
            (s == Side::minus ? has_minus : has_plus) = true;
        }

        int total_roots = 0;
        for (int i = 0; i < nv; ++i) {
            auto [na, nb] = mesh.local_edge_nodes(e, i);
            const auto brackets = detail::edge_root_brackets(ls, mesh.node(na), mesh.node(nb));
            const int c = static_cast<int>(brackets.size());
            total_roots += c;
            if (c >= 2)
                cls.report.violations.push_back(
                    {e, "interface crosses one edge " + std::to_string(c) + " times"});
        }
        if (total_roots > 2)
            cls.report.violations.push_back(
                {e, "interface crosses element boundary at " + std::to_string(total_roots) +
                        " points"});

        const bool interface = (has_minus && has_plus) || total_roots >= 2;
        cls.is_interface[e] = interface;
        if (interface) {
            cls.interface_elements.push_back(e);
            if (mesh.is_boundary_element(e))
                cls.report.violations.push_back({e, "interface cuts a boundary element"});
        } else {
            cls.noninterface_elements.push_back(e);
            cls.element_side[e] = ls.side_of(mesh.element_centroid(e));
        }
    }
    return cls;
}

struct EdgeIntersections {
    Point2 D, E;
    int edge_of_D = -1, edge_of_E = -1;
};

// Locate the two points where the interface crosses the edges of an
// interface element. D comes before E in local edge order.
inline EdgeIntersections edge_intersections(const Mesh& mesh, int element,
                                            const LevelSetInterface& ls) {
    const int nv = mesh.nodes_per_element();
    std::vector<std::pair<int, Point2>> roots;  // (local edge, point)
    for (int i = 0; i < nv; ++i) {
        auto [na, nb] = mesh.local_edge_nodes(element, i);
        const Point2 a = mesh.node(na), b = mesh.node(nb);
        const auto brackets = detail::edge_root_brackets(ls, a, b);
        if (brackets.size() > 1)
            throw HypothesisError(element, "more than one interface crossing on an edge");
        if (brackets.empty()) continue;
        const double edge_len = (b - a).norm();
        const double tol_t = 1e-13 * mesh.h / edge_len;
        const double t = detail::refine_root(ls, a, b, brackets[0].first, brackets[0].second, tol_t);
        roots.emplace_back(i, a + (b - a) * t);
    }
    if (roots.empty())
        throw DegenerateCutError("element " + std::to_string(element) +
                                 ": no sign change on any edge (grazing interface)");
    if (roots.size() != 2)
        throw HypothesisError(element, "interface crosses " + std::to_string(roots.size()) +
                                           " edges, expected 2");
    EdgeIntersections out;
    out.edge_of_D = roots[0].first;
    out.D = roots[0].second;
    out.edge_of_E = roots[1].first;
    out.E = roots[1].second;
    return out;
}

// Split an interface element along the segment DE into its two polygonal
// pieces, label them by the sign of the level set at their centroids, and
// orient the line normal from the minus side into the plus side.
inline CutElementGeometry line_partition(const Mesh& mesh, int element,
                                         const EdgeIntersections& cut,
                                         const LevelSetInterface& ls) {
    const Point2 D = cut.D, E = cut.E;
    if ((E - D).norm() < 1e-12 * mesh.h)
        throw DegenerateCutError("element " + std::to_string(element) +
                                 ": cut points coincide (sliver cut)");

    CutElementGeometry g;
    g.element = element;
    g.D = D;
    g.E = E;
    g.edge_of_D = cut.edge_of_D;
    g.edge_of_E = cut.edge_of_E;
    g.element_area = mesh.element_area(element);
    g.h = mesh.h;

    const int nv = mesh.nodes_per_element();
    const auto verts = mesh.element_vertices(element);

    // Walk the boundary counterclockwise, inserting D and E on their edges.
    // Chain A runs D -> (vertices after edge_of_D .. edge_of_E) -> E, chain B
    // is the complement. Both close with the segment DE and stay ccw.
    std::vector<Point2> chain_a{D};
    for (int i = cut.edge_of_D + 1; i <= cut.edge_of_E; ++i) chain_a.push_back(verts[i % nv]);
    chain_a.push_back(E);
    std::vector<Point2> chain_b{E};
    for (int i = cut.edge_of_E + 1; i <= cut.edge_of_D + nv; ++i) chain_b.push_back(verts[i % nv]);
    chain_b.push_back(D);

    const Side side_a = ls.side_of(detail::polygon_centroid(chain_a));
    const Side side_b = ls.side_of(detail::polygon_centroid(chain_b));
    if (side_a == side_b) {
        // degenerate: one piece has (near) zero area; give the larger piece
        // its centroid side and the sliver the opposite one
        const bool a_larger =
            std::abs(detail::polygon_area(chain_a)) >= std::abs(detail::polygon_area(chain_b));
        const Side major = a_larger ? side_a : side_b;
        if ((a_larger ? side_a : side_b) == Side::minus) {
            g.sub_minus = a_larger ? chain_a : chain_b;
            g.sub_plus = a_larger ? chain_b : chain_a;
        } else {
            g.sub_plus = a_larger ? chain_a : chain_b;
            g.sub_minus = a_larger ? chain_b : chain_a;
        }
        (void)major;
    } else if (side_a == Side::minus) {
        g.sub_minus = chain_a;
        g.sub_plus = chain_b;
    } else {
        g.sub_minus = chain_b;
        g.sub_plus = chain_a;
    }
    g.area_minus = detail::polygon_area(g.sub_minus);
    g.area_plus = detail::polygon_area(g.sub_plus);

    for (int i = 0; i < nv; ++i)
        (ls.side_of(verts[i]) == Side::minus ? g.idx_minus : g.idx_plus).push_back(i);

    // unit normal of DE, flipped to point from the minus piece into the plus
    const Vec2 dir = (E - D) / (E - D).norm();
    Vec2 n{dir.y, -dir.x};
    const Point2 mid = (D + E) * 0.5;
    const std::vector<Point2>& probe = g.area_plus >= g.area_minus ? g.sub_plus : g.sub_minus;
    const double sgn = dot(n, detail::polygon_centroid(probe) - mid);
    const bool probe_is_plus = g.area_plus >= g.area_minus;
    if ((probe_is_plus && sgn < 0.0) || (!probe_is_plus && sgn > 0.0)) n = n * -1.0;
    g.nbar = n;
    return g;
}

// Classification plus cut geometry for the whole mesh. Sliver cuts (area
// fraction below kSliverAreaFraction) are demoted to non-interface elements
// on the majority side. Throws HypothesisError if the mesh hypotheses fail.
struct InterfaceTopology {
    Classification cls;
    std::vector<std::optional<CutElementGeometry>> cut;  // per element
    std::vector<int> interface_edges;                    // interior edges touching an interface element
    bool edge_is_interface(int edge_id) const { return interface_edge_mask[edge_id]; }
    std::vector<bool> interface_edge_mask;
};

inline InterfaceTopology analyze_interface(const Mesh& mesh, const LevelSetInterface& ls) {
    InterfaceTopology topo;
    topo.cls = classify_elements(mesh, ls);
    if (!topo.cls.report.ok())
        throw HypothesisError(topo.cls.report.violations.front().element,
                              topo.cls.report.describe());

    topo.cut.assign(mesh.num_elements(), std::nullopt);
    std::vector<int> kept;
    for (int e : topo.cls.interface_elements) {
        bool demote = false;
        try {
            const auto cutpts = edge_intersections(mesh, e, ls);
            CutElementGeometry g = line_partition(mesh, e, cutpts, ls);
            const double frac =
                std::min(g.area_minus, g.area_plus) / std::max(g.element_area, 1e-300);
            if (frac < kSliverAreaFraction)
                demote = true;
            else
                topo.cut[e] = std::move(g);
        } catch (const DegenerateCutError&) {
            demote = true;
        }
        if (demote) {
            topo.cls.is_interface[e] = false;
            topo.cls.element_side[e] = ls.side_of(mesh.element_centroid(e));
            topo.cls.noninterface_elements.push_back(e);
        } else {
            kept.push_back(e);
        }
    }
    topo.cls.interface_elements = std::move(kept);
    std::sort(topo.cls.noninterface_elements.begin(), topo.cls.noninterface_elements.end());

    topo.interface_edge_mask.assign(mesh.num_edges(), false);
    for (int id = 0; id < mesh.num_edges(); ++id) {
        const Edge& ed = mesh.edges[id];
        if (ed.boundary) continue;
        if (topo.cls.is_interface[ed.elem[0]] || topo.cls.is_interface[ed.elem[1]]) {
            topo.interface_edge_mask[id] = true;
            topo.interface_edges.push_back(id);
        }
    }
    return topo;
}

}  // namespace ppife
