// Uniform Cartesian meshes of an axis-aligned rectangle: triangular (each
// cell split by its bottom-left-to-top-right diagonal) or rectangular.
// Node and element numbering is row-major from the lower-left corner so
// that degrees of freedom are reproducible across runs.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppife/core.hpp"

namespace ppife {

enum class ElementType { triangular, rectangular };

struct Edge {
    int a = -1, b = -1;          // node indices, a < b
    int elem[2] = {-1, -1};      // adjacent elements, elem[0] < elem[1]; elem[1] == -1 on the boundary
    bool boundary = false;

    int other_element(int e) const { return elem[0] == e ? elem[1] : elem[0]; }
};

struct Mesh {
    Rect domain;
    int n = 0;                   // subdivisions per axis
    ElementType element_type = ElementType::triangular;
    double hx = 0.0, hy = 0.0;
    double h = 0.0;              // mesh size, max cell side length

    std::vector<Point2> nodes;
    std::vector<std::array<int, 4>> elements;            // vertex indices, ccw; [3] == -1 for triangles
    std::vector<Edge> edges;
    std::vector<std::array<int, 4>> element_edges;       // global edge id per local edge; [3] == -1 for triangles

    int nodes_per_element() const { return element_type == ElementType::triangular ? 3 : 4; }
    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_elements() const { return static_cast<int>(elements.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    Point2 node(int i) const { return nodes[i]; }

    int element_vertex(int e, int i) const { return elements[e][i]; }

    std::array<Point2, 4> element_vertices(int e) const {
        std::array<Point2, 4> v;
        const int nv = nodes_per_element();
        for (int i = 0; i < nv; ++i) v[i] = nodes[elements[e][i]];
        return v;
    }

    Point2 element_centroid(int e) const {
        Point2 c;
        const int nv = nodes_per_element();
        for (int i = 0; i < nv; ++i) c += nodes[elements[e][i]];
        return c / static_cast<double>(nv);
    }

    double element_area(int e) const {
        // shoelace over the (ccw) vertex polygon
        const int nv = nodes_per_element();
        double s = 0.0;
        for (int i = 0; i < nv; ++i) {
            const Point2& p = nodes[elements[e][i]];
            const Point2& q = nodes[elements[e][(i + 1) % nv]];
            s += cross(p, q);
        }
        return 0.5 * s;
    }

    // Local edge i of element e joins local vertices i and (i+1) mod nv.
    std::pair<int, int> local_edge_nodes(int e, int i) const {
        const int nv = nodes_per_element();
        return {elements[e][i], elements[e][(i + 1) % nv]};
    }

    // True if any edge of the element lies on the domain boundary.
    bool is_boundary_element(int e) const {
        const int nv = nodes_per_element();
        for (int i = 0; i < nv; ++i)
            if (edges[element_edges[e][i]].boundary) return true;
        return false;
    }
};

inline Mesh build_cartesian_mesh(const Rect& domain, int n, ElementType type) {
    if (n < 2) throw std::invalid_argument("build_cartesian_mesh: N must be >= 2");
    if (!(domain.width() > 0.0) || !(domain.height() > 0.0))
        throw std::invalid_argument("build_cartesian_mesh: degenerate domain");

    Mesh m;
    m.domain = domain;
    m.n = n;
    m.element_type = type;
    m.hx = domain.width() / n;
    m.hy = domain.height() / n;
    m.h = std::max(m.hx, m.hy);

    const int np = n + 1;
    m.nodes.reserve(static_cast<std::size_t>(np) * np);
    for (int iy = 0; iy < np; ++iy)
        for (int ix = 0; ix < np; ++ix)
            m.nodes.push_back({domain.x0 + ix * m.hx, domain.y0 + iy * m.hy});

    auto node_id = [np](int ix, int iy) { return iy * np + ix; };

    for (int cy = 0; cy < n; ++cy) {
        for (int cx = 0; cx < n; ++cx) {
            const int ll = node_id(cx, cy);
            const int lr = node_id(cx + 1, cy);
            const int ur = node_id(cx + 1, cy + 1);
            const int ul = node_id(cx, cy + 1);
            if (type == ElementType::triangular) {
                // diagonal ll -> ur, fixed orientation in every cell
                m.elements.push_back({ll, lr, ur, -1});
                m.elements.push_back({ll, ur, ul, -1});
            } else {
                m.elements.push_back({ll, lr, ur, ul});
            }
        }
    }

    // Edge table: first-seen order while scanning elements ascending, which
    // makes edge ids independent of anything but (domain, N, type).
    std::map<std::pair<int, int>, int> edge_ids;
    const int nv = m.nodes_per_element();
    m.element_edges.assign(m.elements.size(), {-1, -1, -1, -1});
    for (int e = 0; e < m.num_elements(); ++e) {
        for (int i = 0; i < nv; ++i) {
            auto [a, b] = m.local_edge_nodes(e, i);
            if (a > b) std::swap(a, b);
            auto it = edge_ids.find({a, b});
            int id;
            if (it == edge_ids.end()) {
                id = static_cast<int>(m.edges.size());
                edge_ids.emplace(std::make_pair(a, b), id);
                Edge ed;
                ed.a = a;
                ed.b = b;
                ed.elem[0] = e;
                m.edges.push_back(ed);
            } else {
                id = it->second;
                m.edges[id].elem[1] = e;
                if (m.edges[id].elem[0] > m.edges[id].elem[1])
                    std::swap(m.edges[id].elem[0], m.edges[id].elem[1]);
            }
            m.element_edges[e][i] = id;
        }
    }
    for (Edge& ed : m.edges) ed.boundary = (ed.elem[1] < 0);

    return m;
}

struct EdgeTables {
    std::vector<int> interior;
    std::vector<int> boundary;
};

inline EdgeTables edge_tables(const Mesh& mesh) {
    EdgeTables t;
    for (int i = 0; i < mesh.num_edges(); ++i)
        (mesh.edges[i].boundary ? t.boundary : t.interior).push_back(i);
    return t;
}

// Debug listing of nodes and connectivity, one record per line.
inline void dump_mesh(const Mesh& mesh, std::ostream& os) {
    os << "nodes " << mesh.num_nodes() << "\n";
    for (int i = 0; i < mesh.num_nodes(); ++i)
        os << i << " " << mesh.nodes[i].x << " " << mesh.nodes[i].y << "\n";
    os << "elements " << mesh.num_elements() << "\n";
    for (int e = 0; e < mesh.num_elements(); ++e) {
        os << e;
        for (int i = 0; i < mesh.nodes_per_element(); ++i) os << " " << mesh.elements[e][i];
        os << "\n";
    }
}

}  // namespace ppife
