#pragma once

#include "qhopf/rational.hpp"

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qhopf {

// Vertices and darts are dense integer ids. In a doubled quiver the darts
// 0..E-1 are the original edges in declaration order and E..2E-1 their
// reverses, so `dart < edge_count()` tests orientation and reversal is
// an index flip.
using VertexId = int;
using DartId = int;

struct Edge {
    std::string name;
    VertexId tail;
    VertexId head;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    VertexId vertex_id(std::string_view name) const;  // -1 when absent
    int edge_id(std::string_view name) const;         // -1 when absent
};

// Parses the plain-text description:
//   vertices: v w
//   edges: e: v -> w, f: w -> v
// Multiple `edges:` lines accumulate. Errors carry 1-based line numbers.
Quiver parse_quiver(const std::string& text);
Quiver parse_quiver_file(const std::string& path);

struct DoubleQuiver {
    Quiver base;
    int edge_count() const { return static_cast<int>(base.edges.size()); }
    int dart_count() const { return 2 * edge_count(); }
    int vertex_count() const { return static_cast<int>(base.vertices.size()); }

    bool is_original(DartId d) const { return d < edge_count(); }
    DartId reverse(DartId d) const { return is_original(d) ? d + edge_count() : d - edge_count(); }

    VertexId tail(DartId d) const {
        const Edge& e = base.edges[d % edge_count()];
        return is_original(d) ? e.tail : e.head;
    }
    VertexId head(DartId d) const {
        const Edge& e = base.edges[d % edge_count()];
        return is_original(d) ? e.head : e.tail;
    }

    std::string dart_name(DartId d) const {
        const std::string& n = base.edges[d % edge_count()].name;
        return is_original(d) ? n : n + "*";
    }

    // Accepts "e" or "e*"; -1 when unknown.
    DartId dart_id(std::string_view name) const;

    const std::string& vertex_name(VertexId v) const { return base.vertices[v]; }
};

DoubleQuiver build_double(Quiver q);

// Same vertex set, every edge flipped. Useful mainly for sanity checks:
// doubling is insensitive to it up to relabeling darts.
Quiver reverse(const Quiver& q);

}  // namespace qhopf
