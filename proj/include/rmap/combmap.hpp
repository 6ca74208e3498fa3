#ifndef RMAP_COMBMAP_HPP
#define RMAP_COMBMAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "rmap/errors.hpp"

namespace rmap {

// Half-edge rotation system on a closed oriented surface.
//
// Conventions used throughout:
//  - rotations[v] lists the outgoing half-edges at v in counterclockwise
//    order (the surface orientation);
//  - the face on the LEFT of a half-edge h is traversed by
//    next(h) = rotation-predecessor of twin(h) at twin(h)'s origin;
//  - with these two, counterclockwise face cycles see their interior on the
//    left, and the face 2-coloring puts blue tiles left of oriented edges.
struct CombinatorialMap {
    struct HalfEdge {
        int twin = -1;
        int origin = -1;
    };

    std::vector<HalfEdge> half_edges;
    std::vector<std::vector<int>> rotations; // per vertex, CCW outgoing half-edges
    std::vector<int> labels;                 // per vertex in Z_q, or empty
    int labels_q = 0;                        // modulus when labels present
    int blue_seed = -1;                      // half-edge pinning the blue color, -1 = default

    int vertex_count() const { return static_cast<int>(rotations.size()); }
    int half_edge_count() const { return static_cast<int>(half_edges.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int valence(int v) const { return static_cast<int>(rotations[v].size()); }
    bool has_labels() const { return !labels.empty(); }

    int twin(int h) const { return half_edges[h].twin; }
    int origin(int h) const { return half_edges[h].origin; }
    int head(int h) const { return half_edges[twin(h)].origin; }

    // Rotation successor/predecessor of h around its origin.
    int rot_next(int h) const;
    int rot_prev(int h) const;
    // Next half-edge along the face on the left of h.
    int face_next(int h) const { return rot_prev(twin(h)); }
};

enum class FaceColor { Blue, Gray };

// Faces and the two-coloring, derived from a map.
struct FaceStructure {
    std::vector<std::vector<int>> cycles; // face id -> CCW half-edge cycle
    std::vector<int> face_of;             // half-edge -> face id
    std::vector<FaceColor> colors;        // face id -> color
    bool two_colorable = true;

    int face_count() const { return static_cast<int>(cycles.size()); }
    int blue_count() const;
    std::vector<int> face_sizes() const;
};

enum class MapKind { TGraph, RMap, Raw };

struct Classification {
    MapKind kind = MapKind::Raw;
    int gonality = 0; // common face size for homogeneous maps, else 0
    int degree = 0;   // tiles per color when balanced, else 0
    std::vector<std::string> violations;
};

// Structural validation: twin involution without fixed points, rotations
// partition the half-edges, consistent origins.  Returns human-readable
// violations; empty means valid.
std::vector<std::string> validate_map(const CombinatorialMap& m);
void require_valid(const CombinatorialMap& m);

bool is_connected(const CombinatorialMap& m);

// Face cycles of a structurally valid map.  Throws MalformedMap otherwise.
std::vector<std::vector<int>> faces(const CombinatorialMap& m);

// Faces plus the blue/gray coloring.  The face containing blue_seed (or
// half-edge 0 when unset) is blue; two_colorable reports whether the face
// adjacency is bipartite.
FaceStructure face_structure(const CombinatorialMap& m);

// Genus from V - E + F = 2 - 2g.  Throws on disconnected input or odd Euler
// characteristic.
int euler_genus(const CombinatorialMap& m);

// Strictest kind whose conditions hold, with violation report.
Classification classify(const CombinatorialMap& m);

bool is_tgraph(const CombinatorialMap& m);
bool is_rmap(const CombinatorialMap& m);

// Remove every valence-2 vertex, merging its two edges; labels of removed
// vertices are dropped.  Face count and colors are preserved.
CombinatorialMap forget_valence2(const CombinatorialMap& m);

// Insert valence-2 vertices on each edge so that endpoint labels step by one
// around every blue tile: an edge with blue-oriented labels (h, h+v+1) gains
// v vertices labelled h+1,...,h+v.  Requires a consistently labelled t-graph
// (see labelling.hpp); the result is homogeneous of gonality q.
CombinatorialMap subdivide_edges(const CombinatorialMap& m, int q);

struct IsoWitness {
    bool isomorphic = false;
    std::vector<int> half_edge_map; // a-half-edge -> b-half-edge
    int label_shift = 0;            // labels matched up to this additive shift
};

// Orientation-preserving rotation-system isomorphism, matching face colors,
// and labels up to a global shift when respect_labels is set.
IsoWitness map_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b,
                          bool respect_labels = false);

// All vertex permutations induced by color-preserving automorphisms.
std::vector<std::vector<int>> automorphism_vertex_maps(const CombinatorialMap& m);

} // namespace rmap

#endif
