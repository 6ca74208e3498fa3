#ifndef RMAP_CONSTELLATION_HPP
#define RMAP_CONSTELLATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "rmap/combmap.hpp"
#include "rmap/jordan.hpp"
#include "rmap/labelling.hpp"

namespace rmap {

// Permutation of {0..n-1} as an image table.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
// apply a first, then b.
Perm perm_compose(const Perm& a, const Perm& b);
std::vector<std::vector<int>> perm_cycles(const Perm& p); // including fixed points
std::vector<int> cycle_type(const Perm& p);               // sorted descending
bool perm_is_identity(const Perm& p);

// Branched-covering data: q permutations of n sheets, sigma[j] = monodromy
// around the critical value labelled j.  Valid when applying sigma[0],
// sigma[1], ..., sigma[q-1] in that order is the identity and the generated
// group acts transitively.
struct Constellation {
    int n = 0;
    int q = 0;
    std::vector<Perm> sigmas;
};

struct ConstellationVerdict {
    bool valid = false;
    bool product_identity = false;
    bool transitive = false;
    std::string witness; // first failure found
};

// Gluing description of the covering surface: 2n closed polygon tiles, one
// edge-pairing per (blue tile, polygon edge), and the cone angle carried by
// each glued vertex class.
struct SurgeryPlan {
    int n = 0;
    int q = 0;
    std::vector<SpherePoint> polygon; // vertex j of the q-gon, label j
    // gray_of[j][alpha]: the gray tile glued to blue tile alpha along the
    // polygon edge j -> j+1.
    std::vector<std::vector<int>> gray_of;
    struct ConePoint {
        int label = 0;               // polygon vertex the class lies over
        std::vector<int> blue_tiles; // counterclockwise cycle of blue tiles
        int angle_multiple = 1;      // cone angle = 2*pi*angle_multiple
    };
    std::vector<ConePoint> cone_points;
};

// Monodromy of a consistently labelled homogeneous map: sigma[j] is the
// product over vertices labelled j of the counterclockwise cycle of blue
// tiles around the vertex.  Blue tiles are numbered in first-visited order
// of a half-edge scan, so the result is reproducible.
Constellation constellation_from_rmap(const CombinatorialMap& m);

ConstellationVerdict validate_constellation(const Constellation& c);

// 2g - 2 = -2n + sum over all cycles of (length - 1).
int genus_from_constellation(const Constellation& c);

// Canonical labelled map glued from a constellation: one vertex per cycle of
// each sigma[j], one edge per (tile, polygon edge).  Inverse of
// constellation_from_rmap up to isomorphism.
CombinatorialMap constellation_to_rmap(const Constellation& c);

// Gluing data over the given polygon (must have q vertices).  Validates the
// constellation first.
SurgeryPlan assemble_surface(const Constellation& c, const JordanPath& polygon);

// Equality up to one simultaneous sheet relabelling.
bool conjugate_constellations(const Constellation& a, const Constellation& b);

struct Realization {
    CombinatorialMap rmap;
    Constellation constellation;
    int genus = 0;
    SurgeryPlan plan;
};

// Combinatorial content of the converse algorithm: subdivide the labelled
// t-graph, extract and validate the constellation, compute the genus (and
// check it against the Euler genus of the input), and emit the gluing plan
// over the default polygon {1, ..., q-1, infinity}.
Realization realize(const CombinatorialMap& tgraph, const QLabelling& L);

} // namespace rmap

#endif
