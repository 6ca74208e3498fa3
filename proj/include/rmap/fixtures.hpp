#ifndef RMAP_FIXTURES_HPP
#define RMAP_FIXTURES_HPP

#include "rmap/combmap.hpp"
#include "rmap/constellation.hpp"
#include "rmap/rational.hpp"

namespace rmap {
namespace fixtures {

// Map assembled from counterclockwise polygon faces and an edge pairing.
// Half-edge (face f, side k) has id offset(f)+k and face f on its left;
// twin must pair sides of opposite-color faces coherently.
CombinatorialMap from_face_gluing(const std::vector<int>& face_sizes,
                                  const std::vector<int>& twin);

// z^n pullback of the real line: two vertices of valence 2n, 2n bigon tiles.
CombinatorialMap bigon_rmap(int n);

// Theta graph: two trivalent vertices joined by three parallel edges.
CombinatorialMap theta_map();

// Chessboard on the torus with cols x rows unit squares (both even >= 2);
// carries the parity 4-labelling.  cols = rows = 2 is the elliptic example
// of degree 2.
CombinatorialMap chessboard_torus(int cols, int rows);

// Four (2g+2)-gons meeting in 2g+2 vertices of valence 4: the degree-2 map
// of a hyperelliptic surface of genus g, with its (2g+2)-labelling.
CombinatorialMap hyperelliptic_rmap(int genus);

// L-shaped chessboard (4x4 grid minus its top-right 2x2 block) with opposite
// boundary sides identified: genus 2, degree 6, q = 4; nine valence-4
// vertices and one of valence 12.
CombinatorialMap l_chessboard();

// Degree-4 map of gonality 6 whose residue 5 appears only on valence-2
// vertices (a fake critical value); pruning recovers a consistent
// 5-labelling.
CombinatorialMap fake_value_rmap();

// Its underlying gonality-5 map, for comparison.
CombinatorialMap fake_value_base();

// Degree-3 branched cover with three critical values, cycle types
// (2,1), (2,1), (3): the combinatorial shadow of w = z^2(3-2z).
Constellation belyi_cubic_constellation();

// z(z^2-1)(z^2-4)/(z-3): degree 5, six real critical points.
RationalFunction deg5_function();

// w = z^2(3-2z), critical values {0, 1, infinity}.
RationalFunction belyi_cubic_function();

// The t-graph of deg5_function() under the real line (frozen from the
// traced pullback; see tests for the cross-checks that pin it down).
CombinatorialMap deg5_tgraph();

// A 2-vertex torus t-graph whose tiles force an empty admissible q-range.
CombinatorialMap empty_range_tgraph();

} // namespace fixtures
} // namespace rmap

#endif
