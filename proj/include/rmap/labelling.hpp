#ifndef RMAP_LABELLING_HPP
#define RMAP_LABELLING_HPP

#include <string>
#include <vector>

#include "rmap/combmap.hpp"

namespace rmap {

// Vertex labelling with values in Z_q.
struct QLabelling {
    int q = 0;
    std::vector<int> assignment; // per vertex

    bool operator==(const QLabelling& o) const = default;
};

struct ConsistencyVerdict {
    bool consistent = false;
    std::vector<std::string> violations;
};

// Conditions for a consistent q-labelling:
//  (i)  around each blue tile the labels are distinct and wind exactly once
//       through Z_q in counterclockwise order (for homogeneous maps this
//       forces every residue exactly once per tile);
//  (ii) every residue appears at some vertex of valence >= 4.
// rmap_mode additionally requires each blue tile to carry all q labels.
ConsistencyVerdict check_consistent(const CombinatorialMap& m, const QLabelling& L,
                                    bool rmap_mode);
// Picks the mode from the map: homogeneous maps with valence-2 vertices are
// checked as R-maps, others in the hidden-label t-graph form.
ConsistencyVerdict check_consistent(const CombinatorialMap& m, const QLabelling& L);

struct QRange {
    int lo = 0;
    int hi = -1;
    bool empty() const { return lo > hi; }
};

// [max(2+2g, max tile size), min(2n+2g-2, #vertices of valence >= 4)].
// Throws MalformedMap when m is not a t-graph.
QRange admissible_q_range(const CombinatorialMap& m);

// All consistent q-labellings by backtracking over blue tiles; with
// canonical set, one representative per global-shift orbit (the one
// assigning 0 to vertex 0).
std::vector<QLabelling> enumerate_labellings(const CombinatorialMap& m, int q,
                                             bool canonical = true);

// Count of shift-orbit representatives that remain inequivalent when map
// automorphisms may also be applied.
int count_labellings_mod_automorphism(const CombinatorialMap& m,
                                      const std::vector<QLabelling>& canonical);

struct PruneResult {
    CombinatorialMap map;
    QLabelling labelling;
    std::vector<int> removed_residues;
};

// Remove residues attained only at valence-2 vertices (fake critical
// values): the carrying vertices are forgotten and the remaining labels are
// renumbered order-preservingly into Z_{q'}.  Idempotent.
PruneResult prune_fake_values(const CombinatorialMap& m);

// Convenience: attach a labelling to a map (returns a copy).
CombinatorialMap with_labels(const CombinatorialMap& m, const QLabelling& L);
QLabelling labels_of(const CombinatorialMap& m);

} // namespace rmap

#endif
