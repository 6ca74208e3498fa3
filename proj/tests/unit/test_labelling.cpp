#include <algorithm>

#include "doctest.h"
#include "rmap/fixtures.hpp"
#include "rmap/labelling.hpp"

using namespace rmap;
using namespace rmap::fixtures;

TEST_CASE("parity labelling of the chessboard is consistent") {
    CombinatorialMap m = chessboard_torus(2, 2);
    QLabelling L = labels_of(m);
    ConsistencyVerdict v = check_consistent(m, L, true);
    CHECK(v.consistent);

    // All-equal labels violate both conditions.
    QLabelling bad{4, std::vector<int>(m.vertex_count(), 1)};
    CHECK(!check_consistent(m, bad, false).consistent);
}

TEST_CASE("fake residues violate condition (ii)") {
    CombinatorialMap m = fake_value_rmap();
    QLabelling L = labels_of(m);
    ConsistencyVerdict v = check_consistent(m, L, true);
    CHECK(!v.consistent);
    bool mentions5 = false;
    for (const auto& s : v.violations) mentions5 |= (s.find("residue 5") != std::string::npos);
    CHECK(mentions5);
}

TEST_CASE("admissible q ranges") {
    CHECK(admissible_q_range(bigon_rmap(3)).lo == 2);
    CHECK(admissible_q_range(bigon_rmap(3)).hi == 2);

    QRange tor = admissible_q_range(chessboard_torus(2, 2));
    CHECK(tor.lo == 4);
    CHECK(tor.hi == 4);

    QRange hy = admissible_q_range(hyperelliptic_rmap(2));
    CHECK(hy.lo == 6);
    CHECK(hy.hi == 6);

    QRange er = admissible_q_range(empty_range_tgraph());
    CHECK(er.empty());
}

TEST_CASE("bigon labellings") {
    CombinatorialMap m = bigon_rmap(3);
    auto canonical = enumerate_labellings(m, 2, true);
    REQUIRE(canonical.size() == 1);
    CHECK(canonical[0].assignment == std::vector<int>{0, 1});
    auto all = enumerate_labellings(m, 2, false);
    CHECK(all.size() == 2); // q times the canonical count
}

TEST_CASE("chessboard labellings include the parity one") {
    CombinatorialMap m = chessboard_torus(2, 2);
    QLabelling parity = labels_of(m);
    auto canonical = enumerate_labellings(m, 4, true);
    CHECK(!canonical.empty());
    // Shift parity so vertex 0 carries label 0 and look it up.
    const int s = parity.assignment[0];
    std::vector<int> shifted;
    for (int l : parity.assignment) shifted.push_back(((l - s) % 4 + 4) % 4);
    bool found = false;
    for (const auto& L : canonical) found |= (L.assignment == shifted);
    CHECK(found);
    auto all = enumerate_labellings(m, 4, false);
    CHECK(all.size() == 4 * canonical.size());
}

TEST_CASE("every enumerated labelling passes the checker") {
    for (const CombinatorialMap& m : {bigon_rmap(4), chessboard_torus(2, 2), hyperelliptic_rmap(1)}) {
        QRange r = admissible_q_range(m);
        for (int q = r.lo; q <= r.hi; ++q)
            for (const auto& L : enumerate_labellings(m, q, true))
                CHECK(check_consistent(m, L, false).consistent);
    }
}

TEST_CASE("shift invariance of the verdict") {
    CombinatorialMap m = chessboard_torus(2, 2);
    QLabelling L = labels_of(m);
    for (int c = 0; c < 4; ++c) {
        QLabelling shifted = L;
        for (int& l : shifted.assignment) l = (l + c) % 4;
        CHECK(check_consistent(m, shifted, true).consistent);
    }
}

TEST_CASE("subdivision of a consistent labelling stays consistent") {
    CombinatorialMap base = fake_value_base(); // q=5 labelled R-map
    QLabelling L5 = labels_of(base);
    CHECK(check_consistent(base, L5, true).consistent);

    CombinatorialMap tg = forget_valence2(base);
    QLabelling Lt = labels_of(tg);
    CHECK(check_consistent(tg, Lt, false).consistent);
    CombinatorialMap sub = subdivide_edges(tg, 5);
    CHECK(check_consistent(sub, labels_of(sub), true).consistent);
    CHECK(map_isomorphic(sub, base, true).isomorphic);
    CHECK(map_isomorphic(forget_valence2(sub), tg, true).isomorphic);
}

TEST_CASE("pruning removes fake residues idempotently") {
    CombinatorialMap m = fake_value_rmap();
    PruneResult pr = prune_fake_values(m);
    REQUIRE(pr.removed_residues == std::vector<int>{5});
    Classification cl = classify(pr.map);
    CHECK(cl.kind == MapKind::RMap);
    CHECK(cl.gonality == 5);
    CHECK(check_consistent(pr.map, pr.labelling, true).consistent);
    CHECK(map_isomorphic(pr.map, fake_value_base(), true).isomorphic);

    PruneResult again = prune_fake_values(pr.map);
    CHECK(again.removed_residues.empty());
    CHECK(map_isomorphic(again.map, pr.map, true).isomorphic);
}

TEST_CASE("double fake subdivision drops gonality by two") {
    CombinatorialMap base = fake_value_base();
    base.labels_q = 7; // labels 0..4 inside Z_7: edges 4 -> 0 now jump by 3
    CombinatorialMap sub = subdivide_edges(base, 7);
    Classification cl = classify(sub);
    CHECK(cl.gonality == 7);
    PruneResult pr = prune_fake_values(sub);
    CHECK(pr.removed_residues == std::vector<int>{5, 6});
    CHECK(classify(pr.map).gonality == 5);
    CHECK(map_isomorphic(pr.map, fake_value_base(), true).isomorphic);
}
