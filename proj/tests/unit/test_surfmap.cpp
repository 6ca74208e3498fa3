#include <algorithm>
#include <set>

#include "doctest.h"
#include "rmap/combmap.hpp"
#include "rmap/fixtures.hpp"
#include "rmap/labelling.hpp"

using namespace rmap;
using namespace rmap::fixtures;

TEST_CASE("theta map has three bigon faces") {
    CombinatorialMap m = theta_map();
    auto fc = faces(m);
    REQUIRE(fc.size() == 3);
    for (const auto& c : fc) CHECK(c.size() == 2);
    // Hand enumeration of the cycles for this rotation system.
    std::set<std::set<int>> got;
    for (const auto& c : fc) got.insert(std::set<int>(c.begin(), c.end()));
    std::set<std::set<int>> want{{0, 3}, {2, 5}, {4, 1}};
    CHECK(got == want);
    CHECK(euler_genus(m) == 0);
}

TEST_CASE("bigon map of z^n") {
    for (int n = 2; n <= 5; ++n) {
        CombinatorialMap m = bigon_rmap(n);
        CHECK(m.vertex_count() == 2);
        CHECK(m.edge_count() == 2 * n);
        auto fc = faces(m);
        CHECK(int(fc.size()) == 2 * n);
        for (const auto& c : fc) CHECK(c.size() == 2);
        CHECK(euler_genus(m) == 0);
        Classification cl = classify(m);
        CHECK(cl.kind == MapKind::TGraph);
        CHECK(cl.gonality == 2);
        CHECK(cl.degree == n);
    }
}

TEST_CASE("torus chessboard counts") {
    CombinatorialMap m = chessboard_torus(2, 2);
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 8);
    CHECK(faces(m).size() == 4);
    CHECK(euler_genus(m) == 1);
    Classification cl = classify(m);
    CHECK(cl.kind == MapKind::TGraph);
    CHECK(cl.gonality == 4);
    CHECK(cl.degree == 2);
}

TEST_CASE("L-chessboard is the genus-2 degree-6 board") {
    CombinatorialMap m = l_chessboard();
    CHECK(m.vertex_count() == 10);
    CHECK(m.edge_count() == 24);
    CHECK(faces(m).size() == 12);
    CHECK(euler_genus(m) == 2);
    int val12 = 0, val4 = 0;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (m.valence(v) == 12) ++val12;
        if (m.valence(v) == 4) ++val4;
    }
    CHECK(val12 == 1);
    CHECK(val4 == 9);
    Classification cl = classify(m);
    CHECK(cl.kind == MapKind::TGraph);
    CHECK(cl.gonality == 4);
    CHECK(cl.degree == 6);
}

TEST_CASE("hyperelliptic fixture") {
    CombinatorialMap m = hyperelliptic_rmap(2);
    CHECK(m.vertex_count() == 6);
    CHECK(m.edge_count() == 12);
    CHECK(faces(m).size() == 4);
    CHECK(euler_genus(m) == 2);
    Classification cl = classify(m);
    CHECK(cl.kind == MapKind::TGraph); // all valences are 4
    CHECK(cl.gonality == 6);
}

TEST_CASE("classify flags odd valence") {
    Classification cl = classify(theta_map());
    CHECK(cl.kind == MapKind::Raw);
    CHECK(!cl.violations.empty());
}

TEST_CASE("forget_valence2 merges chains and preserves faces") {
    CombinatorialMap rm = fake_value_rmap();
    Classification cl = classify(rm);
    CHECK(cl.kind == MapKind::RMap);
    CHECK(cl.gonality == 6);

    CombinatorialMap tg = forget_valence2(rm);
    for (int v = 0; v < tg.vertex_count(); ++v) CHECK(tg.valence(v) >= 4);
    CHECK(faces(tg).size() == faces(rm).size());
    FaceStructure fa = face_structure(rm), fb = face_structure(tg);
    CHECK(fa.blue_count() == fb.blue_count());

    // No valence-2 vertices: identity up to isomorphism.
    CombinatorialMap bg = bigon_rmap(3);
    CHECK(map_isomorphic(forget_valence2(bg), bg).isomorphic);
}

TEST_CASE("subdivide_edges inserts the hidden labels") {
    // Single edge with labels (5, 3) mod 6 inside a consistently labelled
    // map: use the hyperelliptic board, whose edges all step by one, and
    // check the arithmetic through a relabelled copy instead.
    CombinatorialMap m = hyperelliptic_rmap(2); // q = 6 labelling attached
    QLabelling L = labels_of(m);
    CombinatorialMap sub = subdivide_edges(m, 6);
    CHECK(map_isomorphic(sub, m, true).isomorphic); // all gaps are 1: unchanged

    // Stretch the labels so edges jump: multiply labels by 5 mod 6 turns a
    // (j, j+1) edge into (5j, 5j+5): gap 5... instead reuse the fake-value
    // construction: labels 0..4 reinterpreted mod 6.
    CombinatorialMap base = fake_value_base();
    base.labels_q = 6;
    CombinatorialMap sub6 = subdivide_edges(base, 6);
    Classification cl = classify(sub6);
    CHECK(cl.gonality == 6);
    // Each inserted vertex is labelled 5 and has valence 2.
    int inserted = 0;
    for (int v = 0; v < sub6.vertex_count(); ++v)
        if (sub6.labels[v] == 5) {
            CHECK(sub6.valence(v) == 2);
            ++inserted;
        }
    CHECK(inserted == 4); // one per blue tile
}

TEST_CASE("subdivision arithmetic on a two-vertex edge") {
    // A q=6 digon: two vertices labelled 5 and 3, one pair of edges; the
    // blue side runs 5 -> 3 so three vertices labelled 0, 1, 2 appear.
    CombinatorialMap m;
    m.half_edges.assign(4, {});
    m.half_edges[0] = {1, 0};
    m.half_edges[1] = {0, 1};
    m.half_edges[2] = {3, 0};
    m.half_edges[3] = {2, 1};
    m.rotations = {{0, 2}, {1, 3}};
    m.labels = {5, 3};
    m.labels_q = 6;
    m.blue_seed = 0;
    CombinatorialMap sub = subdivide_edges(m, 6);
    // Edge 0->1 is blue-side 5 -> 3: inserts 0, 1, 2; the other edge is the
    // gray-side twin, blue side 3 -> 5: inserts 4.
    std::multiset<int> labs(sub.labels.begin(), sub.labels.end());
    CHECK(labs == std::multiset<int>{0, 1, 2, 3, 4, 5});
    // (j, j+1) edges stay put: total new vertices = 4.
    CHECK(sub.vertex_count() == 6);
    // Both tiles became hexagons (the map has only one tile per color, so it
    // is not a tessellation; check the face sizes directly).
    for (const auto& f : faces(sub)) CHECK(f.size() == 6);
}

TEST_CASE("map isomorphism basics") {
    CombinatorialMap a = chessboard_torus(2, 2);
    CHECK(map_isomorphic(a, a).isomorphic);
    CHECK(map_isomorphic(a, a, true).isomorphic);

    // Shifted labels still match with respect_labels.
    CombinatorialMap b = a;
    for (int& l : b.labels) l = (l + 1) % 4;
    IsoWitness w = map_isomorphic(a, b, true);
    CHECK(w.isomorphic);
    CHECK(w.label_shift == 1);

    CombinatorialMap c = bigon_rmap(4);
    CHECK(!map_isomorphic(a, c).isomorphic);
}

TEST_CASE("isomorphism is an equivalence on fixtures") {
    std::vector<CombinatorialMap> ms{bigon_rmap(3), chessboard_torus(2, 2), hyperelliptic_rmap(1)};
    for (const auto& m : ms) CHECK(map_isomorphic(m, m).isomorphic);
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            CHECK(map_isomorphic(ms[i], ms[j]).isomorphic == map_isomorphic(ms[j], ms[i]).isomorphic);
        }
}

TEST_CASE("twin involution and face partition invariants") {
    for (const CombinatorialMap& m :
         {bigon_rmap(4), chessboard_torus(2, 4), hyperelliptic_rmap(3), l_chessboard()}) {
        CHECK(validate_map(m).empty());
        for (int h = 0; h < m.half_edge_count(); ++h) {
            CHECK(m.twin(m.twin(h)) == h);
            CHECK(m.twin(h) != h);
        }
        auto fc = faces(m);
        std::vector<int> count(m.half_edge_count(), 0);
        for (const auto& c : fc)
            for (int h : c) count[h]++;
        CHECK(std::all_of(count.begin(), count.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("euler identity for homogeneous maps") {
    for (const CombinatorialMap& m : {bigon_rmap(4), hyperelliptic_rmap(2), l_chessboard()}) {
        Classification cl = classify(m);
        REQUIRE(cl.gonality > 0);
        const int n = cl.degree, q = cl.gonality, g = euler_genus(m);
        CHECK(m.edge_count() == n * q);
        CHECK(int(faces(m).size()) == 2 * n);
        CHECK(m.vertex_count() == n * q - 2 * n + 2 - 2 * g);
    }
}

TEST_CASE("malformed maps are rejected") {
    CombinatorialMap bad;
    bad.half_edges.assign(2, {});
    bad.half_edges[0] = {0, 0}; // twin fixes itself
    bad.half_edges[1] = {1, 0};
    bad.rotations = {{0, 1}};
    CHECK(!validate_map(bad).empty());
    CHECK_THROWS_AS(faces(bad), MalformedMap);
}
