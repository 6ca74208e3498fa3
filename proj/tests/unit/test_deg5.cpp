#include <algorithm>
#include <set>

#include "doctest.h"
#include "rmap/fixtures.hpp"
#include "rmap/labelling.hpp"
#include "rmap/trace.hpp"

using namespace rmap;
using namespace rmap::fixtures;

TEST_CASE("frozen degree-5 t-graph invariants") {
    CombinatorialMap tg = deg5_tgraph();
    CHECK(tg.vertex_count() == 6);
    CHECK(tg.edge_count() == 14);
    CHECK(faces(tg).size() == 10);
    CHECK(euler_genus(tg) == 0);
    std::multiset<int> vals;
    for (int v = 0; v < 6; ++v) vals.insert(tg.valence(v));
    CHECK(vals == std::multiset<int>{4, 4, 4, 4, 4, 8});
    std::multiset<int> sizes;
    for (const auto& c : faces(tg)) sizes.insert(int(c.size()));
    CHECK(sizes == std::multiset<int>{2, 2, 2, 2, 3, 3, 3, 3, 4, 4});
    Classification cl = classify(tg);
    CHECK(cl.kind == MapKind::TGraph);
    CHECK(cl.degree == 5);
    QRange r = admissible_q_range(tg);
    CHECK(r.lo == 4);
    CHECK(r.hi == 6);
    // Its own labelling is a consistent 6-labelling.
    CHECK(check_consistent(tg, labels_of(tg), false).consistent);
}

TEST_CASE("traced degree-5 map reduces to the frozen t-graph") {
    RationalFunction f = deg5_function();
    JordanPath g = real_line_gamma(critical_data(f));
    EmbeddedRMap em = pullback_rmap(f, g);
    CHECK(em.map.vertex_count() == 22);
    CHECK(em.map.edge_count() == 30);
    CHECK(faces(em.map).size() == 10);
    for (const auto& c : faces(em.map)) CHECK(c.size() == 6);
    CombinatorialMap tg = forget_valence2(em.map);
    CHECK(map_isomorphic(tg, deg5_tgraph(), true).isomorphic);
}

TEST_CASE("degree-5 labelling census") {
    CombinatorialMap tg = deg5_tgraph();
    auto l4 = enumerate_labellings(tg, 4, true);
    auto l5 = enumerate_labellings(tg, 5, true);
    auto l6 = enumerate_labellings(tg, 6, true);
    CHECK(l4.size() >= 1);
    CHECK(l6.size() >= 1);
    CHECK(count_labellings_mod_automorphism(tg, l5) >= 2);
    // Outside the admissible range nothing exists.
    CHECK(enumerate_labellings(tg, 3, true).empty());
    CHECK(enumerate_labellings(tg, 7, true).empty());
    // All enumerated labellings realize to genus-0 constellations.
    for (const auto& batch : {l4, l5, l6})
        for (const auto& L : batch) {
            Realization r = realize(tg, L);
            CHECK(r.genus == 0);
            CHECK(validate_constellation(r.constellation).valid);
            CHECK(r.constellation.n == 5);
        }
}

TEST_CASE("degree-5 realize reproduces the traced cycle types") {
    CombinatorialMap tg = deg5_tgraph();
    Realization r = realize(tg, labels_of(tg));
    CHECK(r.genus == 0);
    REQUIRE(r.constellation.q == 6);
    std::multiset<std::vector<int>> types;
    for (const Perm& s : r.constellation.sigmas) types.insert(cycle_type(s));
    std::multiset<std::vector<int>> want{{2, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 1},
                                         {2, 1, 1, 1}, {2, 1, 1, 1}, {4, 1}};
    CHECK(types == want);
    // The subdivided map is the traced one.
    RationalFunction f = deg5_function();
    EmbeddedRMap em = pullback_rmap(f, real_line_gamma(critical_data(f)));
    CHECK(map_isomorphic(r.rmap, em.map, true).isomorphic);
}

TEST_CASE("two monodromy routes agree for the degree-5 example") {
    RationalFunction f = deg5_function();
    JordanPath g = real_line_gamma(critical_data(f));
    Constellation via_map = constellation_from_rmap(pullback_rmap(f, g).map);
    Constellation via_loops = monodromy_by_continuation(f, g, default_basepoint(g));
    CHECK(validate_constellation(via_loops).valid);
    CHECK(cycle_type(via_loops.sigmas[5]) == std::vector<int>{4, 1});
    CHECK(conjugate_constellations(via_loops, via_map));
}
