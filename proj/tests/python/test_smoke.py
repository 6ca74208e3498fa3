"""Smoke tests for the python bindings."""

import json

import pytest

import rmap
from rmap import fixtures


def cubic():
    # z^2 (3 - 2z)
    return rmap.RationalFunction(num=[0, 0, 3, -2], den=[1])


def test_critical_data_of_cubic():
    cd = rmap.critical_data(cubic())
    assert cd["degree"] == 3
    assert cd["q"] == 3
    assert cd["rh_ok"] is True
    mus = sorted(cp["mu"] for cp in cd["critical_points"])
    assert mus == [2, 2, 3]


def test_eval_and_fiber():
    f = cubic()
    assert abs(f(1.0) - 1.0) < 1e-12
    assert f("inf") == "inf"
    fib = rmap.fiber(f, 0)
    assert sorted(m for _, m in fib) == [1, 2]


def test_roots_quantize_multiplicity():
    rs = rmap.roots([-8, 12, -6, 1])  # (z-2)^3
    assert len(rs) == 1
    root, mult = rs[0]
    assert mult == 3
    assert abs(root - 2.0) < 1e-8


def test_tessellate_cubic():
    em = rmap.tessellate(cubic())
    assert em.map.vertex_count == 5
    assert em.map.edge_count == 9
    assert em.map.face_count == 6
    assert em.map.euler_genus() == 0
    svg = rmap.render_svg(em)
    assert svg.count("<path") == 5


def test_realize_torus_chessboard():
    board = fixtures.chessboard_torus(2, 2)
    r = rmap.realize(board, rmap.labels_of(board))
    assert r.genus == 1
    assert r.constellation.cycle_types() == [[2], [2], [2], [2]]
    plan = json.loads(r.surgery_json())
    assert plan["n"] == 2 and plan["q"] == 4


def test_labelling_census_on_deg5():
    tg = fixtures.deg5_tgraph()
    assert rmap.admissible_q_range(tg) == (4, 6)
    l5 = rmap.enumerate_labellings(tg, 5)
    assert rmap.count_labellings_mod_automorphism(tg, l5) >= 2
    assert rmap.enumerate_labellings(tg, 7) == []


def test_monodromy_routes_agree():
    f = cubic()
    gamma = rmap.real_line_gamma(f)
    via_map = rmap.constellation_from_rmap(rmap.pullback_rmap(f, gamma).map)
    via_loops = rmap.monodromy_by_continuation(f, gamma)
    ok, witness = rmap.validate_constellation(via_loops)
    assert ok, witness
    assert rmap.conjugate_constellations(via_map, via_loops)


def test_prune_fake_values():
    m = fixtures.fake_value_rmap()
    pruned, labelling, removed = rmap.prune_fake_values(m)
    assert removed == [5]
    assert pruned.classify()["gonality"] == 5


def test_json_round_trip():
    tg = fixtures.deg5_tgraph()
    back = rmap.CombinatorialMap.from_json(tg.to_json())
    assert rmap.map_isomorphic(tg, back, True)


def test_errors_are_typed():
    with pytest.raises(rmap.NotFortunate):
        rmap.real_line_gamma(rmap.RationalFunction(num=[1j, 0, 1], den=[1]))
