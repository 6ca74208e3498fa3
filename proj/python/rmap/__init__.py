"""Tessellations of rational maps on the sphere.

Forward direction: trace the preimage of a Jordan path through the critical
values of a rational map and assemble the resulting homogeneous tessellation.
Inverse direction: realize a consistently labelled combinatorial map as a
branched-covering constellation with polygon-gluing data.
"""

from rmap._core import (  # noqa: F401
    AmbiguousSnap,
    CombinatorialMap,
    Constellation,
    EmbeddedRMap,
    InconsistentLabelling,
    InvalidConstellation,
    JordanPath,
    MalformedMap,
    NonConvergence,
    NotFortunate,
    NotJordan,
    PathJump,
    QLabelling,
    RationalFunction,
    Realization,
    admissible_q_range,
    assemble_surface_json,
    check_consistent,
    cocritical_points,
    conjugate_constellations,
    constellation_from_rmap,
    constellation_to_rmap,
    count_labellings_mod_automorphism,
    critical_data_json,
    default_gamma,
    enumerate_labellings,
    fiber,
    fixtures,
    forget_valence2,
    genus_from_constellation,
    labels_of,
    map_isomorphic,
    monodromy_by_continuation,
    polygonal_gamma,
    prune_fake_values,
    pullback_rmap,
    real_line_gamma,
    realize,
    render_dot,
    render_svg,
    riemann_hurwitz_genus,
    roots,
    subdivide_edges,
    validate_constellation,
)

import json as _json


def critical_data(f):
    """Critical points/values report as a dict."""
    return _json.loads(critical_data_json(f))


def tessellate(f, gamma="real"):
    """Traced pullback map of f under the chosen Jordan path."""
    if gamma == "real":
        gamma = real_line_gamma(f)
    elif gamma == "default":
        gamma = default_gamma(f)
    return pullback_rmap(f, gamma)


__all__ = [name for name in dir() if not name.startswith("_")]
