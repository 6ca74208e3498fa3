#include "rmap/trace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace rmap {

namespace {

// Sum |c_i| r^i: magnitude scale of a polynomial at radius r.
double magnitude_at(const Polynomial& p, double r) {
    double s = 0.0, pw = 1.0;
    for (const Cx& c : p.coeffs()) {
        s += std::abs(c) * pw;
        pw *= r;
    }
    return std::max(s, 1e-300);
}

Cx lerp(const TargetLeg& leg, double t) { return leg.from + (leg.to - leg.from) * t; }

double max_finite_mag(const PathSegment& s) {
    double m = 0.0;
    if (!s.a.infinite) m = std::max(m, std::abs(s.a.value));
    if (!s.b.infinite) m = std::max(m, std::abs(s.b.value));
    return m;
}

} // namespace

std::vector<TargetLeg> segment_legs(const PathSegment& s, double far_scale) {
    std::vector<TargetLeg> legs;
    const double S = std::max(far_scale, 4.0 * (1.0 + max_finite_mag(s)));
    if (!s.a.infinite && !s.b.infinite && !s.through_inf) {
        legs.push_back({s.a.value, s.b.value, false});
        return legs;
    }
    if (s.through_inf) {
        const Cx pa = s.a.value + s.dir_out * S;
        const Cx pb = s.b.value + s.dir_in * S;
        legs.push_back({s.a.value, pa, false});
        legs.push_back({Cx(1.0) / pa, Cx(0.0), true});
        legs.push_back({Cx(0.0), Cx(1.0) / pb, true});
        legs.push_back({pb, s.b.value, false});
        return legs;
    }
    if (s.b.infinite) {
        const Cx pa = s.a.value + s.dir_out * S;
        legs.push_back({s.a.value, pa, false});
        legs.push_back({Cx(1.0) / pa, Cx(0.0), true});
        return legs;
    }
    const Cx pb = s.b.value + s.dir_in * S;
    legs.push_back({Cx(0.0), Cx(1.0) / pb, true});
    legs.push_back({pb, s.b.value, false});
    return legs;
}

std::vector<TrackedPoint> fiber_points(const RationalFunction& f, Cx value, bool inverted) {
    Polynomial p = inverted ? f.num() * value - f.den() : f.num() - f.den() * value;
    if (p.is_zero()) throw DegenerateFunction("fiber of a degenerate value");
    std::vector<TrackedPoint> pts;
    if (p.degree() > 0) {
        for (const auto& r : roots(p)) {
            if (r.multiplicity != 1)
                throw NonConvergence("fiber start is not regular (multiple point)");
            pts.push_back({r.root, false});
        }
    }
    const int drop = f.degree() - p.degree();
    if (drop > 1) throw NonConvergence("fiber start is not regular at infinity");
    if (drop == 1) pts.push_back({Cx(0.0), true});
    std::sort(pts.begin(), pts.end(), [](const TrackedPoint& a, const TrackedPoint& b) {
        if (a.inverted != b.inverted) return a.inverted < b.inverted;
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return pts;
}

FiberTracker::FiberTracker(const RationalFunction& f, const TraceOptions& opt, double chart_radius)
    : f_(f),
      opt_(opt),
      chart_radius_(chart_radius > 0 ? chart_radius : 2.0),
      dnum_(f.num().derivative()),
      dden_(f.den().derivative()),
      dnum_rev_(f.num_rev().derivative()),
      dden_rev_(f.den_rev().derivative()) {}

void FiberTracker::normalize_chart(TrackedPoint& p) const {
    const double R = chart_radius_;
    if (!p.inverted && std::abs(p.z) > R) {
        p.z = Cx(1.0) / p.z;
        p.inverted = true;
    } else if (p.inverted && std::abs(p.z) > 2.0 / R) {
        p.z = Cx(1.0) / p.z;
        p.inverted = false;
    }
}

bool FiberTracker::newton(Cx tv, bool ti, TrackedPoint& p) const {
    const Polynomial& N = p.inverted ? f_.num_rev() : f_.num();
    const Polynomial& D = p.inverted ? f_.den_rev() : f_.den();
    const Polynomial& dN = p.inverted ? dnum_rev_ : dnum_;
    const Polynomial& dD = p.inverted ? dden_rev_ : dden_;

    for (int it = 0; it < opt_.newton_budget; ++it) {
        const Cx nv = N(p.z), dv = D(p.z);
        const Cx dnv = dN(p.z), ddv = dD(p.z);
        const Cx F = ti ? (tv * nv - dv) : (nv - tv * dv);
        const double r = std::abs(p.z);
        const double scale = ti ? (std::abs(tv) * magnitude_at(N, r) + magnitude_at(D, r))
                                : (magnitude_at(N, r) + std::abs(tv) * magnitude_at(D, r));
        if (std::abs(F) <= 1e-11 * scale) return true;
        const Cx dF = ti ? (tv * dnv - ddv) : (dnv - tv * ddv);
        if (std::abs(dF) < 1e-280) return false;
        const Cx step = F / dF;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(p.z))) return false;
        p.z -= step;
    }
    // Accept slow convergence when the residual is already small.
    const Cx nv = N(p.z), dv = D(p.z);
    const Cx F = ti ? (tv * nv - dv) : (nv - tv * dv);
    const double r = std::abs(p.z);
    const double scale = ti ? (std::abs(tv) * magnitude_at(N, r) + magnitude_at(D, r))
                            : (magnitude_at(N, r) + std::abs(tv) * magnitude_at(D, r));
    return std::abs(F) <= 1e-9 * scale;
}

void FiberTracker::track_leg(const TargetLeg& leg, double t_from, double t_to,
                             std::vector<TrackedPoint>& pts,
                             std::vector<std::vector<ArcSample>>* record) const {
    const int n = static_cast<int>(pts.size());
    if (record) {
        for (int i = 0; i < n; ++i)
            if ((*record)[i].empty()) (*record)[i].push_back({pts[i].z, pts[i].inverted});
    }
    if (std::abs(leg.to - leg.from) == 0.0 || t_from >= t_to) return;

    const double dt_max = record ? std::min(opt_.max_step, opt_.record_step) : opt_.max_step;
    double dt = dt_max;
    double t = t_from;

    while (t < t_to - 1e-15) {
        const double step = std::min(dt, t_to - t);
        const Cx target = lerp(leg, t + step);
        const Cx dtv = (leg.to - leg.from) * step;

        // Allowed movement per point: a fraction of its distance to the
        // rest of the fiber, so sheets cannot swap silently.
        std::vector<double> room(n, 0.5);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != i)
                    room[i] = std::min(room[i],
                                       0.25 * chordal(pts[i].to_sphere(), pts[j].to_sphere()));

        std::vector<TrackedPoint> next = pts;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            TrackedPoint cand = pts[i];
            // Tangent predictor: dz = -F_t dtv / F_z in the current charts.
            {
                const Polynomial& N = cand.inverted ? f_.num_rev() : f_.num();
                const Polynomial& D = cand.inverted ? f_.den_rev() : f_.den();
                const Cx nv = N(cand.z), dv = D(cand.z);
                const Cx dnv = (cand.inverted ? dnum_rev_ : dnum_)(cand.z);
                const Cx ddv = (cand.inverted ? dden_rev_ : dden_)(cand.z);
                const Cx Ft = leg.inverted ? nv : -dv;
                const Cx Fz = leg.inverted ? (lerp(leg, t) * dnv - ddv) : (dnv - lerp(leg, t) * ddv);
                if (std::abs(Fz) > 1e-200) {
                    const Cx dz = -Ft * dtv / Fz;
                    if (std::abs(dz) < 0.5 * (1.0 + std::abs(cand.z))) cand.z += dz;
                }
            }
            if (!newton(target, leg.inverted, cand)) {
                ok = false;
                break;
            }
            if (chordal(cand.to_sphere(), pts[i].to_sphere()) > room[i]) {
                ok = false;
                break;
            }
            next[i] = cand;
        }
        if (ok) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (chordal(next[i].to_sphere(), next[j].to_sphere()) < opt_.collision_tol)
                        throw PathJump("fiber points collided along the path");
        }
        if (!ok) {
            dt *= 0.5;
            if (dt < opt_.step_floor)
                throw NonConvergence("continuation step underflow");
            continue;
        }
        pts = next;
        t += step;
        for (int i = 0; i < n; ++i) normalize_chart(pts[i]);
        if (record)
            for (int i = 0; i < n; ++i) (*record)[i].push_back({pts[i].z, pts[i].inverted});
        dt = std::min(dt * 1.5, dt_max);
    }
}

void FiberTracker::track_legs(const std::vector<TargetLeg>& legs, std::vector<TrackedPoint>& pts,
                              std::vector<std::vector<ArcSample>>* record) const {
    for (const TargetLeg& leg : legs) track_leg(leg, 0.0, 1.0, pts, record);
}

std::vector<LiftedArc> lift_segment(const RationalFunction& f, const PathSegment& seg,
                                    int segment_index, const Fiber& starts,
                                    const TraceOptions& opt) {
    const int n = f.degree();
    std::vector<TargetLeg> legs = segment_legs(seg, 8.0 * (1.0 + max_finite_mag(seg)));
    const double eps = opt.endpoint_offset;

    double radius = opt.chart_radius;
    if (radius <= 0.0) {
        double m = max_finite_mag(seg);
        for (const auto& fp : starts.points)
            if (!fp.point.infinite) m = std::max(m, std::abs(fp.point.value));
        for (const auto& leg : legs)
            if (!leg.inverted) m = std::max(m, std::max(std::abs(leg.from), std::abs(leg.to)));
        radius = 2.0 * (1.0 + m);
    }
    FiberTracker tracker(f, opt, radius);

    // The provided starts are the fiber over a point just inside the
    // segment; every point must be simple.
    std::vector<TrackedPoint> pts;
    for (const auto& fp : starts.points) {
        if (fp.multiplicity != 1)
            throw InconsistentMap("segment start fiber must consist of simple points");
        TrackedPoint p = fp.point.infinite ? TrackedPoint{Cx(0.0), true}
                                           : TrackedPoint{fp.point.value, false};
        tracker.normalize_chart(p);
        pts.push_back(p);
    }
    if (static_cast<int>(pts.size()) != n)
        throw InconsistentMap("segment start fiber has the wrong cardinality");

    const Cx w0 = lerp(legs.front(), eps);

    // Retry ladder: halve the step cap after a collision.
    for (int attempt = 0;; ++attempt) {
        try {
            TraceOptions o = opt;
            o.max_step = opt.max_step / double(1 << attempt);
            o.record_step = opt.record_step / double(1 << attempt);
            FiberTracker tr(f, o, radius);
            std::vector<TrackedPoint> cur = pts;
            for (auto& p : cur)
                if (!tr.settle(w0, legs.front().inverted, p))
                    throw NonConvergence("start fiber failed to settle");
            std::vector<std::vector<ArcSample>> record(n);
            for (size_t li = 0; li < legs.size(); ++li) {
                const double a = (li == 0) ? eps : 0.0;
                const double b = (li + 1 == legs.size()) ? 1.0 - eps : 1.0;
                tr.track_leg(legs[li], a, b, cur, &record);
            }
            std::vector<LiftedArc> arcs(n);
            for (int i = 0; i < n; ++i) {
                arcs[i].segment = segment_index;
                arcs[i].samples = std::move(record[i]);
            }
            return arcs;
        } catch (const PathJump&) {
            if (attempt >= opt.collision_retries) throw;
        }
    }
}

void snap_endpoints(std::vector<LiftedArc>& arcs, const std::vector<SpherePoint>& vertex_pos,
                    const std::vector<int>& start_candidates,
                    const std::vector<int>& end_candidates) {
    auto snap_one = [&](const ArcSample& s, const std::vector<int>& cands) {
        SpherePoint p = TrackedPoint{s.z, s.inverted}.to_sphere();
        int best = -1;
        double d1 = 1e300, d2 = 1e300;
        for (int id : cands) {
            const double d = chordal(p, vertex_pos[id]);
            if (d < d1) {
                d2 = d1;
                d1 = d;
                best = id;
            } else if (d < d2) {
                d2 = d;
            }
        }
        if (best < 0) throw AmbiguousSnap("no snap candidates");
        if (cands.size() > 1 && d2 < 2.0 * d1)
            throw AmbiguousSnap("arc end between two vertices");
        return best;
    };
    for (LiftedArc& a : arcs) {
        if (a.samples.empty()) throw AmbiguousSnap("empty arc");
        a.start_vertex = snap_one(a.samples.front(), start_candidates);
        a.end_vertex = snap_one(a.samples.back(), end_candidates);
    }
}

namespace {

// Direction of an arc end seen from its vertex, in the chart at the vertex.
Cx end_direction(const SpherePoint& v, const ArcSample& s) {
    if (v.infinite) return s.inverted ? s.z : Cx(1.0) / s.z;
    return s.finite() - v.value;
}

struct PullbackVertices {
    std::vector<SpherePoint> pos;   // by vertex id
    std::vector<int> label;         // gamma vertex index
    std::vector<int> mult;          // local multiplicity
    std::vector<std::vector<int>> over; // gamma vertex -> vertex ids
};

PullbackVertices fiber_vertices(const RationalFunction& f, const JordanPath& g,
                                const CriticalOptions& copt) {
    PullbackVertices out;
    out.over.resize(g.q());
    for (int j = 0; j < g.q(); ++j) {
        Fiber fb = fiber(f, g.vertices[j], copt);
        for (const auto& fp : fb.points) {
            out.over[j].push_back(static_cast<int>(out.pos.size()));
            out.pos.push_back(fp.point);
            out.label.push_back(j);
            out.mult.push_back(fp.multiplicity);
        }
    }
    return out;
}

void check_gamma_matches_critical_values(const CriticalData& cd, const JordanPath& g) {
    if (g.q() != cd.q())
        throw InconsistentMap("gamma must run through the critical values");
    std::vector<char> used(cd.q(), 0);
    for (const SpherePoint& v : g.vertices) {
        bool found = false;
        for (int k = 0; k < cd.q(); ++k) {
            if (used[k]) continue;
            if (chordal(v, cd.critical_values[k]) < 1e-6) {
                used[k] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw InconsistentMap("gamma vertex is not a critical value");
    }
}

} // namespace

EmbeddedRMap pullback_rmap(const RationalFunction& f, const JordanPath& g,
                           const TraceOptions& opt) {
    const int n = f.degree();
    const int q = g.q();
    CriticalOptions copt;
    CriticalData cd = critical_data(f, copt);
    check_gamma_matches_critical_values(cd, g);
    PullbackVertices verts = fiber_vertices(f, g, copt);

    double radius = opt.chart_radius;
    if (radius <= 0.0) {
        double m = 0.0;
        for (const SpherePoint& p : verts.pos)
            if (!p.infinite) m = std::max(m, std::abs(p.value));
        for (const SpherePoint& p : g.vertices)
            if (!p.infinite) m = std::max(m, std::abs(p.value));
        radius = 2.0 * (1.0 + m);
    }

    TraceOptions o = opt;
    o.chart_radius = radius;

    std::vector<LiftedArc> arcs;
    std::string last_error;
    bool done = false;
    for (int attempt = 0; attempt < opt.snap_retries && !done; ++attempt) {
        o.endpoint_offset = opt.endpoint_offset / double(1 << attempt);
        arcs.clear();
        try {
            for (int j = 0; j < q; ++j) {
                std::vector<TargetLeg> legs =
                    segment_legs(g.segments[j], 8.0 * (1.0 + max_finite_mag(g.segments[j])));
                const Cx w0 = lerp(legs.front(), o.endpoint_offset);
                std::vector<TrackedPoint> start_pts = fiber_points(f, w0, legs.front().inverted);
                Fiber starts;
                starts.target = legs.front().inverted
                                    ? (std::abs(w0) < 1e-154 ? SpherePoint::infinity()
                                                             : SpherePoint(Cx(1.0) / w0))
                                    : SpherePoint(w0);
                for (const auto& p : start_pts) starts.points.push_back({p.to_sphere(), 1});
                std::vector<LiftedArc> seg_arcs = lift_segment(f, g.segments[j], j, starts, o);
                snap_endpoints(seg_arcs, verts.pos, verts.over[j], verts.over[(j + 1) % q]);
                for (auto& a : seg_arcs) arcs.push_back(std::move(a));
            }
            // Arrival counts: a vertex of multiplicity mu receives exactly mu
            // arcs per incident segment side.
            std::map<std::pair<int, int>, int> count; // (vertex, segment side)
            for (const auto& a : arcs) {
                count[{a.start_vertex, 2 * a.segment}]++;
                count[{a.end_vertex, 2 * a.segment + 1}]++;
            }
            for (int v = 0; v < static_cast<int>(verts.pos.size()); ++v) {
                const int j = verts.label[v];
                const int out_side = 2 * j;
                const int in_side = 2 * ((j - 1 + q) % q) + 1;
                if (count[{v, out_side}] != verts.mult[v] || count[{v, in_side}] != verts.mult[v])
                    throw AmbiguousSnap("arc arrival counts do not match multiplicities");
            }
            done = true;
        } catch (const AmbiguousSnap& e) {
            last_error = e.what();
        }
    }
    if (!done) throw AmbiguousSnap("snapping failed: " + last_error);

    // Assemble the embedded map.
    EmbeddedRMap out;
    const int V = static_cast<int>(verts.pos.size());
    const int E = static_cast<int>(arcs.size());
    if (E != n * q) throw InconsistentMap("unexpected arc count");
    out.map.half_edges.assign(2 * E, {});
    out.map.rotations.assign(V, {});
    out.coords = verts.pos;
    out.map.labels = verts.label;
    out.map.labels_q = q;
    out.map.blue_seed = 0;

    std::vector<std::vector<std::pair<double, int>>> slots(V);
    for (int e = 0; e < E; ++e) {
        const LiftedArc& a = arcs[e];
        out.map.half_edges[2 * e] = {2 * e + 1, a.start_vertex};
        out.map.half_edges[2 * e + 1] = {2 * e, a.end_vertex};
        const Cx d0 = end_direction(verts.pos[a.start_vertex], a.samples.front());
        const Cx d1 = end_direction(verts.pos[a.end_vertex], a.samples.back());
        slots[a.start_vertex].push_back({std::atan2(d0.imag(), d0.real()), 2 * e});
        slots[a.end_vertex].push_back({std::atan2(d1.imag(), d1.real()), 2 * e + 1});
        out.arcs.push_back(a.samples);
    }
    for (int v = 0; v < V; ++v) {
        auto& sl = slots[v];
        std::sort(sl.begin(), sl.end());
        for (size_t i = 0; i < sl.size(); ++i) {
            const double gap = (i + 1 < sl.size()) ? sl[i + 1].first - sl[i].first
                                                   : sl[0].first + 2 * std::numbers::pi - sl[i].first;
            if (gap < 1e-9) throw AmbiguousSnap("coincident arc directions at a vertex");
            out.map.rotations[v].push_back(sl[i].second);
        }
        if (static_cast<int>(sl.size()) != 2 * verts.mult[v])
            throw InconsistentMap("vertex valence does not match its multiplicity");
    }
    require_valid(out.map);

    // The traced map must be a homogeneous labelled tessellation of the
    // sphere; anything else is an error, never a wrong map.
    if (euler_genus(out.map) != 0) throw InconsistentMap("traced map is not spherical");
    FaceStructure fs = face_structure(out.map);
    if (!fs.two_colorable || fs.blue_count() * 2 != fs.face_count())
        throw InconsistentMap("traced map is not two-colored and balanced");
    for (int s : fs.face_sizes())
        if (s != q) throw InconsistentMap("traced tile is not a q-gon");
    QLabelling L{q, out.map.labels};
    ConsistencyVerdict cv = check_consistent(out.map, L, true);
    if (!cv.consistent)
        throw InconsistentMap("pullback labelling inconsistent: " + cv.violations.front());
    return out;
}

// ---------------------------------------------------------------------------
// Monodromy loops.  Each loop reaches its gamma vertex through a corridor of
// straight legs hugging the left side of gamma (inside the blue tile), makes
// one full counterclockwise circle around the vertex, and retraces.  Corners
// of the corridor, including the one at infinity in the 1/w chart, are taken
// along small in-sector arcs, so the corridor never crosses gamma.

namespace {

struct CornerInfo {
    Cx center{0.0};
    bool inverted = false; // chart of the corner
    double phi_out = 0.0;  // angle of the outgoing tangent
    double theta = 0.0;    // interior (left-side) sector width
    double rho = 0.0;      // anchor radius
};

struct CorridorGeometry {
    std::vector<std::vector<TargetLeg>> raw;  // per segment, the gamma legs
    std::vector<CornerInfo> corner;           // per gamma vertex
    std::vector<CornerInfo> through;          // per segment (virtual corner), rho=0 if none
    std::vector<std::vector<TargetLeg>> legs; // per segment, corridor legs
};

Cx unit(Cx v) { return v / std::abs(v); }

double sector_width(Cx t_in, Cx t_out) {
    const double phi_in = std::atan2(-t_in.imag(), -t_in.real());
    const double phi_out = std::atan2(t_out.imag(), t_out.real());
    double theta = std::fmod(phi_in - phi_out, 2 * std::numbers::pi);
    if (theta < 1e-12) theta += 2 * std::numbers::pi;
    return theta;
}

// Minimum chart distance from `center` to the gamma parts other than the
// excluded segments and vertex.
double clearance_at(const JordanPath& g, int exclude_seg_a, int exclude_seg_b, int exclude_vertex,
                    Cx center, bool inverted) {
    double d = 1e300;
    const int q = g.q();
    for (int k = 0; k < q; ++k) {
        if (k == exclude_seg_a || k == exclude_seg_b) continue;
        for (Cx w : sample_segment(g.segments[k], 128)) {
            if (inverted && std::abs(w) < 1e-9) continue;
            const Cx p = inverted ? Cx(1.0) / w : w;
            d = std::min(d, std::abs(p - center));
        }
    }
    for (int j = 0; j < q; ++j) {
        if (j == exclude_vertex) continue;
        const SpherePoint& v = g.vertices[j];
        if (!inverted && !v.infinite) d = std::min(d, std::abs(v.value - center));
        if (inverted && !v.infinite && std::abs(v.value) > 1e-12)
            d = std::min(d, std::abs(Cx(1.0) / v.value - center));
    }
    return d;
}

CorridorGeometry build_corridor(const JordanPath& g, double far_scale) {
    const int q = g.q();
    CorridorGeometry geo;
    geo.raw.resize(q);
    geo.corner.resize(q);
    geo.through.resize(q);
    geo.legs.resize(q);
    for (int k = 0; k < q; ++k) geo.raw[k] = segment_legs(g.segments[k], far_scale);

    // Vertex corners.
    for (int v = 0; v < q; ++v) {
        const std::vector<TargetLeg>& in_legs = geo.raw[(v - 1 + q) % q];
        const std::vector<TargetLeg>& out_legs = geo.raw[v];
        const TargetLeg& li = in_legs.back();
        const TargetLeg& lo = out_legs.front();
        CornerInfo c;
        c.inverted = g.vertices[v].infinite;
        if (li.inverted != c.inverted || lo.inverted != c.inverted)
            throw InconsistentMap("corner chart mismatch");
        c.center = c.inverted ? Cx(0.0) : g.vertices[v].value;
        const Cx t_in = unit(li.to - li.from);
        const Cx t_out = unit(lo.to - lo.from);
        c.phi_out = std::atan2(t_out.imag(), t_out.real());
        c.theta = sector_width(t_in, t_out);
        double d = clearance_at(g, (v - 1 + q) % q, v, v, c.center, c.inverted);
        d = std::min(d, 0.5 * std::abs(li.to - li.from));
        d = std::min(d, 0.5 * std::abs(lo.to - lo.from));
        c.rho = d / 8.0;
        geo.corner[v] = c;
    }

    // Virtual corners of through-infinity segments.
    for (int k = 0; k < q; ++k) {
        if (!g.segments[k].through_inf) continue;
        const TargetLeg& li = geo.raw[k][1];
        const TargetLeg& lo = geo.raw[k][2];
        CornerInfo c;
        c.inverted = true;
        c.center = Cx(0.0);
        const Cx t_in = unit(li.to - li.from);
        const Cx t_out = unit(lo.to - lo.from);
        c.phi_out = std::atan2(t_out.imag(), t_out.real());
        c.theta = sector_width(t_in, t_out);
        double d = clearance_at(g, k, -1, -1, c.center, true);
        d = std::min(d, 0.5 * std::abs(li.to - li.from));
        d = std::min(d, 0.5 * std::abs(lo.to - lo.from));
        c.rho = d / 8.0;
        geo.through[k] = c;
    }

    // Corridor legs per segment: every raw leg is shifted to its left, with
    // anchor offsets at corner ends and scaled offsets at chart boundaries.
    for (int k = 0; k < q; ++k) {
        const auto& raw = geo.raw[k];
        const CornerInfo& ca = geo.corner[k];
        const CornerInfo& cb = geo.corner[(k + 1) % q];
        const bool through = g.segments[k].through_inf;
        std::vector<TargetLeg> legs;
        for (size_t i = 0; i < raw.size(); ++i) {
            const TargetLeg& L = raw[i];
            const Cx t = unit(L.to - L.from);
            const Cx nrm = t * Cx(0.0, 1.0);
            const bool corner_from = (i == 0);
            const bool corner_to = (i + 1 == raw.size());
            const bool through_to = through && i == 1;
            const bool through_from = through && i == 2;

            double off_from, mar_from, off_to, mar_to;
            if (corner_from) {
                off_from = ca.rho * std::sin(ca.theta / 4);
                mar_from = ca.rho * std::cos(ca.theta / 4);
            } else if (through_from) {
                const CornerInfo& tc = geo.through[k];
                off_from = tc.rho * std::sin(tc.theta / 4);
                mar_from = tc.rho * std::cos(tc.theta / 4);
            } else {
                off_from = 0.2 * std::abs(L.to - L.from);
                mar_from = 0.0;
            }
            if (corner_to) {
                off_to = cb.rho * std::sin(cb.theta / 4);
                mar_to = cb.rho * std::cos(cb.theta / 4);
            } else if (through_to) {
                const CornerInfo& tc = geo.through[k];
                off_to = tc.rho * std::sin(tc.theta / 4);
                mar_to = tc.rho * std::cos(tc.theta / 4);
            } else {
                off_to = 0.2 * std::abs(L.to - L.from);
                mar_to = 0.0;
            }

            const Cx A = L.from + t * mar_from + nrm * off_from;
            const Cx B = L.to - t * mar_to + nrm * off_to;
            if (!legs.empty()) {
                // Chart boundary inside the segment: connect the previous
                // offset endpoint to A in this leg's chart.
                const TargetLeg& prev = legs.back();
                if (prev.inverted != L.inverted) {
                    legs.push_back({Cx(1.0) / prev.to, A, L.inverted});
                } else if (through && i == 2) {
                    // In-sector arc around the virtual corner at infinity.
                    const CornerInfo& tc = geo.through[k];
                    const double r0 = std::abs(prev.to - tc.center);
                    const double r1 = std::abs(A - tc.center);
                    const int m = 16;
                    Cx cur = prev.to;
                    for (int s = 1; s <= m; ++s) {
                        const double frac = double(s) / m;
                        const double psi = tc.theta * (0.75 + (0.25 - 0.75) * frac);
                        const double r = r0 + (r1 - r0) * frac;
                        const Cx nxt = tc.center + std::polar(r, tc.phi_out + psi);
                        legs.push_back({cur, nxt, true});
                        cur = nxt;
                    }
                }
            }
            legs.push_back({A, B, L.inverted});
        }
        geo.legs[k] = std::move(legs);
    }
    return geo;
}

std::vector<TargetLeg> corner_arc_legs(const CornerInfo& c) {
    std::vector<TargetLeg> legs;
    const int m = 16;
    Cx cur = c.center + std::polar(c.rho, c.phi_out + 0.75 * c.theta);
    for (int s = 1; s <= m; ++s) {
        const double psi = c.theta * (0.75 - 0.5 * double(s) / m);
        const Cx nxt = c.center + std::polar(c.rho, c.phi_out + psi);
        legs.push_back({cur, nxt, c.inverted});
        cur = nxt;
    }
    return legs;
}

std::vector<TargetLeg> circle_legs(const CornerInfo& c, double start_angle) {
    std::vector<TargetLeg> legs;
    const int m = 48;
    Cx cur = c.center + std::polar(c.rho, start_angle);
    for (int s = 1; s <= m; ++s) {
        const double a = start_angle + 2 * std::numbers::pi * s / m;
        const Cx nxt = c.center + std::polar(c.rho, a);
        legs.push_back({cur, nxt, c.inverted});
        cur = nxt;
    }
    return legs;
}

std::vector<TargetLeg> reversed_legs(const std::vector<TargetLeg>& legs) {
    std::vector<TargetLeg> out;
    for (auto it = legs.rbegin(); it != legs.rend(); ++it)
        out.push_back({it->to, it->from, it->inverted});
    return out;
}

// Loop around gamma vertex j, based at the corridor start just past vertex 0.
std::vector<TargetLeg> loop_legs(const CorridorGeometry& geo, int j) {
    std::vector<TargetLeg> fwd;
    for (int k = 0; k < j; ++k) {
        for (const TargetLeg& l : geo.legs[k]) fwd.push_back(l);
        if (k + 1 < j)
            for (const TargetLeg& l : corner_arc_legs(geo.corner[k + 1])) fwd.push_back(l);
    }
    const CornerInfo& c = geo.corner[j];
    const double start = (j == 0) ? c.phi_out + 0.25 * c.theta   // exit anchor
                                  : c.phi_out + 0.75 * c.theta;  // entry anchor
    std::vector<TargetLeg> legs = fwd;
    for (const TargetLeg& l : circle_legs(c, start)) legs.push_back(l);
    for (const TargetLeg& l : reversed_legs(fwd)) legs.push_back(l);
    return legs;
}

} // namespace

SpherePoint default_basepoint(const JordanPath& gamma) {
    double m = 0.0;
    for (const SpherePoint& v : gamma.vertices)
        if (!v.infinite) m = std::max(m, std::abs(v.value));
    CorridorGeometry geo = build_corridor(gamma, 8.0 * (1.0 + m));
    const TargetLeg& first = geo.legs[0].front();
    return first.inverted ? SpherePoint(Cx(1.0) / first.from) : SpherePoint(first.from);
}

Constellation monodromy_by_continuation(const RationalFunction& f, const JordanPath& gamma,
                                        const SpherePoint& basepoint, const TraceOptions& opt) {
    const int n = f.degree();
    const int q = gamma.q();
    CriticalData cd = critical_data(f);
    check_gamma_matches_critical_values(cd, gamma);

    double m = 0.0;
    for (const SpherePoint& v : gamma.vertices)
        if (!v.infinite) m = std::max(m, std::abs(v.value));
    if (!basepoint.infinite) m = std::max(m, std::abs(basepoint.value));
    const double far_scale = 8.0 * (1.0 + m);
    CorridorGeometry geo = build_corridor(gamma, far_scale);

    double radius = opt.chart_radius > 0 ? opt.chart_radius : 2.0 * (1.0 + m);
    FiberTracker tracker(f, opt, radius);

    // Base fiber, deterministically ordered.
    Cx base_v;
    bool base_inv;
    if (basepoint.infinite) {
        base_v = Cx(0.0);
        base_inv = true;
    } else if (std::abs(basepoint.value) > radius) {
        base_v = Cx(1.0) / basepoint.value;
        base_inv = true;
    } else {
        base_v = basepoint.value;
        base_inv = false;
    }
    std::vector<TrackedPoint> base = fiber_points(f, base_v, base_inv);
    for (auto& p : base) tracker.normalize_chart(p);
    if (static_cast<int>(base.size()) != n)
        throw NonConvergence("basepoint fiber has the wrong cardinality");

    // Connector from the basepoint to the corridor start; it may cross
    // gamma, which only conjugates every loop by the same permutation.
    const TargetLeg& first = geo.legs[0].front();
    std::vector<TargetLeg> connector;
    {
        const Cx start_in_chart =
            first.inverted ? (basepoint.infinite ? Cx(0.0) : Cx(1.0) / basepoint.value)
                           : basepoint.value;
        if (basepoint.infinite && !first.inverted)
            throw NonConvergence("infinite basepoint with a finite corridor start");
        if (std::abs(start_in_chart - first.from) > 1e-15)
            connector.push_back({start_in_chart, first.from, first.inverted});
    }

    Constellation out;
    out.n = n;
    out.q = q;
    for (int j = 0; j < q; ++j) {
        std::vector<TargetLeg> legs = connector;
        for (const TargetLeg& l : loop_legs(geo, j)) legs.push_back(l);
        for (const TargetLeg& l : reversed_legs(connector)) legs.push_back(l);

        std::vector<TrackedPoint> pts = base;
        tracker.track_legs(legs, pts, nullptr);

        Perm sigma(n, -1);
        std::vector<char> used(n, 0);
        for (int i = 0; i < n; ++i) {
            int best = -1;
            double d1 = 1e300;
            for (int k = 0; k < n; ++k) {
                const double d = chordal(pts[i].to_sphere(), base[k].to_sphere());
                if (d < d1) {
                    d1 = d;
                    best = k;
                }
            }
            if (best < 0 || d1 > 1e-6 || used[best])
                throw PathJump("monodromy loop did not return to the base fiber");
            used[best] = 1;
            sigma[i] = best;
        }
        out.sigmas.push_back(std::move(sigma));
    }
    return out;
}

} // namespace rmap
