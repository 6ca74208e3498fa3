#ifndef RMAP_TRACE_HPP
#define RMAP_TRACE_HPP

#include <vector>

#include "rmap/combmap.hpp"
#include "rmap/constellation.hpp"
#include "rmap/critical.hpp"
#include "rmap/jordan.hpp"

namespace rmap {

struct TraceOptions {
    double endpoint_offset = 1e-3; // truncation, relative to the end legs
    double max_step = 1.0;         // parameter step per leg
    double record_step = 1.0 / 64; // step cap while recording polylines
    double step_floor = 1.0 / 65536;
    double chart_radius = 0.0;   // 0 = derived from the data in context
    double collision_tol = 1e-8; // chordal distance treated as a collision
    int newton_budget = 16;
    int collision_retries = 6;
    int snap_retries = 8;
};

// Straight target-value piece: w runs from `from` to `to` in the w chart,
// or in the 1/w chart when inverted.
struct TargetLeg {
    Cx from{0.0}, to{0.0};
    bool inverted = false;
};

// A fiber point tracked in the z or 1/z chart.
struct TrackedPoint {
    Cx z{0.0};
    bool inverted = false;
    SpherePoint to_sphere() const {
        if (inverted && std::abs(z) < 1e-154) return SpherePoint::infinity();
        return inverted ? SpherePoint(Cx(1.0) / z) : SpherePoint(z);
    }
};

struct ArcSample {
    Cx z{0.0};
    bool inverted = false;
    Cx finite() const { return inverted ? Cx(1.0) / z : z; }
};

// One lifted arc over one gamma segment, truncated near its endpoints and
// snapped to the vertices over the segment ends.
struct LiftedArc {
    int segment = -1;
    std::vector<ArcSample> samples;
    int start_vertex = -1;
    int end_vertex = -1;
};

// Combinatorial map plus an embedding: vertex coordinates and one polyline
// per edge, oriented along the forward (blue-left) half-edge.
struct EmbeddedRMap {
    CombinatorialMap map;
    std::vector<SpherePoint> coords;
    std::vector<std::vector<ArcSample>> arcs; // per edge
};

// Chart-consistent linear legs covering a path segment; rays extend to
// |w| ~ far_scale before switching to the 1/w chart.
std::vector<TargetLeg> segment_legs(const PathSegment& s, double far_scale);

// Full fiber over one target value.
std::vector<TrackedPoint> fiber_points(const RationalFunction& f, Cx value, bool inverted);

// Continuation of all n fiber points along a chain of target legs on a
// shared parameter grid.  Every step enforces a movement bound against the
// current fiber separation, so a silent exchange of sheets cannot happen;
// collisions throw PathJump, Newton failure at the floor NonConvergence.
class FiberTracker {
  public:
    FiberTracker(const RationalFunction& f, const TraceOptions& opt, double chart_radius);

    void track_leg(const TargetLeg& leg, double t_from, double t_to,
                   std::vector<TrackedPoint>& pts,
                   std::vector<std::vector<ArcSample>>* record) const;
    void track_legs(const std::vector<TargetLeg>& legs, std::vector<TrackedPoint>& pts,
                    std::vector<std::vector<ArcSample>>* record) const;

    // Newton-correct p onto the fiber of the given target value.
    bool settle(Cx target, bool target_inverted, TrackedPoint& p) const {
        return newton(target, target_inverted, p);
    }
    void normalize_chart(TrackedPoint& p) const;

    double chart_radius() const { return chart_radius_; }

  private:
    bool newton(Cx target, bool target_inverted, TrackedPoint& p) const;

    const RationalFunction& f_;
    TraceOptions opt_;
    double chart_radius_;
    Polynomial dnum_, dden_, dnum_rev_, dden_rev_;
};

// Arcs over one segment: starts at the fiber over a point just inside the
// segment (which must consist of deg f simple points) and tracks to the far
// truncation point.  Endpoints are left unsnapped.
std::vector<LiftedArc> lift_segment(const RationalFunction& f, const PathSegment& seg,
                                    int segment_index, const Fiber& starts,
                                    const TraceOptions& opt = {});

// Assign each arc end to the nearest candidate vertex; throws AmbiguousSnap
// when the nearest and second-nearest candidates are within a factor of two.
void snap_endpoints(std::vector<LiftedArc>& arcs, const std::vector<SpherePoint>& vertex_pos,
                    const std::vector<int>& start_candidates,
                    const std::vector<int>& end_candidates);

// Steps 3-5 of the forward algorithm: lift gamma, snap, and assemble the
// embedded pullback map with the pulled-back labelling.  gamma's vertices
// must be exactly the critical values of f.
EmbeddedRMap pullback_rmap(const RationalFunction& f, const JordanPath& gamma,
                           const TraceOptions& opt = {});

// Monodromy by loop continuation: for each gamma vertex j, the full fiber
// over the basepoint is continued around a small loop encircling only that
// vertex (reached through a corridor inside the blue tile), and the induced
// sheet permutation is recorded.
Constellation monodromy_by_continuation(const RationalFunction& f, const JordanPath& gamma,
                                        const SpherePoint& basepoint,
                                        const TraceOptions& opt = {});

// A reasonable off-gamma basepoint (left of segment 0).
SpherePoint default_basepoint(const JordanPath& gamma);

} // namespace rmap

#endif
