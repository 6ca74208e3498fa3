#include "rmap/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmap/errors.hpp"

namespace rmap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross(Cx a, Cx b) { return a.real() * b.imag() - a.imag() * b.real(); }

Cx unit_or(Cx v, Cx fallback) {
    const double m = std::abs(v);
    return (m > 1e-12) ? v / m : fallback;
}

// Line piece p + t*d, t in [0, tmax] (tmax = inf encodes a ray).
struct Piece {
    Cx p;
    Cx d;
    double tmax = 1.0;
};

std::vector<Piece> pieces_of(const PathSegment& s) {
    if (!s.a.infinite && !s.b.infinite && !s.through_inf)
        return {{s.a.value, s.b.value - s.a.value, 1.0}};
    std::vector<Piece> out;
    if (!s.a.infinite) out.push_back({s.a.value, s.dir_out, kInf});
    if (!s.b.infinite) out.push_back({s.b.value, s.dir_in, kInf});
    return out;
}

bool segment_touches_infinity(const PathSegment& s) {
    return s.a.infinite || s.b.infinite || s.through_inf;
}

// Do two pieces meet, apart from the shared corners of adjacent segments?
bool pieces_meet(const Piece& u, const Piece& v, const std::vector<Cx>& shared, double scale) {
    const double tol = 1e-12 * std::max(scale, 1.0);
    const double den = cross(u.d, v.d);
    const Cx w = v.p - u.p;
    const double du = std::abs(u.d), dv = std::abs(v.d);

    auto near_shared = [&](Cx pt) {
        for (Cx s : shared)
            if (std::abs(pt - s) <= 1e-9 * std::max(scale, 1.0)) return true;
        return false;
    };

    if (std::abs(den) > 1e-14 * du * dv) {
        const double t1 = cross(w, v.d) / den;
        const double t2 = cross(w, u.d) / den;
        const double m1 = tol / std::max(du, 1e-300);
        const double m2 = tol / std::max(dv, 1e-300);
        if (t1 >= -m1 && t1 <= u.tmax + m1 && t2 >= -m2 && t2 <= v.tmax + m2) {
            const Cx pt = u.p + t1 * u.d;
            if (!near_shared(pt)) return true;
        }
        return false;
    }

    // Parallel: meet only when collinear and the parameter intervals overlap.
    if (std::abs(cross(w, u.d)) > tol * std::max(du, 1.0)) return false;
    const double a0 = 0.0;
    const double a1 = u.tmax;
    double b0 = (w.real() * u.d.real() + w.imag() * u.d.imag()) / std::max(du * du, 1e-300);
    const double dir = (v.d.real() * u.d.real() + v.d.imag() * u.d.imag()) / std::max(du * du, 1e-300);
    double b1 = (v.tmax == kInf) ? (dir > 0 ? kInf : -kInf) : b0 + dir * v.tmax;
    if (b1 < b0) std::swap(b0, b1);
    const double lo = std::max(a0, b0), hi = std::min(a1, b1);
    const double margin = tol / std::max(du, 1e-300);
    if (hi < lo - margin) return false;
    if (hi - lo <= 2 * margin) {
        // Touch at a single point; fine when it is the shared corner.
        const Cx pt = u.p + 0.5 * (lo + hi) * u.d;
        return !near_shared(pt);
    }
    return true;
}

} // namespace

bool segments_intersect(const PathSegment& s1, const PathSegment& s2, bool adjacent) {
    double scale = 1.0;
    for (const SpherePoint* sp : {&s1.a, &s1.b, &s2.a, &s2.b})
        if (!sp->infinite) scale = std::max(scale, std::abs(sp->value));

    // The point at infinity: interiors of through-infinity segments own it;
    // rays end at it.  Two segments may share it only as a common endpoint.
    const bool t1 = segment_touches_infinity(s1), t2 = segment_touches_infinity(s2);
    if (t1 && t2) {
        const bool endpoint1 = (s1.a.infinite || s1.b.infinite) && !s1.through_inf;
        const bool endpoint2 = (s2.a.infinite || s2.b.infinite) && !s2.through_inf;
        if (!(adjacent && endpoint1 && endpoint2)) return true;
    }

    std::vector<Cx> shared;
    if (adjacent) {
        for (const SpherePoint* x : {&s1.a, &s1.b})
            for (const SpherePoint* y : {&s2.a, &s2.b})
                if (!x->infinite && !y->infinite && std::abs(x->value - y->value) <= 1e-12 * scale)
                    shared.push_back(x->value);
    }

    for (const Piece& u : pieces_of(s1))
        for (const Piece& v : pieces_of(s2))
            if (pieces_meet(u, v, shared, scale)) return true;
    return false;
}

int JordanPath::infinity_vertex() const {
    for (int j = 0; j < q(); ++j)
        if (vertices[j].infinite) return j;
    return -1;
}

int JordanPath::through_infinity_segment() const {
    for (size_t j = 0; j < segments.size(); ++j)
        if (segments[j].through_inf) return static_cast<int>(j);
    return -1;
}

namespace {

void check_jordan(const JordanPath& g) {
    const int q = g.q();
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == q - 1);
            if (segments_intersect(g.segments[i], g.segments[j], adjacent))
                throw NotJordan("segments " + std::to_string(i) + " and " + std::to_string(j) +
                                " intersect");
        }
}

JordanPath build_path(std::vector<SpherePoint> vertices) {
    JordanPath g;
    g.vertices = std::move(vertices);
    const int q = g.q();
    for (int j = 0; j < q; ++j) {
        const SpherePoint& a = g.vertices[j];
        const SpherePoint& b = g.vertices[(j + 1) % q];
        PathSegment s;
        s.a = a;
        s.b = b;
        if (a.infinite && b.infinite) throw NotJordan("two vertices at infinity");
        if (a.infinite) {
            s.dir_in = unit_or(b.value, Cx(-1.0, 0.0));
        } else if (b.infinite) {
            s.dir_out = unit_or(a.value, Cx(1.0, 0.0));
        }
        g.segments.push_back(s);
    }
    // Resolve degenerate ray directions at a shared infinity vertex: the
    // incoming and outgoing rays must not be collinear-overlapping.
    const int iv = g.infinity_vertex();
    if (iv >= 0) {
        PathSegment& into = g.segments[(iv - 1 + q) % q];
        PathSegment& from = g.segments[iv % q];
        if (std::abs(into.a.value) <= 1e-12) into.dir_out = -from.dir_in;
        if (std::abs(from.b.value) <= 1e-12) from.dir_in = -into.dir_out;
        if (std::abs(into.dir_out - from.dir_in) <= 1e-9) from.dir_in = -from.dir_in;
    }
    return g;
}

} // namespace

JordanPath real_line_gamma(const CriticalData& cd, double tol) {
    std::vector<double> reals;
    bool has_inf = false;
    for (const SpherePoint& w : cd.critical_values) {
        if (w.infinite) {
            has_inf = true;
            continue;
        }
        if (std::abs(w.value.imag()) > tol * (1.0 + std::abs(w.value.real())))
            throw NotFortunate("critical value " + to_string(w) + " is not real");
        reals.push_back(w.value.real());
    }
    std::sort(reals.begin(), reals.end());

    JordanPath g;
    for (double x : reals) g.vertices.push_back(SpherePoint(Cx(x, 0.0)));
    if (has_inf) g.vertices.push_back(SpherePoint::infinity());
    const int q = g.q();
    if (q < 2) throw NotJordan("fewer than two vertices");

    for (int j = 0; j < q; ++j) {
        PathSegment s;
        s.a = g.vertices[j];
        s.b = g.vertices[(j + 1) % q];
        if (has_inf) {
            if (j == q - 2) s.dir_out = Cx(1.0, 0.0);   // last real -> +inf
            if (j == q - 1) s.dir_in = Cx(-1.0, 0.0);   // -inf -> first real
        } else if (j == q - 1) {
            s.through_inf = true; // close max -> +inf, -inf -> min
            s.dir_out = Cx(1.0, 0.0);
            s.dir_in = Cx(-1.0, 0.0);
        }
        g.segments.push_back(s);
    }
    check_jordan(g);
    return g;
}

JordanPath polygonal_gamma(const std::vector<SpherePoint>& values, const std::vector<int>& order) {
    const int q = static_cast<int>(values.size());
    if (q < 2) throw NotJordan("fewer than two vertices");
    if (static_cast<int>(order.size()) != q) throw NotJordan("order size mismatch");
    std::vector<char> seen(q, 0);
    for (int i : order) {
        if (i < 0 || i >= q || seen[i]) throw NotJordan("order is not a permutation");
        seen[i] = 1;
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (chordal(values[i], values[j]) <= 1e-12) throw NotJordan("values are not distinct");

    std::vector<SpherePoint> vs;
    for (int i : order) vs.push_back(values[i]);
    JordanPath g = build_path(std::move(vs));
    // Two finite values leave no room for two disjoint chords; close the
    // bigon through infinity instead.
    if (q == 2 && !g.vertices[0].infinite && !g.vertices[1].infinite) {
        PathSegment& back = g.segments[1];
        back.through_inf = true;
        back.dir_out = unit_or(back.a.value - back.b.value, Cx(1.0, 0.0));
        back.dir_in = -back.dir_out;
    }
    check_jordan(g);
    return g;
}

std::vector<int> default_cyclic_order(const std::vector<SpherePoint>& values) {
    const int q = static_cast<int>(values.size());
    std::vector<int> finite, infinite;
    Cx centroid(0.0);
    for (int i = 0; i < q; ++i) {
        if (values[i].infinite)
            infinite.push_back(i);
        else {
            finite.push_back(i);
            centroid += values[i].value;
        }
    }
    if (!finite.empty()) centroid /= double(finite.size());

    std::sort(finite.begin(), finite.end(), [&](int i, int j) {
        const Cx a = values[i].value - centroid, b = values[j].value - centroid;
        const double ta = std::atan2(a.imag(), a.real());
        const double tb = std::atan2(b.imag(), b.real());
        if (ta != tb) return ta < tb;
        return std::abs(a) < std::abs(b);
    });

    std::vector<int> order = finite;
    order.insert(order.end(), infinite.begin(), infinite.end());

    auto is_jordan = [&](const std::vector<int>& ord) {
        try {
            std::vector<SpherePoint> vs;
            for (int i : ord) vs.push_back(values[i]);
            check_jordan(build_path(std::move(vs)));
            return true;
        } catch (const NotJordan&) {
            return false;
        }
    };

    if (is_jordan(order) || q < 4) return order;

    // 2-opt uncrossing: reverse blocks until simple (cap the work).
    const int limit = 20 * q * q;
    const int last = infinite.empty() ? q : q - 1; // keep infinity pinned last
    for (int iter = 0; iter < limit; ++iter) {
        bool improved = false;
        for (int i = 0; i < last - 1 && !improved; ++i)
            for (int j = i + 1; j < last && !improved; ++j) {
                std::vector<int> cand = order;
                std::reverse(cand.begin() + i, cand.begin() + j + 1);
                auto tour_len = [&](const std::vector<int>& ord) {
                    double s = 0.0;
                    for (int k = 0; k < q; ++k)
                        s += chordal(values[ord[k]], values[ord[(k + 1) % q]]);
                    return s;
                };
                if (tour_len(cand) < tour_len(order) - 1e-15) {
                    order = cand;
                    improved = true;
                }
            }
        if (!improved) break;
        if (is_jordan(order)) return order;
    }
    return order;
}

SpherePoint segment_point(const PathSegment& s, double t) {
    const double scale_a = s.a.infinite ? 1.0 : 1.0 + std::abs(s.a.value);
    const double scale_b = s.b.infinite ? 1.0 : 1.0 + std::abs(s.b.value);
    if (!s.a.infinite && !s.b.infinite && !s.through_inf)
        return SpherePoint(s.a.value + t * (s.b.value - s.a.value));
    if (s.through_inf) {
        if (t == 0.5) return SpherePoint::infinity();
        if (t < 0.5) return SpherePoint(s.a.value + s.dir_out * (2 * t / (1 - 2 * t)) * scale_a);
        return SpherePoint(s.b.value + s.dir_in * (2 * (1 - t) / (2 * t - 1)) * scale_b);
    }
    if (s.b.infinite) {
        if (t >= 1.0) return SpherePoint::infinity();
        return SpherePoint(s.a.value + s.dir_out * (t / (1 - t)) * scale_a);
    }
    if (t <= 0.0) return SpherePoint::infinity();
    return SpherePoint(s.b.value + s.dir_in * ((1 - t) / t) * scale_b);
}

std::vector<Cx> sample_segment(const PathSegment& s, int samples) {
    std::vector<Cx> out;
    const double cap = 1e6;
    for (int i = 0; i <= samples; ++i) {
        const double t = double(i) / samples;
        SpherePoint p = segment_point(s, t);
        if (p.infinite) continue;
        if (std::abs(p.value) > cap) continue;
        out.push_back(p.value);
    }
    return out;
}

} // namespace rmap
