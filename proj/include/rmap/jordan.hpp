#ifndef RMAP_JORDAN_HPP
#define RMAP_JORDAN_HPP

#include <optional>
#include <vector>

#include "rmap/critical.hpp"
#include "rmap/sphere.hpp"

namespace rmap {

// One edge of a Jordan polygon on the sphere.  Finite endpoints are joined
// by a straight chord unless the segment is routed through infinity; a
// segment with an endpoint at infinity is a ray with an explicit direction.
struct PathSegment {
    SpherePoint a, b;   // from a to b
    bool through_inf = false;
    Cx dir_out{1.0, 0.0}; // unit direction of the ray leaving a (rays only)
    Cx dir_in{-1.0, 0.0}; // unit direction d such that the ray b + s*d, s>=0
                          // carries the approach from infinity into b
};

// Oriented Jordan polygon through q distinct sphere points.  vertices[j]
// carries label j; segment j runs from vertices[j] to vertices[j+1 mod q].
// The blue tile of the trivial tessellation lies on the left.
struct JordanPath {
    std::vector<SpherePoint> vertices;
    std::vector<PathSegment> segments;

    int q() const { return static_cast<int>(vertices.size()); }
    int label_of_vertex(int j) const { return j; }
    int infinity_vertex() const; // index or -1
    int through_infinity_segment() const; // index or -1
};

// Gamma = R union {infinity} with vertices at the critical values sorted
// increasingly, infinity labelled last when it is a critical value.
// Throws NotFortunate when a value has |Im| > tol*(1+|Re|).
JordanPath real_line_gamma(const CriticalData& cd, double tol = 1e-9);

// Polygon visiting the given distinct values in the given cyclic order;
// with exactly two finite values the bigon closes through infinity.
// Throws NotJordan when two non-adjacent segments intersect (exact chord
// and ray predicates; the point at infinity may only be shared as a common
// endpoint).
JordanPath polygonal_gamma(const std::vector<SpherePoint>& values,
                           const std::vector<int>& order);

// Angular order around the centroid of the finite values, infinity last;
// falls back to 2-opt uncrossing when the angular tour self-intersects.
std::vector<int> default_cyclic_order(const std::vector<SpherePoint>& values);

// Sampled polyline of a segment in the finite chart (large samples stand in
// for the part near infinity); used by rendering and the Jordan backstop.
std::vector<Cx> sample_segment(const PathSegment& s, int samples);

// Point on segment s at parameter t in (0,1), in sphere coordinates.
SpherePoint segment_point(const PathSegment& s, double t);

bool segments_intersect(const PathSegment& s1, const PathSegment& s2, bool adjacent);

} // namespace rmap

#endif
