#ifndef RMAP_SPHERE_HPP
#define RMAP_SPHERE_HPP

#include <cmath>
#include <complex>
#include <string>

namespace rmap {

using Cx = std::complex<double>;

// A point of the Riemann sphere: a finite complex number or the point at
// infinity.  Exactly one representation per point.
struct SpherePoint {
    Cx value{0.0, 0.0};
    bool infinite = false;

    SpherePoint() = default;
    SpherePoint(double re, double im) : value(re, im) {}
    SpherePoint(Cx v) : value(v) {} // NOLINT: implicit by design
    static SpherePoint infinity() {
        SpherePoint p;
        p.infinite = true;
        return p;
    }

    bool is_infinity() const { return infinite; }
    Cx finite() const { return value; }
};

// Chordal metric on the sphere, bounded by 2; chart independent.
inline double chordal(const SpherePoint& a, const SpherePoint& b) {
    auto lift = [](const SpherePoint& p) {
        if (p.infinite) return 0.0;
        return 1.0 / std::sqrt(1.0 + std::norm(p.value));
    };
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite) return 2.0 * lift(b);
    if (b.infinite) return 2.0 * lift(a);
    return 2.0 * std::abs(a.value - b.value) * lift(a) * lift(b);
}

inline bool sphere_close(const SpherePoint& a, const SpherePoint& b, double tol = 1e-9) {
    return chordal(a, b) <= tol;
}

inline std::string to_string(const SpherePoint& p) {
    if (p.infinite) return "inf";
    return "(" + std::to_string(p.value.real()) + "," + std::to_string(p.value.imag()) + ")";
}

} // namespace rmap

#endif
