#ifndef RMAP_CRITICAL_HPP
#define RMAP_CRITICAL_HPP

#include <vector>

#include "rmap/rational.hpp"

namespace rmap {

struct CriticalPoint {
    SpherePoint point;
    int ramification = 2; // local degree mu >= 2
    int value_index = -1; // index into CriticalData::critical_values
};

// Critical points/values of a rational map on the sphere together with the
// Riemann-Hurwitz bookkeeping sum(mu-1) = 2n + 2g - 2 (g = 0 here).
struct CriticalData {
    std::vector<CriticalPoint> critical_points;
    std::vector<SpherePoint> critical_values; // distinct, count q
    int degree_n = 0;
    int genus_g = 0;

    int q() const { return static_cast<int>(critical_values.size()); }
    int m() const { return static_cast<int>(critical_points.size()); }
};

struct FiberPoint {
    SpherePoint point;
    int multiplicity = 1;
};

// Full preimage of a target value; multiplicities sum to the degree.
struct Fiber {
    SpherePoint target;
    std::vector<FiberPoint> points;
};

struct CriticalOptions {
    double root_tol = 1e-12;
    double cluster_factor = 1e-6; // critical-value clustering, times (1+max|value|)
};

// Critical points (including infinity when ramified there), their values
// clustered to q distinct sphere points, and the exact integer RH check.
// Throws DegenerateFunction for degree < 2 and InconsistentRamification when
// the multiplicities do not close the RH identity.
CriticalData critical_data(const RationalFunction& f, const CriticalOptions& opt = {});

// All solutions of f(z) = w with multiplicities summing to deg f.
Fiber fiber(const RationalFunction& f, const SpherePoint& w, const CriticalOptions& opt = {});

// Regular preimages of critical values (the valence-2 vertices of the
// pullback graph).
std::vector<SpherePoint> cocritical_points(const RationalFunction& f, const CriticalData& cd,
                                           const CriticalOptions& opt = {});

// Genus from degree and ramification orders: 2g - 2 = -2n + sum(mu - 1).
// Throws InconsistentRamification when that does not solve to an integer
// g >= 0.
int riemann_hurwitz_genus(int n, const std::vector<int>& mults);

} // namespace rmap

#endif
