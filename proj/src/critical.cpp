#include "rmap/critical.hpp"

#include <algorithm>
#include <cmath>

#include "rmap/errors.hpp"

namespace rmap {

int riemann_hurwitz_genus(int n, const std::vector<int>& mults) {
    int branching = 0;
    for (int mu : mults) {
        if (mu < 2) throw InconsistentRamification("ramification order below 2");
        branching += mu - 1;
    }
    const int chi_defect = branching - 2 * n + 2; // equals 2g
    if (chi_defect < 0 || chi_defect % 2 != 0)
        throw InconsistentRamification("sum(mu-1) - 2n + 2 is negative or odd");
    return chi_defect / 2;
}

Fiber fiber(const RationalFunction& f, const SpherePoint& w, const CriticalOptions& opt) {
    Fiber out;
    out.target = w;
    const int n = f.degree();
    RootOptions ropt;
    ropt.tol = opt.root_tol;

    if (w.infinite) {
        if (f.den().degree() > 0) {
            for (const auto& r : roots(f.den(), ropt)) out.points.push_back({SpherePoint(r.root), r.multiplicity});
        }
        const int gap = f.degree_gap();
        if (gap > 0) out.points.push_back({SpherePoint::infinity(), gap});
    } else if (std::abs(w.value) > 1e8) {
        // Near-infinite target: solve in the 1/w chart for stability.
        const Cx u = Cx(1.0) / w.value;
        Polynomial p = f.num() * u - f.den();
        for (const auto& r : roots(p, ropt)) out.points.push_back({SpherePoint(r.root), r.multiplicity});
        const int drop = n - p.degree();
        if (drop > 0) out.points.push_back({SpherePoint::infinity(), drop});
    } else {
        Polynomial p = f.num() - f.den() * w.value;
        if (p.is_zero()) throw DegenerateFunction("fiber of a constant value");
        if (p.degree() > 0) {
            for (const auto& r : roots(p, ropt)) out.points.push_back({SpherePoint(r.root), r.multiplicity});
        }
        const int drop = n - p.degree();
        if (drop > 0) out.points.push_back({SpherePoint::infinity(), drop});
    }

    int total = 0;
    for (const auto& fp : out.points) total += fp.multiplicity;
    if (total != n) throw InconsistentRamification("fiber multiplicities do not sum to the degree");
    return out;
}

CriticalData critical_data(const RationalFunction& f, const CriticalOptions& opt) {
    CriticalData cd;
    cd.degree_n = f.degree();
    cd.genus_g = 0;

    Polynomial dnum = derivative_numerator(f);
    RootOptions ropt;
    ropt.tol = opt.root_tol;

    if (!dnum.is_zero() && dnum.degree() > 0) {
        for (const auto& r : roots(dnum, ropt))
            cd.critical_points.push_back({SpherePoint(r.root), r.multiplicity + 1, -1});
    }

    const int mu_inf = f.local_degree_at_infinity();
    if (mu_inf >= 2) cd.critical_points.push_back({SpherePoint::infinity(), mu_inf, -1});

    // Riemann-Hurwitz identity, exactly.
    std::vector<int> mults;
    for (const auto& cp : cd.critical_points) mults.push_back(cp.ramification);
    const int g = riemann_hurwitz_genus(cd.degree_n, mults);
    if (g != 0)
        throw InconsistentRamification("sphere-domain function with nonzero computed genus");

    // Images, clustered to distinct critical values.  Infinity is always its
    // own cluster.
    std::vector<Cx> finite_values;
    bool has_inf_value = false;
    std::vector<SpherePoint> images;
    for (const auto& cp : cd.critical_points) {
        SpherePoint w = eval(f, cp.point);
        images.push_back(w);
        if (w.infinite)
            has_inf_value = true;
        else
            finite_values.push_back(w.value);
    }
    double scale = 0.0;
    for (Cx v : finite_values) scale = std::max(scale, std::abs(v));
    const double radius = opt.cluster_factor * (1.0 + scale);

    std::vector<Cx> reps;
    for (Cx v : finite_values) {
        bool found = false;
        for (Cx& r : reps)
            if (std::abs(v - r) <= radius) {
                found = true;
                break;
            }
        if (!found) reps.push_back(v);
    }
    std::sort(reps.begin(), reps.end(), [](Cx a, Cx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (Cx r : reps) cd.critical_values.push_back(SpherePoint(r));
    if (has_inf_value) cd.critical_values.push_back(SpherePoint::infinity());

    for (size_t i = 0; i < cd.critical_points.size(); ++i) {
        const SpherePoint& w = images[i];
        int idx = -1;
        if (w.infinite) {
            idx = static_cast<int>(cd.critical_values.size()) - 1;
        } else {
            for (size_t j = 0; j < reps.size(); ++j)
                if (std::abs(w.value - reps[j]) <= radius) {
                    idx = static_cast<int>(j);
                    break;
                }
        }
        if (idx < 0) throw InconsistentRamification("critical value failed to cluster");
        cd.critical_points[i].value_index = idx;
    }
    return cd;
}

std::vector<SpherePoint> cocritical_points(const RationalFunction& f, const CriticalData& cd,
                                           const CriticalOptions& opt) {
    std::vector<SpherePoint> out;
    for (const auto& w : cd.critical_values) {
        Fiber fb = fiber(f, w, opt);
        for (const auto& fp : fb.points)
            if (fp.multiplicity == 1) out.push_back(fp.point);
    }
    return out;
}

} // namespace rmap
