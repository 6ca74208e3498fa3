#include "rmap/rational.hpp"

#include <cmath>

#include "rmap/errors.hpp"

namespace rmap {

RationalFunction::RationalFunction(Polynomial num, Polynomial den, double coprime_tol)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero() || den_.is_zero())
        throw DegenerateFunction("rational function with zero numerator or denominator");
    n_ = std::max(num_.degree(), den_.degree());
    if (n_ < 2) throw DegenerateFunction("rational function must have degree >= 2");
    num_rev_ = num_.reversed(n_);
    den_rev_ = den_.reversed(n_);

    // Numeric coprimality: no root of one polynomial sits inside the
    // clustering radius of a root of the other.
    if (num_.degree() > 0 && den_.degree() > 0) {
        auto rn = roots(num_);
        auto rd = roots(den_);
        double scale = 1.0;
        for (const auto& r : rn) scale = std::max(scale, std::abs(r.root));
        for (const auto& r : rd) scale = std::max(scale, std::abs(r.root));
        const double radius = coprime_tol * (1.0 + scale);
        for (const auto& a : rn)
            for (const auto& b : rd)
                if (std::abs(a.root - b.root) < radius)
                    throw DegenerateFunction("numerator and denominator share a root");
    }
}

SpherePoint RationalFunction::value_at_infinity() const {
    const int gap = degree_gap();
    if (gap > 0) return SpherePoint::infinity();
    if (gap < 0) return SpherePoint(Cx(0.0));
    return SpherePoint(num_.lead() / den_.lead());
}

int RationalFunction::local_degree_at_infinity() const {
    const int gap = degree_gap();
    if (gap != 0) return std::abs(gap);
    // Equal degrees: expand f(1/t) - f(inf) = (num_rev - c den_rev)/den_rev
    // around t = 0 and count the leading zero coefficients.
    const Cx c = num_.lead() / den_.lead();
    Polynomial diff = num_rev_ - den_rev_ * c;
    if (diff.is_zero()) throw DegenerateFunction("constant rational function");
    const double scale = diff.coeff_scale();
    int ord = 0;
    for (const Cx& co : diff.coeffs()) {
        if (std::abs(co) > 1e-9 * scale) break;
        ++ord;
    }
    return std::max(ord, 1);
}

SpherePoint eval(const RationalFunction& f, const SpherePoint& z, double chart_radius) {
    if (chart_radius <= 0.0) chart_radius = 2.0 * (1.0 + (z.infinite ? 0.0 : std::abs(z.value)));

    if (z.infinite) return f.value_at_infinity();

    Cx nv, dv;
    if (std::abs(z.value) <= chart_radius || z.value == Cx(0.0)) {
        nv = f.num()(z.value);
        dv = f.den()(z.value);
        if (std::abs(dv) == 0.0) {
            if (std::abs(nv) == 0.0) throw DegenerateFunction("0/0 while evaluating");
            return SpherePoint::infinity();
        }
        // f = z^gap * (num_rev/den_rev)(1/z) is not needed here: both Horner
        // evaluations are finite in this chart.
        Cx w = nv / dv;
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
        return SpherePoint(w);
    }

    // Large |z|: evaluate in the 1/z chart.
    const Cx t = Cx(1.0) / z.value;
    nv = f.num_rev()(t);
    dv = f.den_rev()(t);
    if (std::abs(dv) == 0.0) {
        if (std::abs(nv) == 0.0) throw DegenerateFunction("0/0 while evaluating");
        return SpherePoint::infinity();
    }
    Cx w = nv / dv;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
    return SpherePoint(w);
}

Cx derivative_value(const RationalFunction& f, Cx z) {
    const Cx n = f.num()(z), d = f.den()(z);
    const Cx dn = f.num().derivative()(z), dd = f.den().derivative()(z);
    return (dn * d - n * dd) / (d * d);
}

Polynomial derivative_numerator(const RationalFunction& f) {
    return f.num().derivative() * f.den() - f.num() * f.den().derivative();
}

} // namespace rmap
