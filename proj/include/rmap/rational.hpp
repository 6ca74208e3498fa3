#ifndef RMAP_RATIONAL_HPP
#define RMAP_RATIONAL_HPP

#include "rmap/polynomial.hpp"
#include "rmap/sphere.hpp"

namespace rmap {

// Rational map of the sphere given by two coprime polynomials.
// degree_n = max(deg num, deg den) >= 2.
//
// The reversed polynomials num_rev, den_rev (z^n p(1/z), zero padded to
// degree n) drive all computations near infinity:
//   f(z)   = num(z)/den(z)            = z^(dn-dd) num_rev(1/z)/den_rev(1/z)
//   f(1/t) = num_rev(t)/den_rev(t)    as a quotient of degree-n polynomials.
class RationalFunction {
  public:
    RationalFunction(Polynomial num, Polynomial den, double coprime_tol = 1e-6);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const Polynomial& num_rev() const { return num_rev_; }
    const Polynomial& den_rev() const { return den_rev_; }
    int degree() const { return n_; }
    // deg num - deg den; the order of the pole (>0) or zero (<0) at infinity.
    int degree_gap() const { return num_.degree() - den_.degree(); }

    // Value at infinity.
    SpherePoint value_at_infinity() const;
    // Local degree of the map at infinity (1 = regular point).
    int local_degree_at_infinity() const;

  private:
    Polynomial num_, den_;
    Polynomial num_rev_, den_rev_;
    int n_;
};

// Value of f at z, routed through the 1/z chart for large |z| and through
// the 1/w chart when the image overflows.  Poles return infinity.
SpherePoint eval(const RationalFunction& f, const SpherePoint& z,
                 double chart_radius = 0.0);

// Derivative of f at a finite point (the usual quotient rule).
Cx derivative_value(const RationalFunction& f, Cx z);

// Numerator of f': num' den - num den'.  Its roots are the finite critical
// points of f.
Polynomial derivative_numerator(const RationalFunction& f);

} // namespace rmap

#endif
