#ifndef RMAP_POLYNOMIAL_HPP
#define RMAP_POLYNOMIAL_HPP

#include <initializer_list>
#include <vector>

#include "rmap/sphere.hpp"

namespace rmap {

// Complex polynomial with coefficients stored in ascending degree order.
// Trailing coefficients that are negligible relative to the largest one are
// trimmed on construction, so degree() is the index of the last significant
// coefficient.  The zero polynomial has the single coefficient 0.
class Polynomial {
  public:
    Polynomial() : coeffs_{Cx(0.0)} {}
    explicit Polynomial(std::vector<Cx> coeffs, double trim_rel = 1e-12);
    Polynomial(std::initializer_list<Cx> coeffs)
        : Polynomial(std::vector<Cx>(coeffs)) {}

    static Polynomial from_real(const std::vector<double>& coeffs);
    // (z - r1)(z - r2)...(z - rk), optionally scaled.
    static Polynomial from_roots(const std::vector<Cx>& roots, Cx lead = Cx(1.0));

    const std::vector<Cx>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    Cx lead() const { return coeffs_.back(); }
    double coeff_scale() const; // max |coefficient|

    Cx operator()(Cx z) const; // Horner
    Cx at(Cx z) const { return (*this)(z); }

    Polynomial derivative() const;
    // z^n * p(1/z) for n >= degree(): reversed, zero-padded coefficients.
    Polynomial reversed(int n) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Cx s) const;

  private:
    std::vector<Cx> coeffs_;
};

struct RootCluster {
    Cx root;
    int multiplicity = 1;
};

struct RootOptions {
    double tol = 1e-12;            // residual target, relative to coeff scale
    double cluster_radius = 1e-6;  // multiplicity quantization, times (1+max|root|)
    double detect_radius = 1e-4;   // candidate grouping radius, times (1+max|root|)
    int max_iterations = 400;
};

// All roots of p with multiplicities summing to deg p.
// Aberth-Ehrlich simultaneous iteration, Newton polish, then multiplicity
// quantization: candidate clusters are merged only when a multiplicity
// estimate agrees with the cluster size and a refined m-fold root passes a
// residual check on p, p', ..., p^(m-1).
// Throws NonConvergence if the iteration budget is exhausted.
std::vector<RootCluster> roots(const Polynomial& p, const RootOptions& opt = {});
std::vector<RootCluster> roots(const Polynomial& p, double tol);

} // namespace rmap

#endif
