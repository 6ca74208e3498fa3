#include "rmap/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rmap/errors.hpp"

namespace rmap {

Polynomial::Polynomial(std::vector<Cx> coeffs, double trim_rel) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Cx(0.0));
    double scale = 0.0;
    for (const Cx& c : coeffs_) scale = std::max(scale, std::abs(c));
    const double cut = scale * trim_rel;
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs) {
    std::vector<Cx> c(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<Cx>& roots, Cx lead) {
    std::vector<Cx> c{lead};
    for (Cx r : roots) {
        std::vector<Cx> nc(c.size() + 1, Cx(0.0));
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= r * c[i];
        }
        c = std::move(nc);
    }
    return Polynomial(std::move(c), 0.0);
}

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Cx(0.0);
}

double Polynomial::coeff_scale() const {
    double s = 0.0;
    for (const Cx& c : coeffs_) s = std::max(s, std::abs(c));
    return s;
}

Cx Polynomial::operator()(Cx z) const {
    Cx acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<Cx> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * double(i);
    return Polynomial(std::move(d), 0.0);
}

Polynomial Polynomial::reversed(int n) const {
    std::vector<Cx> padded(coeffs_);
    padded.resize(static_cast<size_t>(n) + 1, Cx(0.0));
    std::reverse(padded.begin(), padded.end());
    return Polynomial(std::move(padded));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Cx> c(std::max(coeffs_.size(), o.coeffs_.size()), Cx(0.0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Cx> c(std::max(coeffs_.size(), o.coeffs_.size()), Cx(0.0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Cx> c(coeffs_.size() + o.coeffs_.size() - 1, Cx(0.0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Cx s) const {
    std::vector<Cx> c(coeffs_);
    for (Cx& v : c) v *= s;
    return Polynomial(std::move(c));
}

namespace {

// Evaluate p and p' at z in one pass.
std::pair<Cx, Cx> eval_with_derivative(const std::vector<Cx>& c, Cx z) {
    Cx p(0.0), dp(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

// Scale used for residual acceptance: |p| at z measured against the
// coefficient magnitudes evaluated at |z|.
double residual_scale(const std::vector<Cx>& c, Cx z) {
    double az = std::abs(z), pw = 1.0, s = 0.0;
    for (const Cx& co : c) {
        s += std::abs(co) * pw;
        pw *= az;
    }
    return std::max(s, 1e-300);
}

// Multiplicity estimate from p*p'' / p'^2 evaluated a small distance away
// from a suspected multiple root.  Exact for z^m; stable at offset h because
// the ratio tends to (m-1)/m as z approaches the root.
int estimate_multiplicity(const Polynomial& p, const Polynomial& dp, const Polynomial& ddp,
                          Cx center, double h) {
    Cx z = center + Cx(h, 0.37 * h);
    Cx a = p(z), b = dp(z), c = ddp(z);
    if (std::abs(b) == 0.0) return 1;
    Cx ratio = a * c / (b * b);
    double denom = 1.0 - ratio.real();
    if (denom <= 0.0) return 1;
    double m = 1.0 / denom;
    if (m < 1.5) return 1;
    return static_cast<int>(std::lround(m));
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Cx> aberth(const std::vector<Cx>& c, const RootOptions& opt) {
    const int d = static_cast<int>(c.size()) - 1;
    const Cx lead = c.back();

    // Cauchy-style initial radius.
    double radius = 0.0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i] / lead));
    radius = 1.0 + radius;

    std::vector<Cx> z(d);
    for (int i = 0; i < d; ++i) {
        double theta = 2.0 * std::numbers::pi * i / d + 0.4;
        double r = radius * (0.5 + 0.5 * (i + 1.0) / d);
        z[i] = std::polar(r, theta);
    }

    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            auto [p, dp] = eval_with_derivative(c, z[i]);
            double res = std::abs(p) / residual_scale(c, z[i]);
            worst = std::max(worst, res);
            if (res == 0.0) continue;
            Cx newton = (dp != Cx(0.0)) ? p / dp : Cx(opt.tol);
            Cx sum(0.0);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Cx diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = Cx(1e-300);
                sum += Cx(1.0) / diff;
            }
            Cx denom = Cx(1.0) - newton * sum;
            Cx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            z[i] -= step;
        }
        if (worst <= opt.tol) return z;
    }
    // Accept whatever converged if residuals are merely loose; the caller's
    // residual check below is authoritative.
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        worst = std::max(worst, std::abs(Polynomial(c, 0.0)(z[i])) / residual_scale(c, z[i]));
    if (worst > 1e-6) throw NonConvergence("root iteration did not converge");
    return z;
}

} // namespace

std::vector<RootCluster> roots(const Polynomial& p, double tol) {
    RootOptions opt;
    opt.tol = tol;
    return roots(p, opt);
}

std::vector<RootCluster> roots(const Polynomial& p, const RootOptions& opt) {
    if (p.is_zero()) throw DegenerateFunction("roots of the zero polynomial");
    std::vector<Cx> c = p.coeffs();

    // Exact zero leading coefficients give exact roots at the origin.
    int zeros_at_origin = 0;
    while (c.size() > 1 && c.front() == Cx(0.0)) {
        c.erase(c.begin());
        ++zeros_at_origin;
    }

    std::vector<RootCluster> out;
    if (zeros_at_origin > 0) out.push_back({Cx(0.0), zeros_at_origin});
    const int d = static_cast<int>(c.size()) - 1;
    if (d == 0) return out;

    std::vector<Cx> z = aberth(c, opt);

    Polynomial q(c, 0.0);
    Polynomial dq = q.derivative();
    Polynomial ddq = dq.derivative();

    // Newton polish (helps simple roots; multiple roots are handled below).
    for (Cx& zi : z) {
        for (int k = 0; k < 16; ++k) {
            auto [pv, dpv] = eval_with_derivative(c, zi);
            if (std::abs(dpv) == 0.0) break;
            Cx step = pv / dpv;
            if (std::abs(step) < 1e-18 * (1.0 + std::abs(zi))) break;
            zi -= step;
        }
    }

    double maxmod = 0.0;
    for (Cx zi : z) maxmod = std::max(maxmod, std::abs(zi));
    const double rc = opt.cluster_radius * (1.0 + maxmod);
    const double rd = std::max(opt.detect_radius * (1.0 + maxmod), rc);

    DisjointSet ds(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (std::abs(z[i] - z[j]) <= rd) ds.unite(i, j);

    std::vector<std::vector<int>> groups(d);
    for (int i = 0; i < d; ++i) groups[ds.find(i)].push_back(i);

    for (const auto& g : groups) {
        if (g.empty()) continue;
        Cx center(0.0);
        for (int i : g) center += z[i];
        center /= double(g.size());

        const int m0 = static_cast<int>(g.size());
        bool merged = false;
        if (m0 >= 2) {
            double spread = 0.0;
            for (int i : g) spread = std::max(spread, std::abs(z[i] - center));
            bool tight = spread <= rc;
            int est = estimate_multiplicity(q, dq, ddq, center, 8.0 * rd);
            if (tight || est == m0) {
                // Refine: an m-fold root of q is a simple root of q^(m-1).
                Polynomial h = q;
                for (int k = 0; k < m0 - 1; ++k) h = h.derivative();
                Polynomial dh = h.derivative();
                Cx x = center;
                for (int k = 0; k < 60; ++k) {
                    Cx hv = h(x), dhv = dh(x);
                    if (std::abs(dhv) == 0.0) break;
                    Cx step = hv / dhv;
                    x -= step;
                    if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
                }
                // Residual validation on q, q', ..., q^(m-1): genuine
                // m-fold roots sit far below this threshold, while merging
                // two separate roots a detect-radius apart fails it.
                bool ok = true;
                Polynomial deriv = q;
                for (int k = 0; k < m0 && ok; ++k) {
                    double scale = residual_scale(deriv.coeffs(), x);
                    if (std::abs(deriv(x)) > 1e-8 * scale) ok = false;
                    deriv = deriv.derivative();
                }
                if (ok) {
                    out.push_back({x, m0});
                    merged = true;
                }
            }
        }
        if (!merged) {
            for (int i : g) out.push_back({z[i], 1});
        }
    }

    // Final residual acceptance for simple roots.
    for (const RootCluster& rcl : out) {
        if (rcl.multiplicity == 1) {
            double scale = residual_scale(p.coeffs(), rcl.root);
            if (std::abs(p(rcl.root)) > 1e5 * opt.tol * scale)
                throw NonConvergence("root residual too large after polish");
        }
    }

    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
    return out;
}

} // namespace rmap
