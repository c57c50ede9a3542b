// Numeric complex roots of univariate rational polynomials: companion-matrix
// eigenvalues refined by Newton steps, with residual-based error bounds.
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>

#include "pend/algebra.hpp"

namespace pend {

std::vector<NumericRoot> univariate_numeric_roots(const MultiPoly& f, double tol) {
    MultiPoly p = f.pruned();
    if (p.is_zero()) throw degenerate_input_error("numeric roots of zero polynomial");
    if (p.vars().size() > 1) throw error("numeric roots: polynomial is not univariate");
    std::string var = p.vars().empty() ? "t" : p.vars()[0];
    SPoly sp = SPoly::from_multipoly(p.vars().empty() ? p.with_vars({var}) : p, var);
    int n = sp.deg();
    std::vector<NumericRoot> out;
    if (n <= 0) return out;

    std::vector<double> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (!sp[i].is_rational())
            throw field_tower_error("numeric roots need rational coefficients");
        c[i] = sp[i].rational().get_d();
    }
    // monic normalization
    for (int i = 0; i <= n; ++i) c[i] /= c[n];

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);

    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * z + c[i];
        return v;
    };
    auto evald = [&](std::complex<double> z) {
        std::complex<double> v = 0;
        for (int i = n; i >= 1; --i) v = v * z + c[i] * static_cast<double>(i);
        return v;
    };

    for (int k = 0; k < n; ++k) {
        std::complex<double> z(es.eigenvalues()(k).real(), es.eigenvalues()(k).imag());
        for (int it = 0; it < 50; ++it) {
            std::complex<double> fv = eval(z), dv = evald(z);
            if (std::abs(fv) < 1e-300) break;
            if (std::abs(dv) < 1e-300) break;  // multiple root: keep eigenvalue
            std::complex<double> step = fv / dv;
            z -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
        }
        double res = std::abs(eval(z));
        double dv = std::abs(evald(z));
        double bound = dv > 1e-300 ? static_cast<double>(n) * res / dv : 1.0;
        out.push_back(NumericRoot{z, res, std::max(bound, res)});
    }
    std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    // The residual check tolerates multiple roots, where double precision
    // cannot push |f| to zero: scale by the local derivative magnitude.
    for (const auto& r : out) {
        if (r.residual > tol && r.bound > std::sqrt(tol))
            throw precision_error("numeric root refinement did not reach tolerance (residual " +
                                  std::to_string(r.residual) + ")");
    }
    return out;
}

}  // namespace pend
