// Shared helpers for the unit suites: deterministic random polynomials and an
// independent Sylvester-determinant resultant oracle (fraction-free Bareiss).
#ifndef PEND_TEST_SUPPORT_HPP
#define PEND_TEST_SUPPORT_HPP

#include <random>

#include "pend/algebra.hpp"
#include "pend/poly_text.hpp"

namespace pend::testsup {

inline std::mt19937& rng() {
    static std::mt19937 g(0x5eed1234);
    return g;
}

inline Rat random_rat(int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> d(lo, hi);
    return rat(d(rng()));
}

inline MultiPoly random_poly(const std::vector<std::string>& vars, int maxdeg,
                             double density = 0.6, int lo = -6, int hi = 6) {
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    MultiPoly p(sorted);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    // enumerate exponent vectors of total degree <= maxdeg
    std::vector<Exp> exps;
    Exp e(sorted.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == e.size()) {
            exps.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = static_cast<uint32_t>(k);
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, maxdeg);
    for (const auto& ex : exps) {
        if (coin(rng()) > density) continue;
        p.add_term(ex, Scalar(random_rat(lo, hi)));
    }
    return p;
}

inline MultiPoly random_nonzero_poly(const std::vector<std::string>& vars, int maxdeg) {
    for (int tries = 0; tries < 100; ++tries) {
        MultiPoly p = random_poly(vars, maxdeg);
        if (!p.is_zero()) return p;
    }
    throw error("random_nonzero_poly starved");
}

/// Sylvester matrix determinant by fraction-free Bareiss elimination over the
/// polynomial ring; the reference implementation resultants are tested against.
inline MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g,
                                     const std::string& var) {
    auto [fa, ga] = aligned(f, g);
    auto A = fa.coefficients_in(var);
    auto B = ga.coefficients_in(var);
    int m = static_cast<int>(A.size()) - 1;
    int n = static_cast<int>(B.size()) - 1;
    while (m >= 0 && A[m].is_zero()) --m;
    while (n >= 0 && B[n].is_zero()) --n;
    if (m < 0 || n < 0) throw error("oracle: zero input");
    int N = m + n;
    if (N == 0) return MultiPoly::constant(Scalar(1), fa.vars());
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly(fa.vars())));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = A[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = B[n - j];
    // Bareiss
    MultiPoly prev = MultiPoly::constant(Scalar(1), fa.vars());
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int p = k + 1;
            while (p < N && M[p][k].is_zero()) ++p;
            if (p == N) return MultiPoly(fa.vars());  // singular
            std::swap(M[p], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                MultiPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.is_zero() ? num : divide_exact(num, prev);
            }
        prev = M[k][k];
    }
    MultiPoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

}  // namespace pend::testsup

#endif
