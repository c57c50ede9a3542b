/**
 * @file algebra.hpp
 * @brief Elimination-grade polynomial algebra: Sylvester resultants computed
 *        by subresultant pseudo-remainder sequences, multivariate gcd by
 *        primitive PRS, squarefree parts, exact divisibility with cofactor,
 *        and univariate root finding (exact rational or numeric complex).
 */
#ifndef PEND_ALGEBRA_HPP
#define PEND_ALGEBRA_HPP

#include <complex>
#include <optional>

#include "pend/multipoly.hpp"
#include "pend/spoly.hpp"

namespace pend {

/// Res_var(f, g) over the remaining variables. Vanishes iff nonconstant f, g
/// share a root in var over the algebraic closure. Both inputs zero, or both
/// constant-and-zero-degree inputs, are rejected.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Multivariate gcd (primitive PRS), canonically scaled.
MultiPoly gcd_multi(const MultiPoly& a, const MultiPoly& b);

/// Product of the distinct irreducible factors of f, canonically scaled.
MultiPoly squarefree_part(const MultiPoly& f);

/// When f divides g exactly, the cofactor q with g = q*f; otherwise nullopt.
std::optional<MultiPoly> divides(const MultiPoly& f, const MultiPoly& g);

/// g / f, which must be exact.
MultiPoly divide_exact(const MultiPoly& g, const MultiPoly& f);

/// Division with remainder by a single divisor in the graded-lex order:
/// g = q*f + r with no term of r divisible by the leading term of f.
std::pair<MultiPoly, MultiPoly> poly_divrem(const MultiPoly& g, const MultiPoly& f);

/// Exact polynomial composition: substitute sub[v] for each variable v of f.
MultiPoly compose(const MultiPoly& f, const std::map<std::string, MultiPoly>& sub);

struct NumericRoot {
    std::complex<double> value;
    double residual;  // |f(value)| with f scaled monic
    double bound;     // reported error radius estimate
};

/// Exact rational roots (with multiplicity) of a univariate polynomial with
/// rational coefficients.
std::vector<std::pair<Rat, int>> univariate_rational_roots(const MultiPoly& f);

/// All complex roots to double precision (companion matrix + Newton polish).
/// Throws precision_error if the polish fails to reach the tolerance.
std::vector<NumericRoot> univariate_numeric_roots(const MultiPoly& f, double tol = 1e-10);

/// Content/primitive split of f viewed in var: f = content * primitive with
/// content free of var.
std::pair<MultiPoly, MultiPoly> content_primitive_in(const MultiPoly& f, const std::string& var);

}  // namespace pend

#endif
