/// Rational expressions num/den over the multivariate ring, gcd-reduced.
#ifndef PEND_RATEXPR_HPP
#define PEND_RATEXPR_HPP

#include "pend/algebra.hpp"

namespace pend {

struct RatExpr {
    MultiPoly num;
    MultiPoly den;

    static RatExpr of(const MultiPoly& p) {
        return RatExpr{p, MultiPoly::constant(Scalar(1), p.vars())};
    }
    static RatExpr make(const MultiPoly& n, const MultiPoly& d);

    bool is_zero() const { return num.is_zero(); }
    RatExpr operator+(const RatExpr& o) const { return make(num * o.den + o.num * den, den * o.den); }
    RatExpr operator-(const RatExpr& o) const { return make(num * o.den - o.num * den, den * o.den); }
    RatExpr operator*(const RatExpr& o) const { return make(num * o.num, den * o.den); }
    RatExpr inverse() const {
        if (num.is_zero()) throw degenerate_input_error("RatExpr inverse of zero");
        return make(den, num);
    }
    bool operator==(const RatExpr& o) const { return num * o.den == o.num * den; }

    /// p(args...) with rational-expression arguments; exact.
    static RatExpr eval_poly(const MultiPoly& p, const std::map<std::string, RatExpr>& args);
};

}  // namespace pend

#endif
