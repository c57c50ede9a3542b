/// Truncated power series over Scalar in one variable, fixed order.
#ifndef PEND_SERIES_HPP
#define PEND_SERIES_HPP

#include <vector>

#include "pend/multipoly.hpp"
#include "pend/spoly.hpp"

namespace pend {

class Series {
  public:
    Series(int order, Scalar c0 = Scalar(0)) : c_(order + 1, Scalar(0)) { c_[0] = c0; }
    static Series var(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = Scalar(1);
        return s;
    }
    static Series from_coeffs(std::vector<Scalar> c, int order) {
        c.resize(order + 1, Scalar(0));
        Series s(order);
        s.c_ = std::move(c);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& at(int i) { return c_[i]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    /// Lowest index with nonzero coefficient, or order()+1 when all zero.
    int valuation() const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Scalar& s) const;
    bool operator==(const Series& o) const { return c_ == o.c_; }

    /// Multiplicative inverse; requires a unit (nonzero constant term).
    Series inverse() const;
    /// Composition this(g); requires g to have zero constant term.
    Series compose(const Series& g) const;
    Series pow(unsigned n) const;

    bool is_zero() const;

  private:
    std::vector<Scalar> c_;
};

/// Evaluate a bivariate polynomial p(a, b) at series arguments.
Series eval_series(const MultiPoly& p, const std::string& var_a, const Series& a,
                   const std::string& var_b, const Series& b);

}  // namespace pend

#endif
