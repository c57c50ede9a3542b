/**
 * @file qpoly.hpp
 * @brief Dense univariate polynomials over Q (GMP rationals): arithmetic,
 *        gcd, squarefree decomposition, Sturm sequences and complete exact
 *        rational root finding.
 */
#ifndef PEND_QPOLY_HPP
#define PEND_QPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pend {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// Dense univariate polynomial over Q. Coefficient i belongs to t^i; the
/// top coefficient is always nonzero (zero polynomial has empty storage).
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly var() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static QPoly monomial(const Rat& a, int k) {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = a;
        return QPoly(std::move(v));
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& operator[](int i) const {
        static const Rat z(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : z;
    }
    const Rat& lc() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    /// Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<QPoly> divide_exact(const QPoly& d) const;

    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    QPoly compose(const QPoly& g) const;
    QPoly pow(unsigned n) const;

    /// Monic multiple (unit-normalized); zero stays zero.
    QPoly monic() const;
    /// Integer-primitive multiple with positive leading coefficient.
    QPoly primitive() const;

    std::string to_string(const std::string& name = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b);  // monic
QPoly squarefree_part(const QPoly& f);      // monic product of distinct factors

/// Exact rational roots with multiplicities, complete (Sturm isolation on the
/// associated monic integer polynomial). Constant input yields no roots.
std::vector<std::pair<Rat, int>> rational_roots(const QPoly& f);

/// Number of distinct real roots in (a, b] by Sturm counting; f nonzero.
int sturm_root_count(const QPoly& f, const Rat& a, const Rat& b);

}  // namespace pend

#endif
