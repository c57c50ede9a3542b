/**
 * @file spoly.hpp
 * @brief Dense univariate polynomials over Scalar, squarefree (Yun)
 *        decomposition, and root finding that returns exact roots in the
 *        coefficient field together with conjugate packets for the rest.
 */
#ifndef PEND_SPOLY_HPP
#define PEND_SPOLY_HPP

#include <optional>
#include <vector>

#include "pend/multipoly.hpp"

namespace pend {

class SPoly {
  public:
    SPoly() = default;
    explicit SPoly(const Scalar& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit SPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
    static SPoly var() { return SPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Scalar& operator[](int i) const {
        static const Scalar z;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : z;
    }
    const Scalar& lc() const { return c_.back(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    SPoly operator-() const;
    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const;
    SPoly operator*(const SPoly& o) const;
    SPoly operator*(const Scalar& s) const;
    bool operator==(const SPoly& o) const;
    bool operator!=(const SPoly& o) const { return !(*this == o); }

    std::pair<SPoly, SPoly> divrem(const SPoly& d) const;
    std::optional<SPoly> divide_exact(const SPoly& d) const;
    SPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    SPoly monic() const;
    SPoly pow(unsigned n) const;

    MultiPoly to_multipoly(const std::string& var) const;
    static SPoly from_multipoly(const MultiPoly& p, const std::string& var);

    std::string to_string(const std::string& var) const { return to_multipoly(var).to_string(); }
    int cmp(const SPoly& o) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

SPoly gcd(const SPoly& a, const SPoly& b);  // monic

/// Yun decomposition: f ~ prod of part^mult with the parts squarefree and
/// pairwise coprime (unit factor dropped).
std::vector<std::pair<SPoly, int>> squarefree_decomposition(const SPoly& f);

/// Conjugate packet: the roots of `minpoly` (monic, squarefree, without roots
/// in the coefficient field), each counted with multiplicity `mult`.
/// `complete` is false when the field-root search was only partial (packets of
/// degree > 2 over Q(t) or a number field may still contain field elements).
struct RootPacket {
    SPoly minpoly;
    int mult = 1;
    bool complete = true;
};

struct FieldRoots {
    std::vector<std::pair<Scalar, int>> exact;  // roots in the coefficient field
    std::vector<RootPacket> packets;
};

/// All roots of f in its coefficient field plus conjugate packets for the
/// rest. Complete over Q for any degree; over Q(t) and quadratic number
/// fields complete through degree 2 factors (higher ones flagged).
FieldRoots roots_over_field(const SPoly& f);

/// Roots of a squarefree polynomial inside the coefficient field only.
/// Returns nullopt when the search is not decisive for this field/degree.
std::optional<std::vector<Scalar>> field_roots_of_squarefree(const SPoly& f);

}  // namespace pend

#endif
