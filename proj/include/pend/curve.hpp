/**
 * @file curve.hpp
 * @brief Plane projective curves as reduced divisors: canonical construction,
 *        certified pushforward under an endomorphism (image polynomial with a
 *        divisibility witness and the exact degree of the restriction),
 *        intersections with the line at infinity, and periodicity
 *        certificates by divisibility.
 */
#ifndef PEND_CURVE_HPP
#define PEND_CURVE_HPP

#include <optional>

#include "pend/endo.hpp"
#include "pend/local.hpp"

namespace pend {

class ProjCurve {
  public:
    enum class Form { Affine, Homogeneous };

    /// Homogenize (if affine), replace by the squarefree part, scale
    /// canonically. Constant input is rejected.
    ProjCurve(const MultiPoly& g, Form form, std::string vx = "x", std::string vy = "y",
              std::string vz = "z");

    const MultiPoly& poly() const { return g_; }      // homogeneous canonical
    MultiPoly affine() const { return g_.dehomogenized(vz_).pruned(); }
    int degree() const { return g_.deg(); }
    bool is_infinity_line() const { return infinity_line_; }
    const std::string& vx() const { return vx_; }
    const std::string& vy() const { return vy_; }
    const std::string& vz() const { return vz_; }

    /// Optional exact polynomial parametrization u -> (x(u), y(u)) of the
    /// affine part, used as a fast certified route for pushforwards.
    void set_parametrization(SPoly xu, SPoly yu);
    const std::optional<std::pair<SPoly, SPoly>>& parametrization() const { return param_; }

    bool operator==(const ProjCurve& o) const { return g_ == o.g_; }
    bool operator!=(const ProjCurve& o) const { return !(*this == o); }
    int cmp(const ProjCurve& o) const { return g_.cmp(o.g_); }
    std::string to_string() const { return "V(" + g_.to_string() + ")"; }

  private:
    std::string vx_, vy_, vz_;
    MultiPoly g_;
    bool infinity_line_ = false;
    std::optional<std::pair<SPoly, SPoly>> param_;
};

struct PushforwardCertificate {
    ProjCurve source;
    ProjCurve image;
    MultiPoly cofactor;  // h(P, Q) = cofactor * g on the affine chart
    int delta = 0;       // degree of F restricted to the curve
    bool delta_uniform = true;  // false when components have mixed fiber degrees
    int fiber_attempts = 0;
    std::string note;
};

/// Reduced image curve of C under F with an exact certificate. The image
/// polynomial is found as the minimal-degree h with h(P, Q) == 0 mod g
/// (linear algebra over the coefficient field), cross-checked against the
/// two-order resultant elimination; delta comes from an exact generic-line
/// fiber count and must satisfy delta * deg(image) = deg(F) * deg(C).
PushforwardCertificate pushforward_image(const Endomorphism& F, const ProjCurve& C,
                                         const Budget& budget = {});

struct InfinityPoint {
    bool vertical = false;              // the point [0:1:0]
    Scalar t;                           // chart value y/x at [1:t:0]
    std::optional<RootPacket> packet;   // conjugate packet in the t-chart
    int multiplicity = 0;               // (C . Hinf) at each point of the packet
    std::string to_string() const;
};

/// Points of C on the line at infinity with local intersection multiplicities
/// (they sum to deg C); rational points are cross-checked against the local
/// quotient computation.
std::vector<InfinityPoint> infinity_points(const ProjCurve& C);

/// Cofactor q with g o F^period = q * g when C is invariant under F^period;
/// nullopt otherwise.
std::optional<MultiPoly> invariance_certificate(const Endomorphism& F, const ProjCurve& C,
                                                int period, const Budget& budget = {});

/// FNV-1a digest of a canonical polynomial string, for certificate reports.
uint64_t poly_digest(const MultiPoly& p);

}  // namespace pend

#endif
