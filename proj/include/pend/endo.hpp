/**
 * @file endo.hpp
 * @brief Regular polynomial endomorphisms of the projective plane:
 *        construction with regularity verification, exact iteration, the
 *        induced degree-d self-map of the line at infinity, and structure
 *        predicates (skew product, homogeneous up to translation, commuting
 *        pairs, semiconjugacy checks).
 */
#ifndef PEND_ENDO_HPP
#define PEND_ENDO_HPP

#include <optional>

#include "pend/algebra.hpp"
#include "pend/ratexpr.hpp"
#include "pend/spoly.hpp"

namespace pend {

/// Rejection carrying a witness of the regularity failure.
struct regularity_error : error {
    explicit regularity_error(const std::string& m) : error(m) {}
};

/// Simple wall-clock/size budget threaded through the expensive operations.
struct Budget {
    long long ms = -1;             // wall clock, -1 = unlimited
    size_t max_weight = 50000000;  // coefficient-size cap for iterates
    mutable long long t0 = -1;
    void start() const;
    void check(const char* where) const;
    bool unlimited() const { return ms < 0; }
};

class Endomorphism {
  public:
    /// Verifies deg >= 2 and that the top forms share no projective root;
    /// rejects with a witness root (when field-rational) otherwise.
    Endomorphism(MultiPoly P, MultiPoly Q, std::string vx = "x", std::string vy = "y");

    const MultiPoly& P() const { return p_; }
    const MultiPoly& Q() const { return q_; }
    const std::string& vx() const { return vx_; }
    const std::string& vy() const { return vy_; }
    const std::string& vz() const { return vz_; }
    int degree() const { return d_; }
    FieldSpec field() const;

    MultiPoly top_p() const { return p_.homogeneous_part(d_); }
    MultiPoly top_q() const { return q_.homogeneous_part(d_); }
    /// Homogenization triple [P~ : Q~ : z^d] in (vx, vy, vz).
    MultiPoly homog_p() const;
    MultiPoly homog_q() const;
    MultiPoly homog_z() const;

    /// Image of an affine point.
    std::pair<Scalar, Scalar> apply(const Scalar& x, const Scalar& y) const;
    /// Exact composition this(other(.)).
    Endomorphism after(const Endomorphism& other, const Budget& budget = {}) const;

    bool operator==(const Endomorphism& o) const { return p_ == o.p_ && q_ == o.q_; }

  private:
    std::string vx_, vy_, vz_;
    MultiPoly p_, q_;
    int d_;
};

/// F^n by exact composition; degree d^n. Budget violations raise budget_error
/// mentioning the partial degree reached.
Endomorphism iterate(const Endomorphism& F, int n, const Budget& budget = {});

/// The restriction f = F|H of F to the line at infinity, as a reduced degree-d
/// rational self-map of P^1 in the chart t = y/x, with the chart-swap
/// companion fb(s) = 1-chart expression at s = x/y.
struct InfinityMap {
    SPoly num, den;    // f(t) = num/den, coprime
    SPoly bnum, bden;  // fb(s) = bnum/bden, coprime
    int degree = 0;
    std::string tname = "t";

    /// f(t0) for an affine chart value; nullopt when t0 is a pole (image is
    /// the point at infinity).
    std::optional<Scalar> apply(const Scalar& t0) const;
    /// true when f(infinity) = infinity.
    bool fixes_infinity() const { return bnum.eval(Scalar(0)).is_zero(); }
    /// n-fold composition, reduced.
    InfinityMap iterate(int n, const Budget& budget = {}) const;
    /// derivative f' as a reduced rational function pair (num, den).
    std::pair<SPoly, SPoly> derivative() const;
};

InfinityMap restrict_infinity(const Endomorphism& F);
InfinityMap make_infinity_map(const SPoly& num, const SPoly& den, const std::string& tname = "t");

enum class Verdict { Yes, No, NotDetectedOverField };

struct SkewReport {
    Verdict verdict = Verdict::No;
    /// Linear form a*x + b*y whose level sets form the invariant vertical
    /// pencil, when found.
    std::optional<MultiPoly> coordinate;
    std::string note;
};

/// Does some affine linear change of coordinates make the first component
/// depend on the first variable only? Complete over the coefficient field and
/// over quadratic extensions of Q; anything deeper reports NotDetected.
SkewReport is_skew_product(const Endomorphism& F);

struct HomogeneousReport {
    bool homogeneous = false;
    std::optional<std::pair<Scalar, Scalar>> translation;  // shift of the origin
};

/// Is F homogeneous of degree d after translating the origin to a fixed point?
/// The candidate centers are the field-rational fixed points (a homogeneous
/// center is unique for d >= 2, hence Galois-stable, hence rational).
HomogeneousReport is_homogeneous(const Endomorphism& F);

bool commutes_with(const Endomorphism& F, const Endomorphism& G, const Budget& budget = {});

/// mu o G = F o mu for mu = (mu1, mu2) a pair of rational expressions in the
/// affine coordinates of G. Cross-multiplied exact identity.
bool check_semiconjugacy(const RatExpr& mu1, const RatExpr& mu2, const Endomorphism& G,
                         const Endomorphism& F);

}  // namespace pend

#endif
