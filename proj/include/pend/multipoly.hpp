/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over Scalar with a canonical form:
 *        variables kept sorted by name, terms ordered graded-lexicographically,
 *        no zero coefficients stored. Equality of canonical forms is syntactic.
 */
#ifndef PEND_MULTIPOLY_HPP
#define PEND_MULTIPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pend/scalar.hpp"

namespace pend {

using Exp = std::vector<uint32_t>;

inline uint32_t exp_total(const Exp& e) {
    uint32_t t = 0;
    for (auto x : e) t += x;
    return t;
}

/// Graded-lex, largest first: higher total degree wins, then lexicographic on
/// exponents with the alphabetically first variable most significant.
struct GrlexGreater {
    bool operator()(const Exp& a, const Exp& b) const {
        uint32_t ta = exp_total(a), tb = exp_total(b);
        if (ta != tb) return ta > tb;
        return a > b;
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Exp, Scalar, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) { check_vars(); }

    static MultiPoly constant(const Scalar& c, std::vector<std::string> vars = {});
    static MultiPoly variable(const std::string& name, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(const std::string& name) const;  // -1 when absent
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // requires is_constant()

    int deg() const { return terms_.empty() ? -1 : static_cast<int>(exp_total(terms_.begin()->first)); }
    int deg_in(const std::string& var) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& s) const;
    MultiPoly pow(unsigned n) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(const std::string& var) const;

    /// Substitute polynomials for variables (all simultaneously). Variables
    /// without an entry are kept as themselves.
    MultiPoly substituted(const std::map<std::string, MultiPoly>& sub) const;
    /// Substitute scalars for a subset of variables.
    MultiPoly eval_partial(const std::map<std::string, Scalar>& vals) const;
    Scalar eval(const std::map<std::string, Scalar>& vals) const;

    MultiPoly homogeneous_part(int d) const;
    MultiPoly top_form() const { return homogeneous_part(deg()); }
    bool is_homogeneous() const;
    MultiPoly homogenized(const std::string& zvar) const;
    MultiPoly dehomogenized(const std::string& zvar) const;  // substitute 1

    /// Coefficients as polynomials in the remaining variables: result[i] is the
    /// coefficient of var^i (with var's exponent zeroed, variable set kept).
    std::vector<MultiPoly> coefficients_in(const std::string& var) const;
    static MultiPoly from_coefficients(const std::vector<MultiPoly>& c, const std::string& var);

    /// Canonical representative of the scale class: over Q, primitive integer
    /// coefficients with positive leading term; over Q(t) and number fields,
    /// monic leading term.
    MultiPoly canonical_scale() const;

    /// Extend to a superset of variables (sorted union is formed internally).
    MultiPoly with_vars(const std::vector<std::string>& more) const;
    /// Drop variables that do not occur. Canonical form for comparisons.
    MultiPoly pruned() const;

    FieldSpec field() const;
    size_t weight() const;
    int cmp(const MultiPoly& o) const;  // total syntactic order
    std::string to_string() const;

    void add_term(const Exp& e, const Scalar& c);  // accumulate, drops zeros

  private:
    void check_vars() const;
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Scalar& s, const MultiPoly& p) { return p * s; }

/// Align two polynomials to a common (sorted-union) variable list.
std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b);

}  // namespace pend

#endif
