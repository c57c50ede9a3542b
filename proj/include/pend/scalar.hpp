/**
 * @file scalar.hpp
 * @brief Exact coefficient fields: Q, the rational function field Q(t) in one
 *        transcendental, and Q[k]/(m(k)) for squarefree m. A Scalar is a
 *        tagged value in one of these; mixed arithmetic promotes Q into the
 *        other two, and anything else is rejected as an unsupported tower.
 */
#ifndef PEND_SCALAR_HPP
#define PEND_SCALAR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "pend/qpoly.hpp"

namespace pend {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degenerate_input_error : error {
    using error::error;
};
struct field_tower_error : error {
    using error::error;
};
/// Raised when inversion in Q[k]/(m) meets a nontrivial factor of m.
struct zero_divisor_error : error {
    using error::error;
};
struct budget_error : error {
    using error::error;
};
struct precision_error : error {
    using error::error;
};

/// Q[k]/(m): m monic and squarefree over Q. Shared by all elements.
struct NumberField {
    QPoly modulus;  // monic
    std::string gen;
    NumberField(QPoly m, std::string g);
    bool same(const NumberField& o) const { return gen == o.gen && modulus == o.modulus; }
};
using NumberFieldPtr = std::shared_ptr<const NumberField>;

struct NFElem {
    QPoly rep;  // deg < deg modulus
    NumberFieldPtr field;
};

/// Q(t): reduced fraction with monic denominator.
struct RatFunc {
    QPoly num;
    QPoly den;  // monic, coprime to num
    std::string var;
};

enum class FieldKind { Q, RatFn, NumField };

struct FieldSpec {
    FieldKind kind = FieldKind::Q;
    std::string gen;       // "t", "s", "k", ... for the non-Q kinds
    NumberFieldPtr nf;     // set iff kind == NumField
    static FieldSpec rationals() { return {}; }
    static FieldSpec rational_functions(std::string var) {
        return {FieldKind::RatFn, std::move(var), nullptr};
    }
    static FieldSpec number_field(NumberFieldPtr f) {
        return {FieldKind::NumField, f->gen, std::move(f)};
    }
    bool same(const FieldSpec& o) const;
    std::string describe() const;
};

class Scalar {
  public:
    Scalar() : v_(Rat(0)) {}
    Scalar(const Rat& r) : v_(r) {}
    Scalar(long n) : v_(Rat(n)) {}
    explicit Scalar(RatFunc f);
    explicit Scalar(NFElem e);

    static Scalar ratfunc_gen(const std::string& var);  // the element t of Q(t)
    static Scalar nf_gen(const NumberFieldPtr& f);      // the element k of Q[k]/(m)
    static Scalar from_qpoly(const QPoly& p, const FieldSpec& fs);  // p in the generator

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_ratfunc() const { return std::holds_alternative<RatFunc>(v_); }
    bool is_nf() const { return std::holds_alternative<NFElem>(v_); }
    const Rat& rational() const { return std::get<Rat>(v_); }
    const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
    const NFElem& nf() const { return std::get<NFElem>(v_); }

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total syntactic order used for canonical sorting; not a field order.
    int cmp(const Scalar& o) const;

    /// Approximate numeric size in machine words, used by budget checks.
    size_t weight() const;

    std::string to_string() const;

  private:
    struct raw_tag {};
    Scalar(raw_tag, RatFunc f) : v_(std::move(f)) {}
    Scalar(raw_tag, NFElem e) : v_(std::move(e)) {}
    friend std::pair<Scalar, Scalar> promote_pair(const Scalar& a, const Scalar& b);
    std::variant<Rat, RatFunc, NFElem> v_;
};

/// Promote into a common field without collapsing constants; Q promotes into
/// Q(t) and Q[k]/(m), anything else mixed is an unsupported tower.
std::pair<Scalar, Scalar> promote_pair(const Scalar& a, const Scalar& b);

RatFunc make_ratfunc(QPoly num, QPoly den, const std::string& var);
NFElem make_nfelem(QPoly rep, const NumberFieldPtr& field);

/// Substitute a rational value for the transcendental of Q(t); the element
/// must be rational or live in Q(t), and t0 must avoid the denominator.
Rat specialize_scalar(const Scalar& s, const Rat& t0);

/// Square root in Q or in a quadratic number field, when one exists.
std::optional<Scalar> scalar_sqrt(const Scalar& s);

}  // namespace pend

#endif
