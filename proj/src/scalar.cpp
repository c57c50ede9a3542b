#include "pend/scalar.hpp"

#include <sstream>
#include <tuple>

namespace pend {

NumberField::NumberField(QPoly m, std::string g) : modulus(m.monic()), gen(std::move(g)) {
    if (modulus.deg() < 1) throw degenerate_input_error("number field modulus must be nonconstant");
    if (!gcd(modulus, modulus.derivative()).is_constant())
        throw degenerate_input_error("number field modulus must be squarefree");
}

bool FieldSpec::same(const FieldSpec& o) const {
    if (kind != o.kind) return false;
    if (kind == FieldKind::Q) return true;
    if (gen != o.gen) return false;
    if (kind == FieldKind::NumField) return nf->modulus == o.nf->modulus;
    return true;
}

std::string FieldSpec::describe() const {
    switch (kind) {
        case FieldKind::Q:
            return "Q";
        case FieldKind::RatFn:
            return "Q(" + gen + ")";
        case FieldKind::NumField:
            return "Q[" + gen + "]/(" + nf->modulus.to_string(gen) + ")";
    }
    return "?";
}

RatFunc make_ratfunc(QPoly num, QPoly den, const std::string& var) {
    if (den.is_zero()) throw degenerate_input_error("rational function with zero denominator");
    QPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
    }
    Rat l = den.lc();
    num = num * (Rat(1) / l);
    den = den * (Rat(1) / l);
    return RatFunc{std::move(num), std::move(den), var};
}

NFElem make_nfelem(QPoly rep, const NumberFieldPtr& field) {
    QPoly r = rep.divrem(field->modulus).second;
    return NFElem{std::move(r), field};
}

Scalar::Scalar(RatFunc f) : v_(std::move(f)) {
    // collapse constants back to Q
    const RatFunc& rf = std::get<RatFunc>(v_);
    if (rf.num.is_constant() && rf.den.is_constant()) {
        Rat c = rf.num.is_zero() ? Rat(0) : rf.num[0] / rf.den[0];
        v_ = c;
    }
}

Scalar::Scalar(NFElem e) : v_(std::move(e)) {
    const NFElem& n = std::get<NFElem>(v_);
    if (n.rep.is_constant()) v_ = n.rep.is_zero() ? Rat(0) : n.rep[0];
}

Scalar Scalar::ratfunc_gen(const std::string& var) {
    return Scalar(RatFunc{QPoly::var(), QPoly(Rat(1)), var});
}

Scalar Scalar::nf_gen(const NumberFieldPtr& f) { return Scalar(make_nfelem(QPoly::var(), f)); }

Scalar Scalar::from_qpoly(const QPoly& p, const FieldSpec& fs) {
    switch (fs.kind) {
        case FieldKind::Q:
            if (!p.is_constant()) throw field_tower_error("nonconstant value in field Q");
            return Scalar(p.is_zero() ? Rat(0) : p[0]);
        case FieldKind::RatFn:
            return Scalar(RatFunc{p, QPoly(Rat(1)), fs.gen});
        case FieldKind::NumField:
            return Scalar(make_nfelem(p, fs.nf));
    }
    throw error("bad field spec");
}

FieldSpec Scalar::field() const {
    if (is_rational()) return FieldSpec::rationals();
    if (is_ratfunc()) return FieldSpec::rational_functions(ratfunc().var);
    return FieldSpec::number_field(nf().field);
}

bool Scalar::is_zero() const {
    if (is_rational()) return rational() == 0;
    if (is_ratfunc()) return ratfunc().num.is_zero();
    return nf().rep.is_zero();
}

bool Scalar::is_one() const {
    if (is_rational()) return rational() == 1;
    if (is_ratfunc()) return ratfunc().num == ratfunc().den;
    return nf().rep == QPoly(Rat(1));
}

std::pair<Scalar, Scalar> promote_pair(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && !b.is_rational()) {
        if (b.is_ratfunc())
            return {Scalar(Scalar::raw_tag{},
                           RatFunc{QPoly(a.rational()), QPoly(Rat(1)), b.ratfunc().var}),
                    b};
        return {Scalar(Scalar::raw_tag{}, NFElem{QPoly(a.rational()), b.nf().field}), b};
    }
    if (!a.is_rational() && b.is_rational()) {
        auto [pb, pa] = promote_pair(b, a);
        return {pa, pb};
    }
    if (a.is_ratfunc() && b.is_ratfunc()) {
        if (a.ratfunc().var != b.ratfunc().var)
            throw field_tower_error("mixed transcendentals " + a.ratfunc().var + ", " +
                                    b.ratfunc().var);
        return {a, b};
    }
    if (a.is_nf() && b.is_nf()) {
        if (!a.nf().field->same(*b.nf().field))
            throw field_tower_error("mixed number fields");
        return {a, b};
    }
    if (a.is_rational() && b.is_rational()) return {a, b};
    throw field_tower_error("unsupported coefficient tower (Q(t) mixed with a number field)");
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rat(-rational()));
    if (is_ratfunc()) {
        RatFunc f = ratfunc();
        f.num = -f.num;
        return Scalar(std::move(f));
    }
    NFElem e = nf();
    e.rep = -e.rep;
    return Scalar(std::move(e));
}

Scalar Scalar::operator+(const Scalar& o) const {
    auto [a, b] = promote_pair(*this, o);
    if (a.is_rational()) return Scalar(Rat(a.rational() + b.rational()));
    if (a.is_ratfunc()) {
        const RatFunc &x = a.ratfunc(), &y = b.ratfunc();
        return Scalar(make_ratfunc(x.num * y.den + y.num * x.den, x.den * y.den, x.var));
    }
    return Scalar(NFElem{a.nf().rep + b.nf().rep, a.nf().field});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    auto [a, b] = promote_pair(*this, o);
    if (a.is_rational()) return Scalar(Rat(a.rational() * b.rational()));
    if (a.is_ratfunc()) {
        const RatFunc &x = a.ratfunc(), &y = b.ratfunc();
        return Scalar(make_ratfunc(x.num * y.num, x.den * y.den, x.var));
    }
    return Scalar(make_nfelem(a.nf().rep * b.nf().rep, a.nf().field));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw degenerate_input_error("inverse of zero");
    if (is_rational()) return Scalar(Rat(1 / rational()));
    if (is_ratfunc()) {
        const RatFunc& f = ratfunc();
        return Scalar(make_ratfunc(f.den, f.num, f.var));
    }
    // extended euclid rep * u + modulus * v = g
    const NFElem& e = nf();
    QPoly r0 = e.field->modulus, r1 = e.rep;
    QPoly s0(Rat(0)), s1(Rat(1));  // coefficients of e.rep
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (!r0.is_constant())
        throw zero_divisor_error("zero divisor in " + field().describe() +
                                 ": shares factor " + r0.monic().to_string(e.field->gen));
    return Scalar(make_nfelem(s0 * (Rat(1) / r0[0]), e.field));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const { return (*this - o).is_zero(); }

int Scalar::cmp(const Scalar& o) const {
    auto rank = [](const Scalar& s) { return s.is_rational() ? 0 : (s.is_nf() ? 1 : 2); };
    if (rank(*this) != rank(o)) return rank(*this) < rank(o) ? -1 : 1;
    auto cmp_qpoly = [](const QPoly& a, const QPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
        for (int i = a.deg(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    };
    if (is_rational())
        return rational() == o.rational() ? 0 : (rational() < o.rational() ? -1 : 1);
    if (is_nf()) {
        if (int c = cmp_qpoly(nf().field->modulus, o.nf().field->modulus)) return c;
        return cmp_qpoly(nf().rep, o.nf().rep);
    }
    if (int c = cmp_qpoly(ratfunc().num, o.ratfunc().num)) return c;
    return cmp_qpoly(ratfunc().den, o.ratfunc().den);
}

size_t Scalar::weight() const {
    auto wq = [](const Rat& r) {
        return mpz_size(r.get_num_mpz_t()) + mpz_size(r.get_den_mpz_t());
    };
    auto wp = [&](const QPoly& p) {
        size_t w = 1;
        for (const auto& c : p.coeffs()) w += wq(c);
        return w;
    };
    if (is_rational()) return wq(rational());
    if (is_ratfunc()) return wp(ratfunc().num) + wp(ratfunc().den);
    return wp(nf().rep);
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational().get_str();
    if (is_nf()) {
        const NFElem& e = nf();
        if (e.rep.is_constant()) return e.rep.is_zero() ? "0" : e.rep[0].get_str();
        return "(" + e.rep.to_string(e.field->gen) + ")";
    }
    const RatFunc& f = ratfunc();
    std::string n = f.num.to_string(f.var);
    if (f.den == QPoly(Rat(1))) {
        if (f.num.is_constant() || f.num.coeffs().size() == 1) return n;
        return "(" + n + ")";
    }
    return "((" + n + ")/(" + f.den.to_string(f.var) + "))";
}

Rat specialize_scalar(const Scalar& s, const Rat& t0) {
    if (s.is_rational()) return s.rational();
    if (s.is_ratfunc()) {
        const RatFunc& f = s.ratfunc();
        Rat d = f.den.eval(t0);
        if (d == 0)
            throw degenerate_input_error("specialization hits denominator zero of " +
                                         f.den.to_string(f.var) + " at " + t0.get_str());
        return f.num.eval(t0) / d;
    }
    throw field_tower_error("cannot specialize a number-field element at a rational parameter");
}

std::optional<Scalar> scalar_sqrt(const Scalar& s) {
    if (s.is_zero()) return Scalar(Rat(0));
    if (s.is_rational()) {
        Rat r = s.rational();
        if (r < 0) return std::nullopt;
        Int n = r.get_num(), d = r.get_den(), sn, sd;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        if (sn * sn == n && sd * sd == d) return Scalar(Rat(sn) / Rat(sd));
        return std::nullopt;
    }
    if (s.is_nf() && s.nf().field->modulus.deg() == 2) {
        // (a + b k)^2 = s over Q[k]/(k^2 + p k + q); reduce to rational cases.
        const QPoly& m = s.nf().field->modulus;
        Rat p = m[1], q = m[0];
        Rat A = s.nf().rep[0], B = s.nf().rep[1];
        // (a + bk)^2 = a^2 - b^2 q + (2ab - b^2 p) k
        // solve 2ab - b^2 p = B, a^2 - b^2 q = A over Q
        // b == 0 branch: s must be a rational square
        if (B == 0) {
            auto root = scalar_sqrt(Scalar(A));
            if (root) return root;
        }
        // b != 0: a = (B + b^2 p)/(2b); substitute into the other equation:
        // (B + b^2 p)^2 - 4 b^2 (A + b^2 q) = 0, a quartic in b, even -> u = b^2:
        // p^2 u^2 + (2 B p - 4 A - ... ) careful: expand
        // B^2 + 2 B p u + p^2 u^2 - 4 u A - 4 u^2 q = 0
        // (p^2 - 4q) u^2 + (2Bp - 4A) u + B^2 = 0
        Rat ca = p * p - 4 * q, cb = 2 * B * p - 4 * A, cc = B * B;
        std::vector<Rat> us;
        if (ca == 0) {
            if (cb != 0) us.push_back(-cc / cb);
        } else {
            Rat disc = cb * cb - 4 * ca * cc;
            auto sd = scalar_sqrt(Scalar(disc));
            if (sd) {
                Rat rd = sd->rational();
                us.push_back((-cb + rd) / (2 * ca));
                us.push_back((-cb - rd) / (2 * ca));
            }
        }
        for (const Rat& u : us) {
            if (u <= 0) continue;
            auto sb = scalar_sqrt(Scalar(u));
            if (!sb) continue;
            Rat b = sb->rational();
            if (b == 0) continue;
            Rat a = (B + u * p) / (2 * b);
            Scalar cand(make_nfelem(QPoly(std::vector<Rat>{a, b}), s.nf().field));
            if (cand * cand == s) return cand;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace pend
