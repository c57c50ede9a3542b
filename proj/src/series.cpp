#include "pend/series.hpp"

namespace pend {

int Series::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return order() + 1;
}

bool Series::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Series Series::operator+(const Series& o) const {
    if (order() != o.order()) throw error("series order mismatch");
    Series r(*this);
    for (int i = 0; i <= order(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    if (order() != o.order()) throw error("series order mismatch");
    Series r(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

Series Series::operator*(const Scalar& s) const {
    Series r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Series Series::inverse() const {
    if (c_[0].is_zero()) throw degenerate_input_error("series inverse: not a unit");
    Series r(order());
    Scalar a0 = c_[0].inverse();
    r.c_[0] = a0;
    for (int n = 1; n <= order(); ++n) {
        Scalar acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -(a0 * acc);
    }
    return r;
}

Series Series::compose(const Series& g) const {
    if (!g.c_[0].is_zero())
        throw degenerate_input_error("series compose: inner constant term must vanish");
    Series r(order());
    // Horner from the top
    for (int i = order(); i >= 0; --i) {
        r = r * g;
        r.c_[0] += c_[i];
    }
    return r;
}

Series Series::pow(unsigned n) const {
    Series r(order(), Scalar(1));
    Series b(*this);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Series eval_series(const MultiPoly& p, const std::string& var_a, const Series& a,
                   const std::string& var_b, const Series& b) {
    int order = a.order();
    Series r(order);
    int ia = p.var_index(var_a), ib = p.var_index(var_b);
    for (const auto& v : p.vars())
        if (v != var_a && v != var_b && p.deg_in(v) > 0)
            throw error("eval_series: extra variable " + v);
    // power tables
    std::vector<Series> pa{Series(order, Scalar(1))}, pb{Series(order, Scalar(1))};
    for (const auto& [e, c] : p.terms()) {
        uint32_t ea = ia >= 0 ? e[ia] : 0, eb = ib >= 0 ? e[ib] : 0;
        while (pa.size() <= ea) pa.push_back(pa.back() * a);
        while (pb.size() <= eb) pb.push_back(pb.back() * b);
        r = r + pa[ea] * pb[eb] * c;
    }
    return r;
}

}  // namespace pend
