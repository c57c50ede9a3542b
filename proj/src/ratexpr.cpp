#include "pend/ratexpr.hpp"

namespace pend {

RatExpr RatExpr::make(const MultiPoly& n, const MultiPoly& d) {
    if (d.is_zero()) throw degenerate_input_error("RatExpr with zero denominator");
    auto [nn, dd] = aligned(n, d);
    if (nn.is_zero()) return RatExpr{nn, MultiPoly::constant(Scalar(1), dd.vars())};
    MultiPoly g = gcd_multi(nn, dd);
    if (!g.is_constant()) {
        nn = divide_exact(nn, g);
        dd = divide_exact(dd, g);
    }
    // normalize the denominator scale canonically
    MultiPoly dc = dd.canonical_scale();
    Scalar unit = divide_exact(dd, dc).constant_value();
    nn = nn * unit.inverse();
    return RatExpr{nn, dc};
}

RatExpr RatExpr::eval_poly(const MultiPoly& p, const std::map<std::string, RatExpr>& args) {
    // Horner over the term list with power caches per variable.
    std::vector<std::string> vars = p.vars();
    std::vector<const RatExpr*> arg(vars.size(), nullptr);
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = args.find(vars[i]);
        if (it == args.end()) {
            if (p.deg_in(vars[i]) > 0)
                throw error("eval_poly: missing argument for " + vars[i]);
        } else {
            arg[i] = &it->second;
        }
    }
    RatExpr one = RatExpr::of(MultiPoly::constant(Scalar(1)));
    std::vector<std::vector<RatExpr>> pw(vars.size(), {one});
    RatExpr acc = RatExpr::of(MultiPoly());
    for (const auto& [e, c] : p.terms()) {
        RatExpr term = RatExpr::of(MultiPoly::constant(c));
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            while (pw[i].size() <= e[i]) pw[i].push_back(pw[i].back() * *arg[i]);
            term = term * pw[i][e[i]];
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace pend
