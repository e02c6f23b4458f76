#include "motivic/coeff.hpp"

#include <algorithm>

namespace motivic {

Coeff Coeff::monomial(Nat tau_exp, Nat rho_exp) {
    Coeff c;
    c.m_.push_back({tau_exp, rho_exp});
    return c;
}

Coeff Coeff::from_monomials(std::vector<Monomial> monomials) {
    std::ranges::sort(monomials);
    Coeff c;
    for (auto& m : monomials) {
        if (!c.m_.empty() && c.m_.back() == m)
            c.m_.pop_back();  // pairs cancel mod 2
        else
            c.m_.push_back(m);
    }
    return c;
}

Coeff coeff_add(const Coeff& x, const Coeff& y) {
    /* char 2: symmetric difference of monomial sets */
    std::vector<Coeff::Monomial> out;
    out.reserve(x.monomials().size() + y.monomials().size());
    std::ranges::set_symmetric_difference(x.monomials(), y.monomials(), std::back_inserter(out));
    return Coeff::from_monomials(std::move(out));
}

Coeff coeff_mul(const Coeff& x, const Coeff& y) {
    std::vector<Coeff::Monomial> acc;
    acc.reserve(x.monomials().size() * y.monomials().size());
    for (auto& [a, b] : x.monomials())
        for (auto& [c, d] : y.monomials()) acc.push_back({checked_add(a, c), checked_add(b, d)});
    return Coeff::from_monomials(std::move(acc));
}

Coeff coeff_pow(const Coeff& x, Nat n) {
    Coeff r = Coeff::one();
    for (Nat i = 0; i < n; ++i) r = coeff_mul(r, x);
    return r;
}

Coeff coeff_eval(const Coeff& x, EvalProfile profile) {
    if (profile == EvalProfile::generic) return x;
    std::vector<Coeff::Monomial> out;
    for (auto [a, b] : x.monomials()) {
        if (b != 0) continue;  // rho = 0 in both remaining profiles
        out.push_back({profile == EvalProfile::classical ? 0 : a, 0});
    }
    return Coeff::from_monomials(std::move(out));
}

std::optional<Bidegree> coeff_bidegree(const Coeff& x, DegreeSide side) {
    std::optional<Bidegree> deg;
    for (auto [a, b] : x.monomials()) {
        auto ta = static_cast<std::int64_t>(a);
        auto rb = static_cast<std::int64_t>(b);
        Bidegree d = side == DegreeSide::dual ? Bidegree{-rb, -ta - rb} : Bidegree{rb, ta + rb};
        if (deg && !(*deg == d)) return std::nullopt;
        deg = d;
    }
    return deg;
}

}  // namespace motivic
