#include "motivic/product.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "motivic/error.hpp"
#include "motivic/matrix.hpp"

namespace motivic {

OpBasis::OpBasis(SeqE e, Seq r) : e_(std::move(e)), r_(std::move(r)) {
    if (r_.at(0) != 0) throw NonzeroR0("xi exponent sequence has nonzero entry at index 0");
    deg_ = bidegree_of_basis(e_, r_);
}

int op_basis_cmp(const OpBasis& a, const OpBasis& b) {
    if (a.deg().p != b.deg().p) return a.deg().p > b.deg().p ? -1 : 1;
    if (a.deg().q != b.deg().q) return a.deg().q > b.deg().q ? -1 : 1;
    Nat wa = wsum(a.e().as_seq());
    Nat wb = wsum(b.e().as_seq());
    if (wa != wb) return wa > wb ? -1 : 1;
    if (int c = seq_lex_cmp(a.e().as_seq(), b.e().as_seq()); c != 0) return -c;
    if (int c = seq_lex_cmp(a.r(), b.r()); c != 0) return -c;
    return 0;
}

OpElement q_i(std::size_t i) {
    return OpElement::term(OpBasis(SeqE(unit_seq(1, i)), Seq{}), Coeff::one());
}

OpElement p_of(const Seq& r) { return OpElement::term(OpBasis(SeqE{}, r), Coeff::one()); }

OpElement op_unit() { return OpElement::term(OpBasis{}, Coeff::one()); }

namespace {

Nat checked_rho_exp(__int128 value, const char* what) {
    if (value < 0)
        throw NegativeExponent(std::string(what) + " produced a negative rho exponent");
    return Nat(value);
}

/* all subsequences R' <= r, depth-first, smallest entries first */
void for_each_subseq(const Seq& r, const std::function<void(const Seq&)>& emit) {
    std::vector<Nat> entries(r.size(), 0);
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == r.size()) {
            emit(Seq(std::vector<Nat>(entries)));
            return;
        }
        for (Nat v = 0; v <= r.at(i); ++v) {
            entries[i] = v;
            self(self, i + 1);
        }
        entries[i] = 0;
    };
    dfs(dfs, 0);
}

}  // namespace

OpElement qp_mul_basis(const SeqE& e1, const Seq& r1, const SeqE& e2, const Seq& r2) {
    OpElement out;
    Nat nsum_e1 = nsum(e1.as_seq());
    for_each_product_matrix(e1, r1, e2, r2, [&](const YMatrix& y, const MilnorMatrix& x) {
        if (!b_func(y.grid()) || !b_func(x.grid())) return;
        Seq e_out = seq_add(e2.as_seq(), t_func(y.grid()));
        if (!binom_seq_mod2(e_out, e2.as_seq())) return;
        Seq sy = s_func(y.grid());
        Seq d = seq_sub(r1, drop_index0(s_func(x.grid())));
        if (!c_coeff(sy, d)) return;
        Nat rho = checked_rho_exp(
            __int128(nsum(sy)) - __int128(nsum_e1) - 2 * __int128(nsum(d)), "basis product");
        out.add_term(OpBasis(SeqE(e_out), t_func(x.grid())), Coeff::monomial(nsum(d), rho));
    });
    return out;
}

OpElement qp_mul_tau(const SeqE& e, const Seq& r, Nat n) {
    OpElement out;
    Nat wsum_e = wsum(e.as_seq());
    Nat nsum_e = nsum(e.as_seq());
    for (Nat m = 0; m <= n; ++m) {
        if (!binom_mod2(n, m)) continue;
        for_each_subseq(r, [&](const Seq& rp) {
            __int128 w = __int128(wsum_e) + __int128(wsum(rp)) - __int128(m);
            if (w < 0) return;
            SeqE ep = from_wsum(Nat(w));
            if (!c_coeff(seq_add(ep.as_seq(), unit_seq(m, 0)), rp)) return;
            Nat rho = checked_rho_exp(__int128(nsum(ep.as_seq())) - __int128(nsum_e) -
                                          2 * __int128(nsum(rp)) + 2 * __int128(m),
                                      "tau-coefficient product");
            out.add_term(OpBasis(ep, seq_sub(r, rp)),
                         Coeff::monomial(checked_add(nsum(rp), n - m), rho));
        });
    }
    return out;
}

OpElement qp_mul_full(const SeqE& e1, const Seq& r1, Nat n, const SeqE& e2, const Seq& r2) {
    OpElement out;
    OpElement shifted = qp_mul_tau(e1, r1, n);
    for (const auto& [b, c] : shifted.terms()) {
        OpElement part = qp_mul_basis(b.e(), b.r(), e2, r2);
        part.scale(c);
        out += part;
    }
    return out;
}

OpElement qp_mul_full_direct(const SeqE& e1, const Seq& r1, Nat n, const SeqE& e2, const Seq& r2) {
    OpElement out;
    Nat wsum_e1 = wsum(e1.as_seq());
    Nat nsum_e1 = nsum(e1.as_seq());
    Nat nsum_r1 = nsum(r1);
    for (Nat m = 0; m <= n; ++m) {
        if (!binom_mod2(n, m)) continue;
        for_each_subseq(r1, [&](const Seq& rp) {
            __int128 w = __int128(wsum_e1) + __int128(wsum(rp)) - __int128(m);
            if (w < 0) return;
            SeqE ep = from_wsum(Nat(w));
            if (!c_coeff(seq_add(ep.as_seq(), unit_seq(m, 0)), rp)) return;
            Seq r1p = seq_sub(r1, rp);
            for_each_product_matrix(ep, r1p, e2, r2, [&](const YMatrix& y, const MilnorMatrix& x) {
                if (!b_func(y.grid()) || !b_func(x.grid())) return;
                Seq e_out = seq_add(e2.as_seq(), t_func(y.grid()));
                if (!binom_seq_mod2(e_out, e2.as_seq())) return;
                Seq sy = s_func(y.grid());
                Seq sx = drop_index0(s_func(x.grid()));
                if (!c_coeff(sy, seq_sub(r1p, sx))) return;
                Nat tau = checked_add(nsum(seq_sub(r1, sx)), n - m);
                Nat rho = checked_rho_exp(__int128(nsum(sy)) - __int128(nsum_e1) +
                                              2 * __int128(nsum(sx)) - 2 * __int128(nsum_r1) +
                                              2 * __int128(m),
                                          "direct double-sum product");
                out.add_term(OpBasis(SeqE(e_out), t_func(x.grid())), Coeff::monomial(tau, rho));
            });
        });
    }
    return out;
}

OpElement element_mul(const OpElement& x, const OpElement& y) {
    OpElement out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            for (const auto& [a, b] : cx.monomials()) {
                for (const auto& [c, d] : cy.monomials()) {
                    OpElement part = qp_mul_full(bx.e(), bx.r(), c, by.e(), by.r());
                    part.scale(Coeff::monomial(a, checked_add(b, d)));
                    out += part;
                }
            }
        }
    }
    return out;
}

namespace {

/* coproduct of the basis monomial with its left leg multiplied through by
   (tau + rho·tau_0)^n, cached per (monomial, n) */
TensorElement transported_coproduct(const DualMono& m, Nat n) {
    static std::mutex mu;
    static std::map<std::tuple<Seq, Seq, Nat>, TensorElement> cache;
    std::tuple<Seq, Seq, Nat> key{m.tau().as_seq(), m.xi(), n};
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    TensorElement base = coproduct_mono_bruteforce(m);
    TensorElement out;
    if (n == 0) {
        out = base;
    } else {
        DualElement shift = right_unit_tau_pow(n);
        for (const auto& [tm, c] : base.terms()) {
            DualElement left = dual_mul(DualElement::term(tm.left, c), shift);
            for (const auto& [ml, cl] : left.terms()) out.add_term({ml, tm.right}, cl);
        }
    }
    std::scoped_lock lock(mu);
    cache.emplace(std::move(key), out);
    return out;
}

}  // namespace

OpElement product_oracle(const SeqE& e1, const Seq& r1, Nat n, const SeqE& e2, const Seq& r2) {
    Bidegree d1 = bidegree_of_basis(e1, r1);
    Bidegree d2 = bidegree_of_basis(e2, r2);
    Bidegree total{d1.p + d2.p, d1.q + d2.q + std::int64_t(n)};
    DualMono left_match{e1, r1};
    DualMono right_match{e2, r2};
    OpElement out;
    for (const OpBasis& cand : basis_up_to(total.p)) {
        if (cand.deg().q > total.q) continue;
        TensorElement psi = transported_coproduct(DualMono(cand.e(), cand.r()), n);
        Coeff c = psi.coeff_of({left_match, right_match});
        if (c.is_zero()) continue;
        auto cdeg = coeff_bidegree(c, DegreeSide::operation);
        if (!cdeg || !(cand.deg() + *cdeg == total))
            throw InternalError("pairing product term violates bidegree bookkeeping");
        out.add_term(cand, c);
    }
    return out;
}

std::optional<Bidegree> bidegree(const OpElement& x) {
    std::optional<Bidegree> out;
    for (const auto& [b, c] : x.terms()) {
        auto cdeg = coeff_bidegree(c, DegreeSide::operation);
        if (!cdeg) return std::nullopt;
        Bidegree total = b.deg() + *cdeg;
        if (out && !(*out == total)) return std::nullopt;
        out = total;
    }
    return out;
}

OpElement eval_element(const OpElement& x, EvalProfile profile) {
    OpElement out;
    for (const auto& [b, c] : x.terms()) out.add_term(b, coeff_eval(c, profile));
    return out;
}

std::vector<OpBasis> basis_up_to(std::int64_t max_p) {
    std::vector<OpBasis> out;
    if (max_p < 0) return out;
    Nat budget = Nat(max_p);

    std::vector<std::size_t> tau_idx;  // |tau_i| has topological degree 2^{i+1}-1
    for (std::size_t i = 0; i + 1 < 64 && (checked_shl(1, i + 1) - 1) <= budget; ++i)
        tau_idx.push_back(i);
    std::vector<std::size_t> xi_idx;  // |xi_j| has topological degree 2^{j+1}-2
    for (std::size_t j = 1; j + 1 < 64 && (checked_shl(1, j + 1) - 2) <= budget; ++j)
        xi_idx.push_back(j);

    std::vector<Nat> evec;
    std::vector<Nat> rvec;
    auto xi_dfs = [&](auto&& self, std::size_t jpos, Nat left) -> void {
        if (jpos == xi_idx.size()) {
            rvec.resize(xi_idx.empty() ? 1 : xi_idx.back() + 1, 0);
            std::vector<Nat> r(rvec);
            out.emplace_back(SeqE(Seq(std::vector<Nat>(evec))), Seq(std::move(r)));
            return;
        }
        std::size_t j = xi_idx[jpos];
        Nat cost = checked_shl(1, j + 1) - 2;
        rvec.resize(j + 1, 0);
        for (Nat v = 0; v * cost <= left; ++v) {
            rvec[j] = v;
            self(self, jpos + 1, left - v * cost);
        }
        rvec[j] = 0;
    };
    auto tau_dfs = [&](auto&& self, std::size_t ipos, Nat left) -> void {
        if (ipos == tau_idx.size()) {
            rvec.clear();
            xi_dfs(xi_dfs, 0, left);
            return;
        }
        std::size_t i = tau_idx[ipos];
        self(self, ipos + 1, left);
        Nat cost = checked_shl(1, i + 1) - 1;
        if (cost <= left) {
            evec.resize(i + 1, 0);
            evec[i] = 1;
            self(self, ipos + 1, left - cost);
            evec[i] = 0;
        }
    };
    tau_dfs(tau_dfs, 0, budget);
    std::sort(out.begin(), out.end(),
              [](const OpBasis& a, const OpBasis& b) { return op_basis_cmp(a, b) < 0; });
    return out;
}

}  // namespace motivic
