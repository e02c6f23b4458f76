#include "motivic/dual.hpp"

#include <algorithm>
#include <mutex>

#include "motivic/error.hpp"

namespace motivic {

namespace {

using Wide = __int128;

Wide wide_shl(Wide v, std::size_t k) {
    Wide out;
    if (k > 126 || __builtin_mul_overflow(v, Wide(1) << k, &out))
        throw Overflow("dyadic accumulator overflow");
    return out;
}

Wide wide_add(Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("dyadic accumulator overflow");
    return out;
}

}  // namespace

DualMono::DualMono(SeqE tau, Seq xi) : tau_(std::move(tau)), xi_(std::move(xi)) {
    if (xi_.at(0) != 0) throw NonzeroR0("xi exponent sequence has nonzero entry at index 0");
    deg_ = bidegree_of_basis(tau_, xi_);
}

int dual_mono_cmp(const DualMono& a, const DualMono& b) {
    if (a.deg().p != b.deg().p) return a.deg().p > b.deg().p ? -1 : 1;
    if (a.deg().q != b.deg().q) return a.deg().q > b.deg().q ? -1 : 1;
    Nat wa = wsum(a.tau().as_seq());
    Nat wb = wsum(b.tau().as_seq());
    if (wa != wb) return wa > wb ? -1 : 1;
    if (int c = seq_lex_cmp(a.tau().as_seq(), b.tau().as_seq()); c != 0) return -c;
    if (int c = seq_lex_cmp(a.xi(), b.xi()); c != 0) return -c;
    return 0;
}

int tensor_mono_cmp(const TensorMono& a, const TensorMono& b) {
    if (int c = dual_mono_cmp(a.left, b.left); c != 0) return c;
    return dual_mono_cmp(a.right, b.right);
}

DualElement dual_unit() { return DualElement::term(DualMono{}, Coeff::one()); }

TensorElement tensor_unit() { return TensorElement::term(TensorMono{}, Coeff::one()); }

std::optional<std::size_t> tree_pivot(const Seq& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.at(i) >= 2) return i;
    return std::nullopt;
}

Seq tree_child_rho_s(const Seq& s, std::size_t n) {
    return seq_add(seq_sub(s, unit_seq(2, n)), unit_seq(1, n + 1));
}

Seq tree_child_tau_s(const Seq& s, std::size_t n) { return seq_sub(s, unit_seq(2, n)); }

Seq tree_child_tau_r(const Seq& r, std::size_t n) { return seq_add(r, unit_seq(1, n + 1)); }

namespace {

void tree_rec(const Seq& s, const Seq& r, TreeLeaves& out) {
    auto pivot = tree_pivot(s);
    if (!pivot) {
        Nat& count = out[{SeqE(s), r}];
        count = checked_add(count, 1);
        return;
    }
    tree_rec(tree_child_rho_s(s, *pivot), r, out);
    tree_rec(tree_child_tau_s(s, *pivot), tree_child_tau_r(r, *pivot), out);
}

}  // namespace

TreeLeaves tree_expand(const Seq& s) {
    TreeLeaves out;
    tree_rec(s, Seq{}, out);
    return out;
}

bool c_coeff(const Seq& s, const Seq& r) {
    if (r.at(0) > 0) return false;
    std::size_t len = std::max(s.size(), r.size());
    Wide num = 0;  // sum_{i<n} 2^i (s_i - r_i)
    for (std::size_t n = 1; n <= len; ++n) {
        Wide diff = Wide(s.at(n - 1)) - Wide(r.at(n - 1));
        num = wide_add(num, wide_shl(diff, n - 1));
        Nat rn = r.at(n);
        if (rn == 0) continue;
        Wide fl = num >> n;
        if (fl < Wide(rn)) return false;
        if ((fl & Wide(rn)) != Wide(rn)) return false;
    }
    return true;
}

namespace {

std::int64_t rho_exponent(Nat nsum_s, const SeqE& e, const Seq& r) {
    auto b = std::int64_t(nsum_s) - std::int64_t(nsum(e.as_seq())) - 2 * std::int64_t(nsum(r));
    if (b < 0)
        throw NegativeExponent("rewrite of tau(" + e.as_seq().str() + ") produced rho^" +
                               std::to_string(b));
    return b;
}

}  // namespace

DualElement simplify_tau(const Seq& s) {
    Nat ws = wsum(s);
    Nat ns = nsum(s);
    DualElement out;
    std::vector<Nat> entries{0};
    auto emit = [&](const std::vector<Nat>& chosen) {
        Seq r{std::vector<Nat>(chosen)};
        if (!c_coeff(s, r)) return;
        SeqE e = from_wsum(ws - wsum(r));
        std::int64_t b = rho_exponent(ns, e, r);
        out.add_term(DualMono(e, r), Coeff::monomial(nsum(r), Nat(b)));
    };
    auto dfs = [&](auto&& self, std::size_t n, Nat budget) -> void {
        if (n >= 64 || (budget >> n) == 0) {
            emit(entries);
            return;
        }
        for (Nat rn = 0; rn <= (budget >> n); ++rn) {
            entries.resize(n + 1, 0);
            entries[n] = rn;
            self(self, n + 1, budget - (rn << n));
            entries.resize(n + 1, 0);
            entries[n] = 0;
        }
        entries.resize(n, 0);
    };
    dfs(dfs, 1, ws);
    return out;
}

DualElement tree_simplify(const Seq& s) {
    static std::mutex mu;
    static std::map<Seq, DualElement> cache;
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(s); it != cache.end()) return it->second;
    }
    TreeLeaves leaves = tree_expand(s);
    DualElement out;
    Nat ns = nsum(s);
    for (const auto& [label, count] : leaves) {
        if (count % 2 == 0) continue;
        const auto& [e, r] = label;
        std::int64_t b = rho_exponent(ns, e, r);
        out.add_term(DualMono(e, r), Coeff::monomial(nsum(r), Nat(b)));
    }
    std::scoped_lock lock(mu);
    cache.emplace(s, out);
    return out;
}

DualElement dual_mul(const DualElement& x, const DualElement& y) {
    DualElement out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Coeff c = coeff_mul(cx, cy);
            Seq xis = seq_add(mx.xi(), my.xi());
            DualElement simp = tree_simplify(seq_add(mx.tau().as_seq(), my.tau().as_seq()));
            for (const auto& [mt, ct] : simp.terms())
                out.add_term(DualMono(mt.tau(), seq_add(mt.xi(), xis)), coeff_mul(c, ct));
        }
    }
    return out;
}

DualElement right_unit_tau_pow(Nat n) {
    static std::mutex mu;
    static std::vector<DualElement> powers;
    std::scoped_lock lock(mu);
    if (powers.empty()) powers.push_back(dual_unit());
    while (powers.size() <= n) {
        DualElement base;
        base.add_term(DualMono{}, Coeff::monomial(1, 0));
        base.add_term(DualMono(SeqE{1}, Seq{}), Coeff::monomial(0, 1));
        powers.push_back(dual_mul(powers.back(), base));
    }
    return powers[n];
}

TensorElement coproduct_gen(GenKind kind, std::size_t k) {
    TensorElement out;
    auto xi_mono = [](Nat exp, std::size_t j) {
        return j == 0 ? DualMono{} : DualMono(SeqE{}, unit_seq(exp, j));
    };
    if (kind == GenKind::tau) {
        out.add_term({DualMono{}, DualMono(SeqE(unit_seq(1, k)), Seq{})}, Coeff::one());
        for (std::size_t i = 0; i <= k; ++i)
            out.add_term({DualMono(SeqE(unit_seq(1, i)), Seq{}), xi_mono(checked_shl(1, i), k - i)},
                         Coeff::one());
    } else {
        for (std::size_t i = 0; i <= k; ++i)
            out.add_term({xi_mono(1, i), xi_mono(checked_shl(1, i), k - i)}, Coeff::one());
    }
    return out;
}

TensorElement tensor_canonicalize(const std::vector<RawTensorTerm>& raw) {
    TensorElement out;
    for (const auto& term : raw) {
        for (const auto& [a, b] : term.right_c.monomials()) {
            Coeff global = coeff_mul(term.left_c, Coeff::monomial(0, b));
            DualElement left =
                dual_mul(DualElement::term(term.left_m, global), right_unit_tau_pow(a));
            for (const auto& [ml, cl] : left.terms()) out.add_term({ml, term.right_m}, cl);
        }
    }
    return out;
}

TensorElement tensor_mul(const TensorElement& u, const TensorElement& v) {
    std::vector<RawTensorTerm> raw;
    for (const auto& [mu, cu] : u.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            Coeff c = coeff_mul(cu, cv);
            DualElement left = dual_mul(DualElement::term(mu.left, Coeff::one()),
                                        DualElement::term(mv.left, Coeff::one()));
            DualElement right = dual_mul(DualElement::term(mu.right, Coeff::one()),
                                         DualElement::term(mv.right, Coeff::one()));
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms())
                    raw.push_back({coeff_mul(c, cl), ml, cr, mr});
        }
    }
    return tensor_canonicalize(raw);
}

namespace {

TensorElement tensor_pow(const TensorElement& base, Nat n) {
    TensorElement acc = tensor_unit();
    TensorElement sq = base;
    while (n > 0) {
        if (n & 1) acc = tensor_mul(acc, sq);
        n >>= 1;
        if (n > 0) sq = tensor_mul(sq, sq);
    }
    return acc;
}

}  // namespace

TensorElement coproduct_mono_bruteforce(const DualMono& m) {
    static std::mutex mu;
    static std::map<DualMono, TensorElement, DualMonoBefore> cache;
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    TensorElement out = tensor_unit();
    for (std::size_t i = 0; i < m.tau().size(); ++i)
        if (m.tau().at(i) != 0) out = tensor_mul(out, coproduct_gen(GenKind::tau, i));
    for (std::size_t j = 1; j < m.xi().size(); ++j)
        if (Nat e = m.xi().at(j); e != 0)
            out = tensor_mul(out, tensor_pow(coproduct_gen(GenKind::xi, j), e));
    std::scoped_lock lock(mu);
    cache.emplace(m, out);
    return out;
}

Coeff counit(const DualElement& x) { return x.coeff_of(DualMono{}); }

}  // namespace motivic
