#include "motivic/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "motivic/dual.hpp"
#include "motivic/error.hpp"
#include "motivic/expr.hpp"
#include "motivic/matrix.hpp"

namespace motivic {

namespace {

struct Checker {
    SuiteResult r;

    explicit Checker(std::string name) { r.suite = std::move(name); }

    template <class Describe>
    void check(bool ok, Describe describe) {
        ++r.checks;
        if (!ok && r.passed) {
            r.passed = false;
            r.counterexample = describe();
        }
    }

    bool ok() const { return r.passed; }
};

std::string bstr(const OpBasis& b) {
    return print(OpElement::term(b, Coeff::one()), Format::text);
}

std::string dstr(const DualMono& m) {
    return print(DualElement::term(m, Coeff::one()), Format::text);
}

// ---- rewrite-tree suite ----------------------------------------------------

void for_each_tree_seq(std::size_t index, Nat budget, std::vector<Nat>& cur,
                       const std::function<void(const Seq&)>& emit) {
    if (index == 4) {
        emit(Seq(std::vector<Nat>(cur)));
        return;
    }
    for (Nat v = 0; v <= budget; ++v) {
        cur.push_back(v);
        for_each_tree_seq(index + 1, budget - v, cur, emit);
        cur.pop_back();
    }
}

void scan_tree_seq(Checker& ck, const Seq& s) {
    TreeLeaves leaves = tree_expand(s);
    const Nat ws = wsum(s);
    const Nat ns = nsum(s);

    for (const auto& [label, count] : leaves) {
        const Seq& e = label.first.as_seq();
        const Seq& rr = label.second;
        ck.check(rr.at(0) == 0,
                 [&] { return "leaf of " + s.str() + " has xi_0 exponent: " + rr.str(); });
        ck.check(checked_add(wsum(e), wsum(rr)) == ws, [&] {
            return "leaf " + e.str() + "|" + rr.str() + " of " + s.str() +
                   " violates weight bookkeeping";
        });
        ck.check(ns >= checked_add(nsum(e), checked_mul(2, nsum(rr))), [&] {
            return "leaf " + e.str() + "|" + rr.str() + " of " + s.str() +
                   " would have a negative rho exponent";
        });
        if (!ck.ok()) return;
    }

    // closed-form parity against leaf multiplicities, over the full R grid
    // reachable at this weight (supports up to index 6 since wsum <= 64 here)
    for (Nat r1 = 0; r1 <= (ws >> 1); ++r1)
        for (Nat r2 = 0; r2 <= ((ws - 2 * r1) >> 2); ++r2)
            for (Nat r3 = 0; r3 <= ((ws - 2 * r1 - 4 * r2) >> 3); ++r3)
                for (Nat r4 = 0; r4 <= ((ws - 2 * r1 - 4 * r2 - 8 * r3) >> 4); ++r4)
                    for (Nat r5 = 0; r5 <= ((ws - 2 * r1 - 4 * r2 - 8 * r3 - 16 * r4) >> 5); ++r5)
                        for (Nat r6 = 0;
                             r6 <= ((ws - 2 * r1 - 4 * r2 - 8 * r3 - 16 * r4 - 32 * r5) >> 6);
                             ++r6) {
                            Seq rr({0, r1, r2, r3, r4, r5, r6});
                            SeqE e = from_wsum(ws - wsum(rr));
                            auto it = leaves.find({e, rr});
                            Nat count = it == leaves.end() ? 0 : it->second;
                            bool closed = c_coeff(s, rr);
                            ck.check(closed == (count % 2 == 1), [&] {
                                return "closed coefficient for S=" + s.str() + ", R=" + rr.str() +
                                       " is " + (closed ? "1" : "0") + " but the tree has " +
                                       std::to_string(count) + " such leaves";
                            });
                            if (!ck.ok()) return;
                        }

    ck.check(simplify_tau(s) == tree_simplify(s),
             [&] { return "simplifiers disagree on S=" + s.str(); });
}

// ---- triple tensors for coassociativity ------------------------------------

struct TripleMono {
    DualMono a, b, c;
    friend bool operator==(const TripleMono&, const TripleMono&) = default;
};

struct TripleBefore {
    bool operator()(const TripleMono& x, const TripleMono& y) const {
        if (int c = dual_mono_cmp(x.a, y.a)) return c < 0;
        if (int c = dual_mono_cmp(x.b, y.b)) return c < 0;
        return dual_mono_cmp(x.c, y.c) < 0;
    }
};

using TripleElement = LinearCombo<TripleMono, TripleBefore>;

// Adds c1·m1 ⊗ c2·m2 ⊗ c3·m3 in canonical form: tau-parts of a coefficient
// move one leg left as multiplication by (tau + rho·tau_0)^k, rho-parts are
// central and become global.
void add_triple(TripleElement& out, const Coeff& c1, const DualMono& m1, const Coeff& c2,
                const DualMono& m2, const Coeff& c3, const DualMono& m3) {
    for (const auto& [a3, b3] : c3.monomials()) {
        DualElement leg2 = dual_mul(DualElement::term(m2, c2), right_unit_tau_pow(a3));
        for (const auto& [m2p, c2p] : leg2.terms()) {
            Coeff c2tot = coeff_mul(c2p, Coeff::monomial(0, b3));
            for (const auto& [a2, b2] : c2tot.monomials()) {
                DualElement leg1 = dual_mul(DualElement::term(m1, c1), right_unit_tau_pow(a2));
                for (const auto& [m1p, c1p] : leg1.terms())
                    out.add_term(TripleMono{m1p, m2p, m3},
                                 coeff_mul(c1p, Coeff::monomial(0, b2)));
            }
        }
    }
}

TripleElement coassoc_via_left(const DualMono& m) {
    TripleElement out;
    TensorElement psi = coproduct_mono_bruteforce(m);
    for (const auto& [tm, c] : psi.terms()) {
        TensorElement inner = coproduct_mono_bruteforce(tm.left);
        for (const auto& [im, ic] : inner.terms())
            add_triple(out, coeff_mul(c, ic), im.left, Coeff::one(), im.right, Coeff::one(),
                       tm.right);
    }
    return out;
}

TripleElement coassoc_via_right(const DualMono& m) {
    TripleElement out;
    TensorElement psi = coproduct_mono_bruteforce(m);
    for (const auto& [tm, c] : psi.terms()) {
        TensorElement inner = coproduct_mono_bruteforce(tm.right);
        for (const auto& [im, ic] : inner.terms())
            add_triple(out, c, tm.left, ic, im.left, Coeff::one(), im.right);
    }
    return out;
}

DualElement collapse_left(const TensorElement& t) {
    DualElement out;
    for (const auto& [tm, c] : t.terms())
        if (tm.left.is_unit()) out.add_term(tm.right, c);
    return out;
}

DualElement collapse_right(const TensorElement& t) {
    DualElement out;
    for (const auto& [tm, c] : t.terms())
        if (tm.right.is_unit()) out.add_term(tm.left, c);
    return out;
}

OpElement scaled(OpElement x, const Coeff& c) {
    x.scale(c);
    return x;
}

}  // namespace

SuiteResult verify_tree() {
    Checker ck("tree");
    std::vector<Nat> cur;
    for_each_tree_seq(0, 8, cur, [&](const Seq& s) {
        if (!ck.ok()) return;
        scan_tree_seq(ck, s);
    });
    return ck.r;
}

SuiteResult verify_coproduct(std::int64_t max_degree) {
    Checker ck("coproduct");
    for (const OpBasis& b : basis_up_to(max_degree)) {
        if (!ck.ok()) break;
        DualMono m(b.e(), b.r());
        TensorElement closed = coproduct_mono_closed(b.e(), b.r());
        TensorElement brute = coproduct_mono_bruteforce(m);
        ck.check(closed == brute, [&] {
            return "coproduct of " + dstr(m) + ": closed form gives [" +
                   print(closed, Format::text) + "] but the generator fold gives [" +
                   print(brute, Format::text) + "]";
        });
        for (const auto& [tm, c] : closed.terms()) {
            auto cdeg = coeff_bidegree(c, DegreeSide::dual);
            bool homogeneous = cdeg.has_value() &&
                               *cdeg + tm.left.deg() + tm.right.deg() == m.deg();
            ck.check(homogeneous, [&] {
                return "coproduct term " + dstr(tm.left) + " (x) " + dstr(tm.right) + " of " +
                       dstr(m) + " is not in the monomial's bidegree";
            });
            if (!ck.ok()) break;
        }
    }
    return ck.r;
}

SuiteResult verify_product(std::int64_t max_degree, Nat max_n) {
    Checker ck("product");
    std::vector<OpBasis> basis = basis_up_to(max_degree);

    for (const OpBasis& x : basis) {
        if (!ck.ok()) break;
        for (const OpBasis& y : basis) {
            if (!ck.ok()) break;
            for (Nat n = 0; n <= max_n && ck.ok(); ++n) {
                auto name = [&] {
                    return bstr(x) + (n ? " * tau^" + std::to_string(n) + " * " : " * ") +
                           bstr(y);
                };
                OpElement full = qp_mul_full(x.e(), x.r(), n, y.e(), y.r());
                OpElement oracle = product_oracle(x.e(), x.r(), n, y.e(), y.r());
                ck.check(full == oracle, [&] {
                    return name() + ": closed form gives [" + print(full, Format::text) +
                           "] but the pairing oracle gives [" + print(oracle, Format::text) +
                           "]";
                });
                OpElement direct = qp_mul_full_direct(x.e(), x.r(), n, y.e(), y.r());
                ck.check(full == direct, [&] {
                    return name() + ": composed form gives [" + print(full, Format::text) +
                           "] but the direct double sum gives [" + print(direct, Format::text) +
                           "]";
                });
                if (!full.is_zero()) {
                    auto got = bidegree(full);
                    Bidegree want = x.deg() + y.deg() + Bidegree{0, std::int64_t(n)};
                    ck.check(got.has_value() && *got == want,
                             [&] { return name() + ": product is not homogeneous of degree "
                                          "(sum of factors)"; });
                }
            }
        }
    }

    // unit laws
    OpElement one = op_unit();
    for (const OpBasis& x : basis) {
        if (!ck.ok()) break;
        OpElement ex = OpElement::term(x, Coeff::one());
        ck.check(element_mul(ex, one) == ex && element_mul(one, ex) == ex,
                 [&] { return "unit law fails for " + bstr(x); });
    }

    // exterior-generator identities, indices <= 4
    for (std::size_t i = 0; i <= 4 && ck.ok(); ++i) {
        ck.check(element_mul(q_i(i), q_i(i)).is_zero(),
                 [&] { return "Q_" + std::to_string(i) + " squared is nonzero"; });
        for (std::size_t j = 0; j <= 4 && ck.ok(); ++j)
            ck.check(element_mul(q_i(i), q_i(j)) == element_mul(q_i(j), q_i(i)), [&] {
                return "Q_" + std::to_string(i) + " and Q_" + std::to_string(j) +
                       " do not commute";
            });
    }
    for (unsigned mask = 0; mask < 32 && ck.ok(); ++mask) {
        std::vector<Nat> bits(5, 0);
        for (std::size_t i = 0; i < 5; ++i) bits[i] = (mask >> i) & 1;
        SeqE e{Seq(std::move(bits))};
        OpElement want = OpElement::term(OpBasis(e, Seq{}), Coeff::one());
        OpElement asc = op_unit();
        OpElement desc = op_unit();
        for (std::size_t i = 0; i < 5; ++i) {
            if ((mask >> i) & 1) asc = element_mul(asc, q_i(i));
            if ((mask >> (4 - i)) & 1) desc = element_mul(desc, q_i(4 - i));
        }
        ck.check(asc == want && desc == want, [&] {
            return "product of Q_i over the support of " + e.as_seq().str() +
                   " does not reproduce the basis element";
        });
    }

    // randomized laws on pairs from the same degree range
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<Nat> ex(0, 2);
    Coeff rho = Coeff::monomial(0, 1);
    Coeff tau = Coeff::monomial(1, 0);
    for (int trial = 0; trial < 100 && ck.ok(); ++trial) {
        OpElement x = OpElement::term(basis[pick(rng)], Coeff::one());
        OpElement y = OpElement::term(basis[pick(rng)], Coeff::one());

        OpElement lhs = element_mul(scaled(x, rho), y);
        OpElement mid = scaled(element_mul(x, y), rho);
        OpElement rhs = element_mul(x, scaled(y, rho));
        ck.check(lhs == mid && mid == rhs, [&] {
            return "rho is not central on " + print(x, Format::text) + " and " +
                   print(y, Format::text);
        });

        OpElement tleft = eval_element(scaled(element_mul(x, y), tau), EvalProfile::rho_zero);
        OpElement tright = eval_element(element_mul(x, scaled(y, tau)), EvalProfile::rho_zero);
        ck.check(tleft == tright, [&] {
            return "tau-multiplication is not central under rho=0 on " +
                   print(x, Format::text) + " and " + print(y, Format::text);
        });

        OpElement cx = scaled(x, Coeff::monomial(ex(rng), ex(rng)));
        OpElement cy = scaled(y, Coeff::monomial(ex(rng), ex(rng)));
        for (EvalProfile profile : {EvalProfile::rho_zero, EvalProfile::classical}) {
            OpElement after = eval_element(element_mul(cx, cy), profile);
            OpElement before = eval_element(
                element_mul(eval_element(cx, profile), eval_element(cy, profile)), profile);
            ck.check(after == before, [&] {
                return "specialization does not commute with multiplication on " +
                       print(cx, Format::text) + " and " + print(cy, Format::text);
            });
        }
    }

    // the derived commutation identity
    OpElement shifted = qp_mul_tau(SeqE({1}), Seq{}, 1);
    OpElement expect = OpElement::term(OpBasis(SeqE({1}), Seq{}), tau);
    expect += OpElement::term(OpBasis{}, rho);
    ck.check(shifted == expect,
             [&] { return "Q_0·tau is [" + print(shifted, Format::text) + "]"; });

    return ck.r;
}

SuiteResult verify_axioms(std::int64_t max_degree, std::uint64_t seed) {
    Checker ck("axioms");

    std::vector<OpBasis> pool = basis_up_to(std::min<std::int64_t>(max_degree, 12));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<Nat> ex(0, 2);
    for (int trial = 0; trial < 200 && ck.ok(); ++trial) {
        OpElement x = OpElement::term(pool[pick(rng)], Coeff::monomial(ex(rng), ex(rng)));
        OpElement y = OpElement::term(pool[pick(rng)], Coeff::monomial(ex(rng), ex(rng)));
        OpElement z = OpElement::term(pool[pick(rng)], Coeff::monomial(ex(rng), ex(rng)));
        OpElement left = element_mul(element_mul(x, y), z);
        OpElement right = element_mul(x, element_mul(y, z));
        ck.check(left == right, [&] {
            return "associativity fails on " + print(x, Format::text) + ", " +
                   print(y, Format::text) + ", " + print(z, Format::text) + ": [" +
                   print(left, Format::text) + "] vs [" + print(right, Format::text) + "]";
        });
    }

    for (const OpBasis& b : basis_up_to(max_degree)) {
        if (!ck.ok()) break;
        DualMono m(b.e(), b.r());
        ck.check(coassoc_via_left(m) == coassoc_via_right(m),
                 [&] { return "coassociativity fails at " + dstr(m); });
        TensorElement psi = coproduct_mono_bruteforce(m);
        DualElement self = DualElement::term(m, Coeff::one());
        ck.check(collapse_left(psi) == self,
                 [&] { return "left counit law fails at " + dstr(m); });
        ck.check(collapse_right(psi) == self,
                 [&] { return "right counit law fails at " + dstr(m); });
    }

    return ck.r;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::int64_t max_degree) {
    std::vector<SuiteResult> out;
    bool all = which == "all";
    if (all || which == "tree") out.push_back(verify_tree());
    if (all || which == "coproduct") out.push_back(verify_coproduct(max_degree));
    if (all || which == "product") out.push_back(verify_product(max_degree));
    if (all || which == "axioms") out.push_back(verify_axioms(max_degree));
    if (out.empty())
        throw Error("unknown suite '" + which + "' (use all, tree, coproduct, product or axioms)");
    return out;
}

}  // namespace motivic
