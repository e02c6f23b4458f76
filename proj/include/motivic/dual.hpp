#ifndef MOTIVIC_DUAL_HPP
#define MOTIVIC_DUAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "motivic/coeff.hpp"
#include "motivic/seq.hpp"

namespace motivic {

/* basis monomial tau(E)·xi(R) of the dual algebra; xi_0 = 1, so R must have
   r_0 = 0 (NonzeroR0 otherwise) */
class DualMono {
  public:
    DualMono() = default;
    DualMono(SeqE tau, Seq xi);

    const SeqE& tau() const { return tau_; }
    const Seq& xi() const { return xi_; }
    const Bidegree& deg() const { return deg_; }
    bool is_unit() const { return tau_.is_zero() && xi_.is_zero(); }

    friend bool operator==(const DualMono& a, const DualMono& b) {
        return a.tau_ == b.tau_ && a.xi_ == b.xi_;
    }

  private:
    SeqE tau_;
    Seq xi_;
    Bidegree deg_;
};

/* canonical term order: descending (topological degree, weight, wsum of the
   tau part, tau part lex, xi part lex); <0 means a prints before b */
int dual_mono_cmp(const DualMono& a, const DualMono& b);

struct DualMonoBefore {
    bool operator()(const DualMono& a, const DualMono& b) const { return dual_mono_cmp(a, b) < 0; }
};

template <class Mono, class Before>
class LinearCombo {
  public:
    using Terms = std::map<Mono, Coeff, Before>;

    LinearCombo() = default;

    static LinearCombo term(Mono m, Coeff c) {
        LinearCombo out;
        out.add_term(std::move(m), std::move(c));
        return out;
    }

    void add_term(const Mono& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (inserted) return;
        it->second = coeff_add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }

    LinearCombo& operator+=(const LinearCombo& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) {
        a += b;
        return a;
    }

    void scale(const Coeff& c) {
        if (c.is_one()) return;
        Terms scaled;
        for (const auto& [m, t] : terms_) {
            Coeff prod = coeff_mul(t, c);
            if (!prod.is_zero()) scaled.emplace(m, std::move(prod));
        }
        terms_ = std::move(scaled);
    }

    Coeff coeff_of(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff::zero() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

  private:
    Terms terms_;
};

using DualElement = LinearCombo<DualMono, DualMonoBefore>;

struct TensorMono {
    DualMono left;
    DualMono right;
    friend bool operator==(const TensorMono&, const TensorMono&) = default;
};

int tensor_mono_cmp(const TensorMono& a, const TensorMono& b);

struct TensorMonoBefore {
    bool operator()(const TensorMono& a, const TensorMono& b) const {
        return tensor_mono_cmp(a, b) < 0;
    }
};

using TensorElement = LinearCombo<TensorMono, TensorMonoBefore>;

DualElement dual_unit();
TensorElement tensor_unit();

/* smallest index n with s_n >= 2, or nullopt when s is already a tau-word
   with exponents in {0,1} */
std::optional<std::size_t> tree_pivot(const Seq& s);

/* children of a rewrite node S|R at pivot n: applying tau_n^2 = rho·tau_{n+1}
   + tau·xi_{n+1} either keeps the factor on the tau side or moves it to the
   xi side */
Seq tree_child_rho_s(const Seq& s, std::size_t n);
Seq tree_child_tau_s(const Seq& s, std::size_t n);
Seq tree_child_tau_r(const Seq& r, std::size_t n);

using TreeLeaves = std::map<std::pair<SeqE, Seq>, Nat>;

/* leaf labels E|R of the rewrite tree rooted at S|0, with exact
   multiplicities (not reduced mod 2) */
TreeLeaves tree_expand(const Seq& s);

/* closed-form parity of the leaf multiplicity of (E,R) under S, where E is
   determined by wsum E = wsum S - wsum R:
     0 when r_0 > 0, else prod_{n>=1} binom(floor(sum_{i<n} 2^{i-n}(s_i-r_i)), r_n) mod 2 */
bool c_coeff(const Seq& s, const Seq& r);

/* rewrite tau(S) into the basis via the closed form:
     sum over R (r_0 = 0, wsum R <= wsum S, c_coeff(S,R) = 1) of
     tau^{nsum R} rho^{nsum S - nsum E - 2 nsum R} tau(E) xi(R) */
DualElement simplify_tau(const Seq& s);

/* same rewrite computed by expanding the tree and reducing multiplicities
   mod 2; memoized; the independent path used by dual_mul and the coproduct
   machinery */
DualElement tree_simplify(const Seq& s);

DualElement dual_mul(const DualElement& x, const DualElement& y);

/* (tau + rho·tau_0)^n, the right unit on tau, cached per exponent */
DualElement right_unit_tau_pow(Nat n);

enum class GenKind { tau, xi };

TensorElement coproduct_gen(GenKind kind, std::size_t k);

struct RawTensorTerm {
    Coeff left_c;
    DualMono left_m;
    Coeff right_c;
    DualMono right_m;
};

/* move every right-leg coefficient tau^a rho^b to the left: rho^b becomes
   global, each tau factor becomes left multiplication by tau + rho·tau_0 */
TensorElement tensor_canonicalize(const std::vector<RawTensorTerm>& raw);

TensorElement tensor_mul(const TensorElement& u, const TensorElement& v);

TensorElement coproduct_mono_bruteforce(const DualMono& m);

/* coefficient of the unit monomial */
Coeff counit(const DualElement& x);

}  // namespace motivic

#endif
