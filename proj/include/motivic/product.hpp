#ifndef MOTIVIC_PRODUCT_HPP
#define MOTIVIC_PRODUCT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "motivic/dual.hpp"
#include "motivic/seq.hpp"

namespace motivic {

/* operation-side basis element Q(E)P(R), dual to tau(E)xi(R); r_0 must be 0 */
class OpBasis {
  public:
    OpBasis() = default;
    OpBasis(SeqE e, Seq r);

    const SeqE& e() const { return e_; }
    const Seq& r() const { return r_; }
    const Bidegree& deg() const { return deg_; }
    bool is_unit() const { return e_.is_zero() && r_.is_zero(); }

    friend bool operator==(const OpBasis& a, const OpBasis& b) {
        return a.e_ == b.e_ && a.r_ == b.r_;
    }

  private:
    SeqE e_;
    Seq r_;
    Bidegree deg_;
};

int op_basis_cmp(const OpBasis& a, const OpBasis& b);

struct OpBasisBefore {
    bool operator()(const OpBasis& a, const OpBasis& b) const { return op_basis_cmp(a, b) < 0; }
};

using OpElement = LinearCombo<OpBasis, OpBasisBefore>;

OpElement q_i(std::size_t i);
OpElement p_of(const Seq& r);
OpElement op_unit();

/* Q(E1)P(R1)·Q(E2)P(R2) as a sum over the contributing matrix pairs */
OpElement qp_mul_basis(const SeqE& e1, const Seq& r1, const SeqE& e2, const Seq& r2);

/* Q(E)P(R)·tau^n */
OpElement qp_mul_tau(const SeqE& e, const Seq& r, Nat n);

/* Q(E1)P(R1)·tau^n Q(E2)P(R2), composed as (Q(E1)P(R1)·tau^n)·Q(E2)P(R2) */
OpElement qp_mul_full(const SeqE& e1, const Seq& r1, Nat n, const SeqE& e2, const Seq& r2);

/* the same product as one direct double sum over (m, R') and matrix pairs */
OpElement qp_mul_full_direct(const SeqE& e1, const Seq& r1, Nat n, const SeqE& e2, const Seq& r2);

OpElement element_mul(const OpElement& x, const OpElement& y);

/* independent product via the coproduct pairing: the coefficient of each
   candidate output basis is read off coproduct_mono_bruteforce of that basis,
   with the tau^n transport applied to the left leg before matching; shares no
   code with the closed forms above */
OpElement product_oracle(const SeqE& e1, const Seq& r1, Nat n, const SeqE& e2, const Seq& r2);

/* common operation-side bidegree of all terms, absent if mixed or zero */
std::optional<Bidegree> bidegree(const OpElement& x);

/* applies coeff_eval to every coefficient */
OpElement eval_element(const OpElement& x, EvalProfile profile);

/* all basis elements of topological degree <= max_p, in canonical order */
std::vector<OpBasis> basis_up_to(std::int64_t max_p);

}  // namespace motivic

#endif
