#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "motivic/error.hpp"
#include "motivic/expr.hpp"
#include "motivic/product.hpp"
#include "motivic/seq.hpp"

using namespace motivic;

namespace {

const Coeff one = Coeff::one();
const Coeff tau_c = Coeff::monomial(1, 0);
const Coeff rho_c = Coeff::monomial(0, 1);

OpElement scaled(OpElement x, const Coeff& c) {
    x.scale(c);
    return x;
}

OpElement full_of(const OpBasis& a, Nat n, const OpBasis& b) {
    return qp_mul_full(a.e(), a.r(), n, b.e(), b.r());
}

}  // namespace

TEST_CASE("single-term constructors") {
    CHECK(q_i(0) == OpElement::term(OpBasis(SeqE{1}, Seq{}), one));
    CHECK(q_i(2) == OpElement::term(OpBasis(SeqE{0, 0, 1}, Seq{}), one));
    CHECK(p_of(Seq{0, 2}) == OpElement::term(OpBasis(SeqE{}, Seq{0, 2}), one));
    CHECK(p_of(Seq{}) == op_unit());
    CHECK(op_unit() == OpElement::term(OpBasis{}, one));
    CHECK_THROWS_AS(p_of(Seq{1}), NonzeroR0);
    CHECK_THROWS_AS(OpBasis(SeqE{1}, Seq{2}), NonzeroR0);
}

TEST_CASE("basis products reproduce the frozen identities") {
    CHECK(qp_mul_basis(SeqE{1}, Seq{}, SeqE{1}, Seq{}).is_zero());
    CHECK(qp_mul_basis(SeqE{1}, Seq{}, SeqE{0, 1}, Seq{})
          == OpElement::term(OpBasis(SeqE{1, 1}, Seq{}), one));
    CHECK(print(qp_mul_basis(SeqE{}, Seq{0, 1}, SeqE{}, Seq{0, 1}), Format::text)
          == "tau Q(1,1)");
    CHECK(print(qp_mul_basis(SeqE{1}, Seq{}, SeqE{}, Seq{0, 1}), Format::text)
          == "Q(0,1) + Q(1) P(1)");
}

TEST_CASE("unit laws on every basis element up to degree 10") {
    for (const OpBasis& b : basis_up_to(10)) {
        OpElement x = OpElement::term(b, one);
        CHECK(qp_mul_basis(b.e(), b.r(), SeqE{}, Seq{}) == x);
        CHECK(qp_mul_basis(SeqE{}, Seq{}, b.e(), b.r()) == x);
    }
}

TEST_CASE("tau insertion") {
    for (const OpBasis& b : basis_up_to(8)) {
        CHECK(qp_mul_tau(b.e(), b.r(), 0) == OpElement::term(b, one));
    }
    CHECK(qp_mul_tau(SeqE{1}, Seq{}, 1)
          == scaled(q_i(0), tau_c) + scaled(op_unit(), rho_c));
    for (Nat n = 0; n <= 5; ++n) {
        CHECK(qp_mul_tau(SeqE{}, Seq{}, n)
              == OpElement::term(OpBasis{}, Coeff::monomial(n, 0)));
    }
}

TEST_CASE("full product composes the tau insertion with a basis product") {
    std::vector<OpBasis> basis = basis_up_to(8);
    for (const OpBasis& a : basis)
        for (const OpBasis& b : basis)
            CHECK(full_of(a, 0, b) == qp_mul_basis(a.e(), a.r(), b.e(), b.r()));

    CHECK(qp_mul_full(SeqE{1}, Seq{}, 1, SeqE{}, Seq{})
          == scaled(q_i(0), tau_c) + scaled(op_unit(), rho_c));
    OpElement lhs = qp_mul_full(SeqE{1}, Seq{}, 1, SeqE{1}, Seq{});
    CHECK(lhs == scaled(q_i(0), rho_c));
    CHECK(lhs == element_mul(scaled(q_i(0), tau_c) + scaled(op_unit(), rho_c), q_i(0)));
}

TEST_CASE("direct double sum equals the composed implementation") {
    std::vector<OpBasis> basis = basis_up_to(10);
    for (const OpBasis& a : basis)
        for (const OpBasis& b : basis)
            for (Nat n = 0; n <= 2; ++n)
                CHECK(qp_mul_full_direct(a.e(), a.r(), n, b.e(), b.r()) == full_of(a, n, b));
}

TEST_CASE("element multiplication is bilinear over coefficients") {
    OpElement q0 = q_i(0), q1 = q_i(1);
    CHECK(element_mul(scaled(q0, rho_c), q1) == element_mul(q0, scaled(q1, rho_c)));
    CHECK(element_mul(scaled(q0, rho_c), q1)
          == OpElement::term(OpBasis(SeqE{1, 1}, Seq{}), rho_c));

    std::mt19937_64 rng(12345);
    std::vector<OpBasis> basis = basis_up_to(10);
    for (int trial = 0; trial < 50; ++trial) {
        OpElement x = OpElement::term(basis[rng() % basis.size()], one);
        OpElement y = OpElement::term(basis[rng() % basis.size()], one);
        OpElement xy = element_mul(x, y);
        CHECK(element_mul(scaled(x, tau_c), y) == scaled(xy, tau_c));
        CHECK(element_mul(scaled(x, rho_c), y) == scaled(xy, rho_c));
        CHECK(element_mul(x, scaled(y, rho_c)) == scaled(xy, rho_c));
        OpElement left = eval_element(element_mul(x, scaled(y, tau_c)), EvalProfile::rho_zero);
        OpElement right = eval_element(scaled(xy, tau_c), EvalProfile::rho_zero);
        CHECK(left == right);
    }
}

TEST_CASE("multi-term element products distribute") {
    OpElement sum = q_i(0) + q_i(1);
    OpElement direct = element_mul(sum, sum);
    OpElement expanded = element_mul(q_i(0), q_i(1)) + element_mul(q_i(1), q_i(0));
    CHECK(direct == expanded);
    CHECK(direct.is_zero());

    OpElement mixed = scaled(q_i(0), tau_c) + p_of(Seq{0, 1});
    CHECK(element_mul(mixed, op_unit()) == mixed);
    CHECK(element_mul(op_unit(), mixed) == mixed);
}

TEST_CASE("pairing oracle agrees with the closed forms") {
    CHECK(product_oracle(SeqE{1}, Seq{}, 0, SeqE{0, 1}, Seq{})
          == OpElement::term(OpBasis(SeqE{1, 1}, Seq{}), one));
    CHECK(product_oracle(SeqE{1}, Seq{}, 1, SeqE{}, Seq{})
          == scaled(q_i(0), tau_c) + scaled(op_unit(), rho_c));
    CHECK(product_oracle(SeqE{}, Seq{}, 0, SeqE{}, Seq{}) == op_unit());

    std::vector<OpBasis> basis = basis_up_to(6);
    for (const OpBasis& a : basis)
        for (const OpBasis& b : basis)
            for (Nat n = 0; n <= 1; ++n)
                CHECK(product_oracle(a.e(), a.r(), n, b.e(), b.r()) == full_of(a, n, b));
}

TEST_CASE("bidegrees of elements") {
    CHECK(bidegree(q_i(0)) == Bidegree{1, 0});
    CHECK(bidegree(scaled(q_i(0), tau_c) + scaled(op_unit(), rho_c)) == Bidegree{1, 1});
    CHECK(!bidegree(q_i(0) + q_i(1)).has_value());
    CHECK(bidegree(p_of(Seq{0, 2})) == Bidegree{4, 2});
}

TEST_CASE("products of homogeneous elements are homogeneous") {
    std::vector<OpBasis> basis = basis_up_to(8);
    for (const OpBasis& a : basis)
        for (const OpBasis& b : basis)
            for (Nat n = 0; n <= 1; ++n) {
                OpElement prod = full_of(a, n, b);
                if (prod.is_zero()) continue;
                Bidegree want = a.deg() + b.deg() + Bidegree{0, std::int64_t(n)};
                CHECK(bidegree(prod) == want);
            }
}

TEST_CASE("profile evaluation of elements") {
    OpElement x = scaled(q_i(0), tau_c) + scaled(op_unit(), rho_c);
    CHECK(eval_element(x, EvalProfile::generic) == x);
    CHECK(eval_element(x, EvalProfile::rho_zero) == scaled(q_i(0), tau_c));
    CHECK(eval_element(x, EvalProfile::classical) == q_i(0));
    CHECK(eval_element(OpElement{}, EvalProfile::classical).is_zero());
}

TEST_CASE("basis enumeration is canonical and complete") {
    std::vector<OpBasis> basis = basis_up_to(16);
    CHECK(basis.size() == 84);
    CHECK(basis_up_to(12).size() == 44);
    CHECK(basis_up_to(1).size() == 2);
    CHECK(basis_up_to(0).size() == 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].deg().p <= 16);
        CHECK(basis[i].r().at(0) == 0);
        if (i + 1 < basis.size()) CHECK(op_basis_cmp(basis[i], basis[i + 1]) < 0);
    }
    bool has_unit = false, has_q0 = false, has_p1 = false;
    for (const OpBasis& b : basis) {
        has_unit |= b.is_unit();
        has_q0 |= b == OpBasis(SeqE{1}, Seq{});
        has_p1 |= b == OpBasis(SeqE{}, Seq{0, 1});
    }
    CHECK(has_unit);
    CHECK(has_q0);
    CHECK(has_p1);
}
