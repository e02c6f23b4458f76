import pytest

import motivic_milnor as mm


def test_generator_products():
    q0 = mm.q(0)
    assert (q0 * q0).is_zero()
    assert repr(q0 * mm.q(1)) == "Q(1,1)"
    assert q0 * mm.q(1) == mm.q(1) * q0


def test_expression_evaluation():
    assert repr(mm.element("Q(1)*tau*Q(1)")) == "rho Q(1)"
    assert repr(mm.element("Q(1)*tau")) == "tau Q(1) + rho"
    assert mm.element("Q(1)P(1)") != mm.element("Q(1)*P(1)")
    assert mm.element("Q(1)*P(1)") == mm.element("Q(1)P(1) + Q(0,1)")


def test_unit_and_addition():
    x = mm.element("Q(1)")
    assert x + x == mm.element("0")
    assert mm.unit() * x == x
    assert not (x + x)


def test_bidegree_and_specialization():
    assert mm.q(0).bidegree() == (1, 0)
    assert mm.element("Q(1) + Q(0,1)").bidegree() is None
    product = mm.element("Q(1)*tau")
    assert product.bidegree() == (1, 1)
    assert repr(product.specialize("rho-zero")) == "tau Q(1)"
    assert repr(product.specialize("classical")) == "Q(1)"


def test_p_indexing():
    assert repr(mm.p([2, 1])) == "P(2,1)"
    assert mm.p([]) == mm.unit()


def test_json_round_trip():
    x = mm.element("tau^2 Q(1)P(3) + rho P(1)")
    assert mm.from_json(x.to("json")) == x
    assert x.to("latex").count("{") == x.to("latex").count("}")


def test_simplify():
    assert (
        mm.simplify([2, 1])
        == "rho^2 tau(0,0,1) + tau rho xi(0,1) + tau tau(0,1) xi(1)"
    )


def test_coproduct():
    assert mm.coproduct("Q1") == "tau(0,1) (x) 1 + tau(1) (x) xi(1) + 1 (x) tau(0,1)"


def test_syntax_errors_are_value_errors():
    with pytest.raises(ValueError):
        mm.element("Q(2)")
    with pytest.raises(ValueError):
        mm.element("P ,")


def test_verify_suites():
    results = mm.verify("axioms", 8)
    assert len(results) == 1
    assert results[0]["suite"] == "axioms"
    assert results[0]["passed"]
    assert results[0]["checks"] > 0
