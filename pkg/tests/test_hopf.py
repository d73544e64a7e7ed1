import random

import pytest
from hypothesis import given

from umbra import partitions as P
from umbra.bases import antipode, e, omega, pow_
from umbra.errors import DomainError
from umbra.genera import QuasiGenus, e_genus, h_genus
from umbra.hopf import (
    OperatorMap, TensorElem, TransferOp, adjoint, adjoint_of_operator_map, adjoint_relation_holds,
    adjoint_row, coproduct, counit, hopf_axiom_suite, omega_adjoint_report, transfer_between,
    adjoint_row_species_check,
)
from umbra.operators import ShiftInvOp, epsilon
from umbra.species import named_species
from umbra.symfunc import SymFunc, expand_in_vars, m

from strategies import partitions, symfuncs


def _split_alphabet(t: TensorElem, a: int, b: int):
    """sum left(x_1..x_a) right(y_1..y_b) as one polynomial in a + b variables."""
    out = {}
    for (lam, mu), c in t.items():
        for x, cx in expand_in_vars(m(lam), a).items():
            for y, cy in expand_in_vars(m(mu), b).items():
                out[x + y] = out.get(x + y, 0) + c * cx * cy
    return {k: v for k, v in out.items() if v}


@given(partitions(5))
def test_coproduct_is_splitting_the_alphabet(lam):
    a = b = 3
    assert _split_alphabet(coproduct(m(lam)), a, b) == expand_in_vars(m(lam), a + b)


@pytest.mark.parametrize("n", range(6))
def test_coproduct_of_classical_bases(n):
    want_e = sum((TensorElem.pure(e(i), e(n - i)) for i in range(n + 1)), TensorElem(2))
    assert want_e == coproduct(e(n))
    if n:
        one = SymFunc.constant(1)
        assert coproduct(pow_(n)) == TensorElem.pure(pow_(n), one) + TensorElem.pure(one, pow_(n))


def test_tensor_basics_and_json():
    t = coproduct(m([2, 1]))
    assert t.coeff((2,), (1,)) == 1 and t.coeff((2, 1), ()) == 1
    assert t.swap() == t
    assert t.multiply() == 2 * m([2, 1]) + 2 * m([2]) * m([1])
    row = {"left": [2], "right": [1], "num": "1", "den": "1"}
    assert row in t.to_json()


@given(symfuncs(4))
def test_counit_is_constant_term(p):
    assert counit(p) == epsilon(p)
    assert coproduct(p).contract_factor(1, counit).as_symfunc() == p


@given(symfuncs(3), symfuncs(3))
def test_coproduct_is_multiplicative(p, q):
    assert coproduct(p * q) == coproduct(p) * coproduct(q)


def test_axiom_suite_at_degree_six():
    report = hopf_axiom_suite(6, pi_degree=4)
    assert report.passed, report.failures
    for name in ("coassociativity", "cocommutativity", "counit", "antipode", "bialgebra",
                 "e-h convolution", "pi-morphism"):
        assert report.checks[name] > 0


@given(symfuncs(5))
def test_antipode_convolution(p):
    assert coproduct(p).map_factor(0, antipode).multiply() == SymFunc.constant(counit(p))


# -- transfer operators --------------------------------------------------------------

def test_e_to_h_transfer_is_omega():
    theta = transfer_between(e_genus(), h_genus(), 5)
    assert theta == TransferOp.from_function(omega, 5)
    assert theta.is_coalgebra_map()
    assert theta.compose(theta) == TransferOp.identity(5)
    assert theta.inverse() == theta


def test_species_transfer_uses_product_genera():
    theta = transfer_between(named_species("Inj"), named_species("Lin"), 4)
    assert theta == transfer_between(e_genus(), h_genus(), 4)


def test_non_full_family_is_rejected():
    with pytest.raises(DomainError, match="not full"):
        transfer_between(QuasiGenus(lambda lam: 1), e_genus(), 3)


def test_matrix_round_trip():
    theta = TransferOp.from_function(omega, 4)
    mats = {n: theta.matrix(n) for n in range(5)}
    assert TransferOp.from_matrices(mats, 4) == theta
    assert theta.d([1, 1], [2]) == mats[2][1][0]


def _random_operator(rng, degree):
    coeffs = {lam: rng.randint(-3, 3) for lam in P.partitions_up_to(degree) if rng.random() < 0.5}
    return ShiftInvOp(coeffs, degree)


def _random_symfunc(rng, degree):
    return SymFunc({lam: rng.randint(-3, 3) for lam in P.partitions_up_to(degree) if rng.random() < 0.5})


@pytest.mark.parametrize("seed", range(5))
def test_adjoint_relation_and_transpose(seed):
    rng = random.Random(seed)
    theta = transfer_between(e_genus(), h_genus(), 4)
    star = adjoint(theta)
    for _ in range(10):
        assert adjoint_relation_holds(theta, _random_operator(rng, 4), _random_symfunc(rng, 4))
    for n in range(5):
        for lam in P.partitions_of(n):
            for mu in P.partitions_of(n):
                assert star.c(lam, mu) == theta.d(mu, lam)
    assert adjoint_of_operator_map(star) == theta


def test_species_recovered_from_adjoint_row():
    theta = transfer_between(e_genus(), h_genus(), 6)
    inj, lin = named_species("Inj"), named_species("Lin")
    for n in range(1, 7):
        check = adjoint_row_species_check(theta, inj, lin, n)
        assert check.holds and check.with_multinomial == check.b_n
    assert adjoint_row_species_check(theta, inj, lin, 3).without_multinomial != 6


def test_adjoint_row_of_the_identity():
    assert {k: v for k, v in adjoint_row(TransferOp.identity(3), 3).items() if v} == {(3,): 1}


def test_omega_adjoint_report():
    assert omega_adjoint_report(1).matches_multiplicity_reading
    r = omega_adjoint_report(2)
    assert r.computed[(2,)] == -2 and r.computed[(1, 1)] == 2
    assert not r.matches_multiplicity_reading and not r.matches_part_reading


def test_adjoint_reverses_composition():
    theta = transfer_between(e_genus(), h_genus(), 4)
    phi = transfer_between(named_species("Lin"), named_species("Forest"), 4)
    lhs = adjoint(theta.compose(phi))
    rhs = adjoint(phi).compose(adjoint(theta))
    assert isinstance(lhs, OperatorMap) and lhs == rhs
    assert phi.is_coalgebra_map()
