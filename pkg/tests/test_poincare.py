"""q-multinomials, strata, fibration dimensions, Poincare polynomials."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from quivergrass.families import (
    catenoid_representations,
    complexes_instance,
    degflag_instance,
    dimension_vectors_upto,
)
from quivergrass.poincare import (
    QPolynomial,
    euler_characteristic,
    fiber_dim,
    poincare_cells,
    poincare_formula,
    q_binomial,
    q_multinomial,
    strata,
    stratum_of_chain,
)
from quivergrass.reps import Representation, dimension_vector, is_nonempty
from quivergrass.schubert import (
    GuardExceededError,
    build_frame,
    enumerate_fixed_points,
)

from oracles import fibonacci, q_multinomial_by_factorials


# ---------------------------------------------------------------------------
# QPolynomial
# ---------------------------------------------------------------------------

def test_qpolynomial_canonical_form():
    assert QPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert QPolynomial(()).coefficients == ()
    assert QPolynomial((0,)).is_zero()
    with pytest.raises(ValueError):
        QPolynomial((1, -1))


def test_qpolynomial_arithmetic_and_eval():
    p = QPolynomial((1, 1))
    q = QPolynomial((1, 1, 1))
    assert (p * q).coefficients == (1, 2, 2, 1)
    assert (p + q).coefficients == (2, 2, 1)
    assert (p * q)(1) == 6
    assert QPolynomial()(5) == 0
    assert QPolynomial.monomial(3, 2).coefficients == (0, 0, 0, 2)


def test_qpolynomial_str():
    assert str(QPolynomial()) == "0"
    assert str(QPolynomial((1, 2))) == "1 + 2*q"
    assert str(QPolynomial((1, 0, 1))) == "1 + q^2"
    assert str(QPolynomial((0, 0, 3))) == "3*q^2"


# ---------------------------------------------------------------------------
# q-multinomials
# ---------------------------------------------------------------------------

def test_q_multinomial_examples():
    assert q_multinomial(2, (1,)).coefficients == (1, 1)
    assert q_multinomial(5, ()).coefficients == (1,)
    assert q_multinomial(3, (1, 2)).coefficients == (1, 2, 2, 1)


def test_q_multinomial_domain_errors():
    with pytest.raises(ValueError):
        q_multinomial(2, (2, 1))
    with pytest.raises(ValueError):
        q_multinomial(2, (1, 3))


@pytest.mark.parametrize("m", range(0, 7))
def test_q_multinomial_matches_factorial_division(m):
    def flag_types(m, length):
        if length == 0:
            yield ()
            return
        for rest in flag_types(m, length - 1):
            start = rest[-1] if rest else 0
            for t in range(start, m + 1):
                yield rest + (t,)

    for length in range(0, 3):
        for dims in flag_types(m, length):
            got = q_multinomial(m, dims).coefficients
            assert list(got) == q_multinomial_by_factorials(m, dims)


@given(st.integers(0, 8), st.integers(0, 8))
def test_q_binomial_symmetry_and_value_at_one(n, k):
    p = q_binomial(n, k)
    assert p.coefficients == tuple(reversed(p.coefficients))  # palindromic
    from math import comb

    assert p(1) == comb(n, k)


# ---------------------------------------------------------------------------
# Strata and fibration dimensions
# ---------------------------------------------------------------------------

def test_strata_complexes_2():
    M, e = complexes_instance(2)
    decs = strata(M, e)
    assert len(decs) == 3
    assert set(decs) == {
        ((1, 0), (0, 1), (0, 0)),
        ((1, 0), (0, 0), (0, 1)),
        ((0, 0), (1, 1), (0, 0)),
    }


def test_strata_zero_vector():
    M, _ = complexes_instance(2)
    assert strata(M, (0, 0)) == [((0, 0), (0, 0), (0, 0))]


def test_strata_single_summand():
    M = Representation(3, {(1, 2): 2})
    assert strata(M, (1, 2, 0)) == [((1, 2, 0),)]
    assert strata(M, (2, 1, 0)) == []  # not weakly increasing on the support
    assert strata(M, (0, 3, 0)) == []  # exceeds the multiplicity


def test_fiber_dim_complexes_2():
    M, _ = complexes_instance(2)
    assert fiber_dim(M, ((1, 0), (0, 1), (0, 0))) == 0
    assert fiber_dim(M, ((1, 0), (0, 0), (0, 1))) == 1
    assert fiber_dim(M, ((0, 0), (1, 1), (0, 0))) == 1


def test_fiber_dim_first_block_is_free():
    M = Representation(2, {(1, 1): 2, (1, 2): 1})
    # all of e carried by the first block: nothing to move against
    assert fiber_dim(M, ((2, 0), (0, 0))) == 0


# ---------------------------------------------------------------------------
# Poincare polynomials
# ---------------------------------------------------------------------------

def test_poincare_complexes_2():
    M, e = complexes_instance(2)
    assert poincare_formula(M, e).coefficients == (1, 2)
    assert poincare_cells(build_frame(M, e)).coefficients == (1, 2)


def test_poincare_degflag_2():
    M, e = degflag_instance(2)
    assert poincare_formula(M, e).coefficients == (1, 2, 3, 1)
    assert poincare_cells(build_frame(M, e)).coefficients == (1, 2, 3, 1)


def test_poincare_single_summand_is_the_multinomial():
    M = Representation(3, {(2, 3): 4})
    e = (0, 1, 3)
    assert poincare_formula(M, e) == q_multinomial(4, (1, 3))


def test_poincare_cells_projective_line():
    M = Representation(1, {(1, 1): 2})
    assert poincare_cells(build_frame(M, (1,))).coefficients == (1, 1)


def test_poincare_cells_empty_instance():
    M = Representation(2, {(2, 2): 1})
    assert poincare_cells(build_frame(M, (1, 0))).is_zero()


@pytest.mark.parametrize("n,chi", [(1, 2), (2, 7), (3, 38), (4, 295)])
def test_degflag_euler_characteristics(n, chi):
    M, e = degflag_instance(n)
    assert euler_characteristic(M, e) == chi
    assert len(enumerate_fixed_points(build_frame(M, e))) == chi


@pytest.mark.parametrize("n", range(1, 9))
def test_complexes_euler_is_fibonacci(n):
    M, e = complexes_instance(n)
    assert euler_characteristic(M, e) == fibonacci(n + 2)


def test_euler_characteristic_of_a_point():
    M = Representation(2, {(1, 2): 1})
    assert euler_characteristic(M, (0, 0)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_formula_equals_cells_on_both_families(n):
    for M, e in (degflag_instance(n), complexes_instance(n)):
        assert poincare_formula(M, e) == poincare_cells(build_frame(M, e))


@pytest.mark.parametrize("n", range(1, 4))
def test_formula_equals_cells_exhaustively_small(n):
    for M in catenoid_representations(n, 4):
        for e in dimension_vectors_upto(dimension_vector(M)):
            frame = build_frame(M, e)
            cells = poincare_cells(frame)
            assert poincare_formula(M, e) == cells
            assert cells(1) == len(enumerate_fixed_points(frame))


def test_strata_guard():
    M, e = degflag_instance(3)
    with pytest.raises(GuardExceededError):
        poincare_formula(M, e, guard=3)


def test_stratum_of_chain_refines_the_fixed_points():
    M, e = degflag_instance(2)
    frame = build_frame(M, e)
    seen = {}
    for K in enumerate_fixed_points(frame):
        dec = stratum_of_chain(frame, K)
        assert tuple(sum(v[a] for v in dec) for a in range(frame.n)) == tuple(e)
        seen[dec] = seen.get(dec, 0) + 1
    assert set(seen) == set(strata(M, e))
    # weighted by ordinary multinomials the strata cover all fixed points
    assert sum(seen.values()) == 7
