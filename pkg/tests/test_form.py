from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from rahman.form import (
    BilinearForm,
    dual_basis,
    inner,
    verify_adjointness,
    verify_dual_sum_identities,
    verify_tilde_norms,
)
from rahman.polymodule import DegreeMismatch, Poly3, lattice

from conftest import PARAM_MATRIX


@pytest.fixture(scope="module")
def forms(structures):
    return {
        (p, n): BilinearForm(structures[p], n)
        for p in PARAM_MATRIX
        for n in range(0, 5)
    }


def test_monomial_norm_formula(reference_structure):
    s = reference_structure
    for n in range(0, 4):
        f = BilinearForm(s, n)
        xn = Poly3.monomial(n, 0, 0)
        expected = Fraction(factorial(n)) * s.d.theta**n / s.d.eta_t[0] ** n
        assert inner(xn, xn, f, s) == expected


def test_distinct_monomials_are_orthogonal(reference_structure):
    s = reference_structure
    f = BilinearForm(s, 3)
    points = lattice(3)
    for i, a in enumerate(points):
        for b in points[i + 1:]:
            assert inner(Poly3.monomial(*a), Poly3.monomial(*b), f, s) == 0


def test_gram_diagonal_nonzero(reference_structure):
    f = BilinearForm(reference_structure, 4)
    assert all(value != 0 for value in f.gram.values())


def test_mixed_basis_spot_value(reference_structure):
    s = reference_structure
    f = BilinearForm(s, 1)
    y = Poly3.monomial(0, 1, 0)
    xt = Poly3.monomial(1, 0, 0, kind="tilde")
    assert inner(y, xt, f, s) == 672


def test_degree_mismatch(reference_structure):
    f = BilinearForm(reference_structure, 2)
    with pytest.raises(DegreeMismatch):
        inner(Poly3.monomial(1, 0, 0), Poly3.monomial(1, 1, 0), f, reference_structure)


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.sampled_from(lattice(2)),
    st.sampled_from(lattice(2)),
    st.sampled_from(lattice(2)),
)
@settings(max_examples=50, deadline=None)
def test_symmetry_and_bilinearity(a, b, pa, pb, pc):
    from rahman.params import ParameterSet
    from rahman.sl3 import build

    s = build(ParameterSet.of(1, 2, 3, 5))
    f = BilinearForm(s, 2)
    xi = Poly3.monomial(*pa, a if a != 0 else 1) + Poly3.monomial(*pb, b)
    zeta = Poly3.monomial(*pc)
    assert inner(xi, zeta, f, s) == inner(zeta, xi, f, s)
    assert inner(xi + zeta, zeta, f, s) == inner(xi, zeta, f, s) + inner(zeta, zeta, f, s)
    assert inner(xi.scale(3), zeta, f, s) == 3 * inner(xi, zeta, f, s)


def test_dual_basis_pairing_is_identity(reference_structure):
    s = reference_structure
    for n in (0, 2, 3):
        f = BilinearForm(s, n)
        for kind in ("plain", "tilde"):
            duals = dual_basis(f, s, kind)
            monomials = [Poly3.monomial(*pt, kind=kind) for pt in lattice(n)]
            for i, xi in enumerate(monomials):
                for j, dual in enumerate(duals):
                    assert inner(xi, dual, f, s) == int(i == j)


def test_tilde_base_norm(reference_structure):
    s = reference_structure
    n = 3
    f = BilinearForm(s, n)
    xt_n = Poly3.monomial(n, 0, 0, kind="tilde")
    assert inner(xt_n, xt_n, f, s) == (
        Fraction(factorial(n)) * s.d.theta_t**n / s.d.eta[0] ** n
    )


@pytest.mark.parametrize("n", [0, 2, 3])
@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_adjointness(structures, forms, p, n):
    report = verify_adjointness(forms[p, n], structures[p], n)
    assert report.ok, report.first_failure


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_tilde_norms(structures, forms, p, n):
    report = verify_tilde_norms(forms[p, n], structures[p], n)
    assert report.ok, report.first_failure


@pytest.mark.parametrize("n", [0, 1, 3])
@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_dual_sum_identities(structures, forms, p, n):
    report = verify_dual_sum_identities(forms[p, n], structures[p], n)
    assert report.ok, report.first_failure
