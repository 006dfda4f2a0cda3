from fractions import Fraction

import pytest

from rahman.matrices import Mat
from rahman.params import ParameterSet
from rahman.sl3 import (
    NotTraceless,
    build,
    dagger,
    r_closed_form,
    tilde_conjugate,
    verify_dagger,
    verify_expansions,
    verify_generation,
    verify_matrices,
)

from conftest import PARAM_MATRIX


def test_r_corner_entry(reference_structure):
    # (p2 p3 - p1 p4) / ((p1+p3)(p2+p4)) at (1,2,3,5)
    assert reference_structure.R[0, 0] == Fraction(1, 28)


@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_matrix_identities(structures, p):
    report = verify_matrices(structures[p])
    assert report.ok, report.first_failure


@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_dagger_tables_and_bracket_law(structures, p):
    report = verify_dagger(structures[p])
    assert report.ok, report.first_failure


@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_expansions(structures, p):
    report = verify_expansions(structures[p])
    assert report.ok, report.first_failure


@pytest.mark.parametrize("p", PARAM_MATRIX, ids=str)
def test_generation(structures, p):
    report = verify_generation(structures[p])
    assert report.ok, report.first_failure


def test_dagger_fixes_cartan_elements(reference_structure):
    s = reference_structure
    assert dagger(s.varphi, s) == s.varphi
    assert dagger(s.phi, s) == s.phi
    assert dagger(s.varphi_t, s) == s.varphi_t
    assert dagger(s.phi_t, s) == s.phi_t


def test_dagger_unit_example(reference_structure):
    s = reference_structure
    eta_t = s.d.eta_t
    assert dagger(s.e[0, 1], s) == s.e[1, 0].scale(eta_t[1] / eta_t[0])
    eta = s.d.eta
    assert dagger(s.e_t[0, 1], s) == s.e_t[1, 0].scale(eta[1] / eta[0])


def test_dagger_requires_traceless(reference_structure):
    with pytest.raises(NotTraceless):
        dagger(Mat.identity(3), reference_structure)


def test_tilde_conjugate(reference_structure):
    s = reference_structure
    assert tilde_conjugate(Mat.identity(3), s) == Mat.identity(3)
    assert tilde_conjugate(s.varphi, s) == s.varphi_t
    assert tilde_conjugate(s.phi, s) == s.phi_t


def test_tilde_cartan_is_abelian(reference_structure):
    s = reference_structure
    assert s.varphi_t.bracket(s.phi_t) == Mat.zero(3)


def test_trace_preserved_by_conjugation(reference_structure):
    s = reference_structure
    for beta in list(s.e.values()) + [s.varphi, s.phi]:
        assert tilde_conjugate(beta, s).trace() == 0
        assert dagger(beta, s).trace() == 0


def test_corrupted_r_entry_is_caught(reference_params):
    """The expansion verifier must detect a perturbed transition matrix."""
    import dataclasses

    s = build(reference_params)
    bad_r = s.R.replace_entry(1, 1, s.R[1, 1] + 1)
    corrupted = dataclasses.replace(
        s,
        R=bad_r,
        varphi_t=bad_r @ s.varphi @ s.Rinv,
        phi_t=bad_r @ s.phi @ s.Rinv,
    )
    assert not verify_expansions(corrupted).ok


def test_closed_form_matches_factored_form():
    p = ParameterSet.of(3, 4, 1, 9)
    assert build(p).R == r_closed_form(p)
