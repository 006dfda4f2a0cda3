import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rahman.params import (
    ParameterSet,
    ValidationError,
    derive,
    load_params_file,
    validate,
)

nonzero_rationals = st.fractions(
    min_value=-30, max_value=30, max_denominator=6
).filter(lambda q: q != 0)


def valid_parameter_sets():
    def accept(values):
        try:
            validate(ParameterSet(*values))
            return True
        except ValidationError:
            return False

    return st.tuples(
        nonzero_rationals, nonzero_rationals, nonzero_rationals, nonzero_rationals
    ).filter(accept).map(lambda v: ParameterSet(*v))


def test_validate_accepts_reference_set():
    validate(ParameterSet.of(1, 2, 3, 5))


def test_validate_zero_determinant():
    with pytest.raises(ValidationError) as err:
        validate(ParameterSet.of(1, 2, 3, 6))
    assert err.value.expression == "p1p4-p2p3"


def test_validate_zero_pair_sum():
    with pytest.raises(ValidationError) as err:
        validate(ParameterSet.of(1, -1, 3, 5))
    assert err.value.expression == "p1+p2"


def test_validate_zero_parameter():
    with pytest.raises(ValidationError) as err:
        validate(ParameterSet.of(0, 2, 3, 5))
    assert err.value.expression == "p1"


def test_derive_reference_constants():
    d = derive(ParameterSet.of(1, 2, 3, 5))
    assert d.nu == 672
    assert d.theta == 28
    assert d.theta_t == 24
    assert d.eta == (Fraction(1, 672), Fraction(11, 42), Fraction(165, 224))
    assert d.eta_t == (Fraction(1, 672), Fraction(11, 32), Fraction(55, 84))


def test_derive_rejects_invalid():
    with pytest.raises(ValidationError):
        derive(ParameterSet.of(1, 2, 3, 6))


@given(valid_parameter_sets())
def test_derived_invariants(p):
    d = derive(p)
    assert sum(d.eta) == 1
    assert sum(d.eta_t) == 1
    assert d.eta[0] == d.eta_t[0] == 1 / d.nu
    assert d.theta * d.theta_t == d.nu
    assert d.k[0] == 1 and d.k_t[0] == 1
    assert d.k == tuple(d.nu * e for e in d.eta_t)
    assert d.k_t == tuple(d.nu * e for e in d.eta)
    for group in (d.eta, d.eta_t, d.k, d.k_t, (d.t, d.u, d.v, d.w, d.nu, d.theta, d.theta_t)):
        assert all(x != 0 for x in group)


def test_load_params_file(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({"p": ["1", "2", "3", "5"], "N": 4}))
    p, n = load_params_file(path)
    assert p == ParameterSet.of(1, 2, 3, 5)
    assert n == 4


def test_load_params_file_without_n(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({"p": ["-1/11", "2", "3", "5"]}))
    p, n = load_params_file(path)
    assert p.p1 == Fraction(-1, 11)
    assert n is None
