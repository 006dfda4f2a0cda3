"""Parameter intake, validation, and every derived constant.

Four nonzero rationals p1..p4 drive the whole construction.  A handful
of their combinations occur as denominators throughout the formulas, so
those combinations are forbidden; ``validate`` enumerates exactly that
list and names the first offender.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .scalars import Rational, parse_rational

__all__ = [
    "ParameterSet",
    "DerivedParams",
    "ValidationError",
    "validate",
    "derive",
    "load_params_file",
]


class ValidationError(ValueError):
    """A forbidden parameter combination (zero denominator).

    ``expression`` names the combination that vanished, e.g. "p1+p2".
    """

    def __init__(self, expression: str):
        self.expression = expression
        super().__init__(f"zero denominator: {expression} = 0")


@dataclass(frozen=True)
class ParameterSet:
    p1: Rational
    p2: Rational
    p3: Rational
    p4: Rational

    @classmethod
    def of(cls, p1, p2, p3, p4) -> "ParameterSet":
        return cls(Fraction(p1), Fraction(p2), Fraction(p3), Fraction(p4))

    def as_tuple(self):
        return (self.p1, self.p2, self.p3, self.p4)


@dataclass(frozen=True)
class DerivedParams:
    """All constants derived from a valid ParameterSet.

    ``eta`` and ``eta_t`` are the two weight triples (each sums to 1 and
    starts with 1/nu); ``k`` and ``k_t`` are their nu-rescalings with
    k[0] = k_t[0] = 1; ``theta`` and ``theta_t`` are the two basis
    normalization scalars with theta * theta_t = nu.
    """

    t: Rational
    u: Rational
    v: Rational
    w: Rational
    nu: Rational
    eta: tuple
    eta_t: tuple
    k: tuple
    k_t: tuple
    theta: Rational
    theta_t: Rational


def validate(p: ParameterSet):
    """Raise ValidationError on the first vanishing denominator, else return p.

    The forbidden combinations are: any p_i = 0; the pair sums p1+p2,
    p1+p3, p2+p4, p3+p4; the total p1+p2+p3+p4; and the determinant
    p1*p4 - p2*p3.
    """
    p1, p2, p3, p4 = p.as_tuple()
    checks = [
        (p1, "p1"),
        (p2, "p2"),
        (p3, "p3"),
        (p4, "p4"),
        (p1 + p2, "p1+p2"),
        (p1 + p3, "p1+p3"),
        (p2 + p4, "p2+p4"),
        (p3 + p4, "p3+p4"),
        (p1 + p2 + p3 + p4, "p1+p2+p3+p4"),
        (p1 * p4 - p2 * p3, "p1p4-p2p3"),
    ]
    for value, name in checks:
        if value == 0:
            raise ValidationError(name)
    return p


def derive(p: ParameterSet) -> DerivedParams:
    """Compute every derived constant from a validated parameter set."""
    validate(p)
    p1, p2, p3, p4 = p.as_tuple()
    total = p1 + p2 + p3 + p4
    det = p2 * p3 - p1 * p4  # nonzero by validation

    t = (p1 + p2) * (p1 + p3) / (p1 * total)
    u = (p1 + p3) * (p3 + p4) / (p3 * total)
    v = (p1 + p2) * (p2 + p4) / (p2 * total)
    w = (p2 + p4) * (p3 + p4) / (p4 * total)

    nu = (p1 + p2) * (p1 + p3) * (p2 + p4) * (p3 + p4) / det**2

    eta0 = 1 / nu
    eta1 = p1 * p2 * total / ((p1 + p2) * (p1 + p3) * (p2 + p4))
    eta2 = p3 * p4 * total / ((p1 + p3) * (p2 + p4) * (p3 + p4))
    eta_t1 = p1 * p3 * total / ((p1 + p2) * (p1 + p3) * (p3 + p4))
    eta_t2 = p2 * p4 * total / ((p1 + p2) * (p2 + p4) * (p3 + p4))

    eta = (eta0, eta1, eta2)
    eta_t = (eta0, eta_t1, eta_t2)

    theta = (p1 + p3) * (p2 + p4) / det
    theta_t = (p1 + p2) * (p3 + p4) / det

    return DerivedParams(
        t=t,
        u=u,
        v=v,
        w=w,
        nu=nu,
        eta=eta,
        eta_t=eta_t,
        k=tuple(nu * e for e in eta_t),
        k_t=tuple(nu * e for e in eta),
        theta=theta,
        theta_t=theta_t,
    )


def load_params_file(path) -> tuple:
    """Read a JSON parameter file: {"p": ["1","2","3","5"], "N": 4}.

    Returns (ParameterSet, N) where N is None if absent.
    """
    with open(path) as handle:
        data = json.load(handle)
    values = [parse_rational(str(x)) for x in data["p"]]
    if len(values) != 4:
        raise ValueError(f"expected 4 parameters, got {len(values)}")
    n = data.get("N")
    if n is not None:
        n = int(n)
        if n < 0:
            raise ValueError("N must be nonnegative")
    return ParameterSet(*values), n
