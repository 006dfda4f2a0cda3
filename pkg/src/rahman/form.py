"""The symmetric bilinear form on the degree-N module.

The form is defined once, by its diagonal Gram values on the plain
monomial basis; every statement about the tilde side is checked through
explicit expansion rather than assumed.  Norms may be negative for some
parameter regimes: the form is bilinear, not an inner product.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .polymodule import (
    DegreeMismatch,
    Poly3,
    act,
    expand_tilde_monomial_direct,
    lattice,
)
from .report import Recorder, Report
from .scalars import format_rational
from .sl3 import StructureSet, dagger

__all__ = [
    "BilinearForm",
    "inner",
    "dual_basis",
    "verify_adjointness",
    "verify_tilde_norms",
    "verify_dual_sum_identities",
]


class BilinearForm:
    """Diagonal Gram data for degree n: ||x^r y^s z^t||^2 in lattice order."""

    def __init__(self, s: StructureSet, n: int):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        self.n = n
        self.s = s
        eta_t = s.d.eta_t
        theta_n = s.d.theta**n
        self.gram = {
            (r, st, t): Fraction(factorial(r) * factorial(st) * factorial(t))
            * theta_n
            / (eta_t[0] ** r * eta_t[1] ** st * eta_t[2] ** t)
            for (r, st, t) in lattice(n)
        }
        # Cache for tilde-monomial expansions; they are dense and reused
        # heavily by the theorem verifiers.
        self._tilde_cache: dict = {}

    def expand(self, xi: Poly3) -> Poly3:
        """Plain-basis coordinates of a polynomial in either basis."""
        if xi.kind == "plain":
            return xi
        result = Poly3.zero()
        for key, coeff in xi.coeffs.items():
            if key not in self._tilde_cache:
                self._tilde_cache[key] = expand_tilde_monomial_direct(*key, self.s)
            result = result + self._tilde_cache[key].scale(coeff)
        return result

    def gram_json(self) -> list:
        return [format_rational(self.gram[key]) for key in lattice(self.n)]


def inner(xi: Poly3, zeta: Poly3, f: BilinearForm, s: StructureSet) -> Fraction:
    """Evaluate the form; tilde inputs are expanded to plain coordinates."""
    for arg in (xi, zeta):
        if not arg.is_zero() and arg.degree != f.n:
            raise DegreeMismatch(f"degree {arg.degree}, form has degree {f.n}")
    left = f.expand(xi)
    right = f.expand(zeta)
    keys = left.coeffs.keys() & right.coeffs.keys()
    return sum(
        (f.gram[key] * left.coeffs[key] * right.coeffs[key] for key in keys),
        Fraction(0),
    )


def dual_basis(f: BilinearForm, s: StructureSet, kind: str = "plain") -> list:
    """The basis dual to the monomial basis of the chosen kind.

    Plain kind: (eta~_0^r eta~_1^s eta~_2^t / r!s!t!) x^r y^s z^t / theta^N.
    Tilde kind: the eta / theta~ analogue on the tilde monomials.
    """
    if kind == "plain":
        weights, norm = f.s.d.eta_t, f.s.d.theta ** f.n
    elif kind == "tilde":
        weights, norm = f.s.d.eta, f.s.d.theta_t ** f.n
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    out = []
    for (r, st, t) in lattice(f.n):
        coeff = (
            weights[0] ** r * weights[1] ** st * weights[2] ** t
            / Fraction(factorial(r) * factorial(st) * factorial(t))
            / norm
        )
        out.append(Poly3.monomial(r, st, t, coeff, kind=kind))
    return out


def verify_adjointness(f: BilinearForm, s: StructureSet, n: int) -> Report:
    """<beta xi, zeta> = <xi, beta^dagger zeta> over the whole basis grid."""
    rec = Recorder(f"form.adjointness.N{n}")
    points = lattice(n)
    basis = s.cartan_basis()
    monomials = [Poly3.monomial(*point) for point in points]
    for name, beta in basis.items():
        beta_dag = dagger(beta, s)
        for xi in monomials:
            images = act(beta, xi, s)
            for zeta in monomials:
                rec.equal(
                    inner(images, zeta, f, s),
                    inner(xi, act(beta_dag, zeta, s), f, s),
                    f"beta={name}, xi={xi.coeffs}, zeta={zeta.coeffs}",
                )
    return rec.report()


def verify_tilde_norms(f: BilinearForm, s: StructureSet, n: int) -> Report:
    """Tilde monomials are orthogonal with the stated norm formula.

    Oracle: plain-basis expansion plus the defining Gram data.
    """
    rec = Recorder(f"form.tilde_norms.N{n}")
    eta = s.d.eta
    theta_t_n = s.d.theta_t**n
    points = lattice(n)
    for i, lam in enumerate(points):
        for mu in points[i:]:
            value = inner(
                Poly3.monomial(*lam, kind="tilde"),
                Poly3.monomial(*mu, kind="tilde"),
                f,
                s,
            )
            if lam == mu:
                r, st, t = lam
                expected = (
                    Fraction(factorial(r) * factorial(st) * factorial(t))
                    * theta_t_n
                    / (eta[0] ** r * eta[1] ** st * eta[2] ** t)
                )
                rec.equal(value, expected, f"norm at {lam}")
            else:
                rec.equal(value, Fraction(0), f"orthogonality at {lam}, {mu}")
    return rec.report()


def verify_dual_sum_identities(f: BilinearForm, s: StructureSet, n: int) -> Report:
    """Both uniform dual-sum identities, at scale N! nu^N.

    The sum of the plain dual basis reconstructs x~^N, and symmetrically
    the sum of the tilde dual basis reconstructs x^N: pairing x^N with
    any tilde monomial gives the same value N! nu^N, so its tilde-dual
    coordinates are constant (and the mirror argument on the plain side).
    """
    rec = Recorder(f"form.dual_sums.N{n}")
    scale = Fraction(factorial(n)) * s.d.nu**n

    plain_sum = Poly3.zero()
    for vector in dual_basis(f, s, "plain"):
        plain_sum = plain_sum + vector
    rec.equal(
        f.expand(Poly3.monomial(n, 0, 0, kind="tilde")),
        plain_sum.scale(scale),
        "plain dual sum vs x~^N",
    )

    tilde_sum = Poly3.zero(kind="tilde")
    for vector in dual_basis(f, s, "tilde"):
        tilde_sum = tilde_sum + vector
    rec.equal(
        Poly3.monomial(n, 0, 0),
        f.expand(tilde_sum.scale(scale)),
        "tilde dual sum vs x^N",
    )

    # Duality itself: pairing each basis with its claimed dual is the
    # identity matrix.
    for kind in ("plain", "tilde"):
        duals = dual_basis(f, s, kind)
        monomials = [Poly3.monomial(*pt, kind=kind) for pt in lattice(n)]
        for i, xi in enumerate(monomials):
            for j, eta_vec in enumerate(duals):
                rec.equal(
                    inner(xi, eta_vec, f, s),
                    Fraction(int(i == j)),
                    f"{kind} duality entry ({i},{j})",
                )
    return rec.report()
