"""The 3x3 structural layer: both Cartan subalgebras and the dagger map.

``build`` assembles every structural matrix from a parameter set: the
two weight matrices W, W~, the transition matrix R between the plain
and tilde coordinates, the Cartan basis elements and their tilde
conjugates, and all matrix units.  The verifiers in this module check
the identities that tie these objects together, always comparing an
independently computed left side against a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .matrices import Mat
from .params import DerivedParams, ParameterSet, derive, validate
from .report import Recorder, Report

__all__ = [
    "NotTraceless",
    "StructureSet",
    "build",
    "dagger",
    "tilde_conjugate",
    "r_closed_form",
    "rinv_closed_form",
    "expansion_coefficients",
    "verify_matrices",
    "verify_dagger",
    "verify_expansions",
    "verify_generation",
]

OFF_DIAGONAL = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


class NotTraceless(ValueError):
    """Raised when an operation requires a trace-zero matrix."""


@dataclass(frozen=True)
class StructureSet:
    p: ParameterSet
    d: DerivedParams
    U: Mat
    W: Mat
    Wt: Mat
    R: Mat
    Rinv: Mat
    varphi: Mat       # diag(-1/3, 2/3, -1/3)
    phi: Mat          # diag(-1/3, -1/3, 2/3)
    psi: Mat          # -varphi - phi
    varphi_t: Mat     # R varphi R^-1
    phi_t: Mat        # R phi R^-1
    psi_t: Mat        # -varphi_t - phi_t
    e: dict           # (i, j) -> matrix unit e_ij, i != j
    e_t: dict         # (i, j) -> R e_ij R^-1

    def cartan_basis(self) -> dict:
        """The 8-element spanning set used by the dagger and bracket checks."""
        basis = {f"e{i}{j}": self.e[i, j] for i, j in OFF_DIAGONAL}
        basis["varphi"] = self.varphi
        basis["phi"] = self.phi
        return basis

    def tilde_basis(self) -> dict:
        basis = {f"e~{i}{j}": self.e_t[i, j] for i, j in OFF_DIAGONAL}
        basis["varphi~"] = self.varphi_t
        basis["phi~"] = self.phi_t
        return basis

    def with_corrupted_eta_t(self, index: int, delta) -> "StructureSet":
        """Rebuild with eta_t[index] shifted by delta (verifier power tests)."""
        eta_t = list(self.d.eta_t)
        eta_t[index] += Fraction(delta)
        corrupted = replace(self.d, eta_t=tuple(eta_t))
        return build(self.p, corrupted)


def build(p: ParameterSet, d: DerivedParams | None = None) -> StructureSet:
    """Assemble the full structure from p (optionally with preset constants).

    Passing an inconsistent ``d`` is allowed on purpose: the verifiers
    must be able to catch a corrupted constant.
    """
    validate(p)
    if d is None:
        d = derive(p)

    one = Fraction(1)
    U = Mat([
        [one, one, one],
        [one, 1 - d.t, 1 - d.v],
        [one, 1 - d.u, 1 - d.w],
    ])
    W = Mat.diag(d.eta)
    Wt = Mat.diag(d.eta_t)
    R = (Wt @ U.transpose()).scale(d.theta_t)
    Rinv = (W @ U).scale(d.theta)

    third = Fraction(1, 3)
    varphi = Mat.diag([-third, 2 * third, -third])
    phi = Mat.diag([-third, -third, 2 * third])

    e = {(i, j): Mat.unit(3, i, j) for i, j in OFF_DIAGONAL}
    e_t = {key: R @ mat @ Rinv for key, mat in e.items()}
    varphi_t = R @ varphi @ Rinv
    phi_t = R @ phi @ Rinv

    return StructureSet(
        p=p,
        d=d,
        U=U,
        W=W,
        Wt=Wt,
        R=R,
        Rinv=Rinv,
        varphi=varphi,
        phi=phi,
        psi=-varphi - phi,
        varphi_t=varphi_t,
        phi_t=phi_t,
        psi_t=-varphi_t - phi_t,
        e=e,
        e_t=e_t,
    )


def dagger(beta: Mat, s: StructureSet) -> Mat:
    """The antiautomorphism: beta -> W~ beta^t W~^-1.

    Requires a traceless argument; fixes both Cartan subalgebras.
    """
    if beta.trace() != 0:
        raise NotTraceless(f"trace is {beta.trace()}, expected 0")
    return s.Wt @ beta.transpose() @ s.Wt.inverse()


def tilde_conjugate(beta: Mat, s: StructureSet) -> Mat:
    """Conjugation by the transition matrix: beta -> R beta R^-1."""
    return s.R @ beta @ s.Rinv


def r_closed_form(p: ParameterSet) -> Mat:
    """The entrywise closed form of R, transcribed independently of build."""
    p1, p2, p3, p4 = p.as_tuple()
    total = p1 + p2 + p3 + p4
    det = p2 * p3 - p1 * p4
    top = det / ((p1 + p3) * (p2 + p4))
    return Mat([
        [top, top, top],
        [p1 * p3 * total / ((p1 + p3) * det), -p3 / (p1 + p3), p1 / (p1 + p3)],
        [p2 * p4 * total / ((p2 + p4) * det), p4 / (p2 + p4), -p2 / (p2 + p4)],
    ])


def rinv_closed_form(p: ParameterSet) -> Mat:
    """The entrywise closed form of R^-1."""
    p1, p2, p3, p4 = p.as_tuple()
    total = p1 + p2 + p3 + p4
    det = p2 * p3 - p1 * p4
    top = det / ((p1 + p2) * (p3 + p4))
    return Mat([
        [top, top, top],
        [p1 * p2 * total / ((p1 + p2) * det), -p2 / (p1 + p2), p1 / (p1 + p2)],
        [p3 * p4 * total / ((p3 + p4) * det), p4 / (p3 + p4), -p3 / (p3 + p4)],
    ])


def expansion_coefficients(p: ParameterSet) -> dict:
    """Coefficient tables for the four cross-basis expansions.

    Keys "varphi_t" and "phi_t" expand the tilde Cartan generators in
    the plain basis {e_ij, varphi, phi}; keys "varphi" and "phi" expand
    the plain generators in the tilde basis.  Each value maps the six
    off-diagonal labels "eIJ" plus "h1", "h2" (the two diagonal basis
    elements of the target side) to its coefficient.

    The same coefficients reappear, with shift prefactors, in the four
    seven-term recurrences, so this is their single source.
    """
    p1, p2, p3, p4 = p.as_tuple()
    total = p1 + p2 + p3 + p4
    a, b, c, dd = p1 + p2, p1 + p3, p2 + p4, p3 + p4
    g = p2 * p3 - p1 * p4

    return {
        "varphi_t": {
            "e01": -p2 * g / (a * b * c),
            "e02": p1 * g / (a * b * c),
            "e10": -p1 * p2 * p3 * total / (a * b * g),
            "e12": -p1 * p3 / (a * b),
            "e20": p1 * p2 * p4 * total / (a * c * g),
            "e21": -p2 * p4 / (a * c),
            "h1": p2 * p3 / (a * b) - p1 * p2 * total / (a * b * c),
            "h2": p1 * p4 / (a * c) - p1 * p2 * total / (a * b * c),
        },
        "phi_t": {
            "e01": p4 * g / (b * dd * c),
            "e02": -p3 * g / (b * dd * c),
            "e10": p1 * p3 * p4 * total / (b * dd * g),
            "e12": -p1 * p3 / (b * dd),
            "e20": -p2 * p3 * p4 * total / (c * dd * g),
            "e21": -p2 * p4 / (c * dd),
            "h1": p1 * p4 / (b * dd) - p3 * p4 * total / (b * dd * c),
            "h2": p2 * p3 / (c * dd) - p3 * p4 * total / (b * dd * c),
        },
        "varphi": {
            "e01": -p3 * g / (a * b * dd),
            "e02": p1 * g / (a * b * dd),
            "e10": -p1 * p2 * p3 * total / (a * b * g),
            "e12": -p1 * p2 / (a * b),
            "e20": p1 * p3 * p4 * total / (b * dd * g),
            "e21": -p3 * p4 / (b * dd),
            "h1": p2 * p3 / (a * b) - p1 * p3 * total / (a * b * dd),
            "h2": p1 * p4 / (b * dd) - p1 * p3 * total / (a * b * dd),
        },
        "phi": {
            "e01": p4 * g / (a * c * dd),
            "e02": -p2 * g / (a * c * dd),
            "e10": p1 * p2 * p4 * total / (a * c * g),
            "e12": -p1 * p2 / (a * c),
            "e20": -p2 * p3 * p4 * total / (c * dd * g),
            "e21": -p3 * p4 / (c * dd),
            "h1": p1 * p4 / (a * c) - p2 * p4 * total / (a * c * dd),
            "h2": p2 * p3 / (c * dd) - p2 * p4 * total / (a * c * dd),
        },
    }


def _combine(coeffs: dict, units: dict, h1: Mat, h2: Mat) -> Mat:
    result = Mat.zero(3)
    for (i, j) in OFF_DIAGONAL:
        result = result + units[i, j].scale(coeffs[f"e{i}{j}"])
    return result + h1.scale(coeffs["h1"]) + h2.scale(coeffs["h2"])


def verify_matrices(s: StructureSet) -> Report:
    """Cross-check R and R^-1 against their closed forms and the W identities."""
    rec = Recorder("structure.matrices")
    identity = Mat.identity(3)

    rec.equal(s.R, r_closed_form(s.p), "R factored vs closed form")
    rec.equal(s.Rinv, rinv_closed_form(s.p), "R^-1 factored vs closed form")
    rec.equal(s.R @ s.Rinv, identity, "R R^-1")
    rec.equal(
        (s.W @ s.U @ s.Wt @ s.U.transpose()).scale(s.d.nu),
        identity,
        "nu W U W~ U^t",
    )
    rec.equal(
        s.R @ s.W @ s.R.transpose(),
        s.Wt.scale(s.d.theta_t / s.d.theta),
        "R W R^t vs (theta~/theta) W~",
    )
    return rec.report()


def verify_dagger(s: StructureSet) -> Report:
    """Involution, both transformation tables, and the bracket law."""
    rec = Recorder("structure.dagger")
    eta = s.d.eta
    eta_t = s.d.eta_t

    plain = s.cartan_basis()
    tilde = s.tilde_basis()
    everything = {**plain, **tilde}

    for name, beta in everything.items():
        rec.equal(dagger(dagger(beta, s), s), beta, f"involution on {name}")
        rec.check(dagger(beta, s).trace() == 0, f"trace preserved on {name}")

    # Plain table: e_ij -> e_ji * eta~_j / eta~_i; fixes varphi, phi.
    for (i, j) in OFF_DIAGONAL:
        expected = s.e[j, i].scale(eta_t[j] / eta_t[i])
        rec.equal(dagger(s.e[i, j], s), expected, f"table1 e{i}{j}")
    rec.equal(dagger(s.varphi, s), s.varphi, "table1 varphi")
    rec.equal(dagger(s.phi, s), s.phi, "table1 phi")

    # Tilde table: e~_ij -> e~_ji * eta_j / eta_i; fixes varphi~, phi~.
    for (i, j) in OFF_DIAGONAL:
        expected = s.e_t[j, i].scale(eta[j] / eta[i])
        rec.equal(dagger(s.e_t[i, j], s), expected, f"table2 e~{i}{j}")
    rec.equal(dagger(s.varphi_t, s), s.varphi_t, "table2 varphi~")
    rec.equal(dagger(s.phi_t, s), s.phi_t, "table2 phi~")

    # Antiautomorphism law over all 64 ordered pairs of the plain basis.
    for name_b, beta in plain.items():
        for name_g, gamma in plain.items():
            rec.equal(
                dagger(beta.bracket(gamma), s),
                -(dagger(beta, s).bracket(dagger(gamma, s))),
                f"bracket law [{name_b},{name_g}]",
            )

    rec.equal(s.varphi_t.bracket(s.phi_t), Mat.zero(3), "[varphi~, phi~]")
    return rec.report()


def verify_expansions(s: StructureSet) -> Report:
    """The four long cross-basis expansion identities, entry by entry.

    Oracle: the conjugation definitions (varphi~ = R varphi R^-1 and
    the inverse conjugation for the reverse direction).
    """
    rec = Recorder("structure.expansions")
    coeffs = expansion_coefficients(s.p)

    rec.equal(
        s.varphi_t,
        _combine(coeffs["varphi_t"], s.e, s.varphi, s.phi),
        "varphi~ expansion",
    )
    rec.equal(
        s.phi_t,
        _combine(coeffs["phi_t"], s.e, s.varphi, s.phi),
        "phi~ expansion",
    )
    rec.equal(
        s.varphi,
        _combine(coeffs["varphi"], s.e_t, s.varphi_t, s.phi_t),
        "varphi expansion",
    )
    rec.equal(
        s.phi,
        _combine(coeffs["phi"], s.e_t, s.varphi_t, s.phi_t),
        "phi expansion",
    )
    return rec.report()


def verify_generation(s: StructureSet) -> Report:
    """The six nested-bracket formulas producing the matrix units."""
    rec = Recorder("structure.generation")
    eta_t = s.d.eta_t
    vp, ph = s.varphi, s.phi
    inner_a = s.psi.bracket(s.psi_t)    # [psi, psi~]
    inner_b = ph.bracket(s.psi_t)       # [phi, psi~]

    cases = [
        ("e01", (0, 1), -vp.bracket(inner_a) + vp.bracket(vp.bracket(inner_a)), eta_t[0]),
        ("e10", (1, 0), -vp.bracket(inner_a) - vp.bracket(vp.bracket(inner_a)), eta_t[1]),
        ("e02", (0, 2), -ph.bracket(inner_a) + ph.bracket(ph.bracket(inner_a)), eta_t[0]),
        ("e20", (2, 0), -ph.bracket(inner_a) - ph.bracket(ph.bracket(inner_a)), eta_t[2]),
        ("e12", (1, 2), -vp.bracket(inner_b) - vp.bracket(vp.bracket(inner_b)), eta_t[1]),
        ("e21", (2, 1), -vp.bracket(inner_b) + vp.bracket(vp.bracket(inner_b)), eta_t[2]),
    ]
    for name, (i, j), numerator, weight in cases:
        rec.equal(numerator.scale(Fraction(1, 2) / weight), s.e[i, j], name)
    return rec.report()
