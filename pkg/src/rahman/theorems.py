"""One verifier per stated theorem: transitions, cosines, orthogonality,
recurrences, and the operator identities.

Every verifier pairs an independent computation path (symbolic
expansion, the bilinear form, or operator action on the module) against
the theorem's closed form; none compares a formula against itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .form import BilinearForm, inner
from .matrices import Mat
from .params import DerivedParams, ParameterSet, derive
from .polymodule import (
    Poly3,
    expand_plain_monomial_direct,
    expand_tilde_monomial_direct,
    lattice,
    matrix_of,
)
from .polynomials import eval_P, eval_P_operator
from .report import Recorder, Report
from .sl3 import StructureSet, build, expansion_coefficients
from .scalars import multinomial

__all__ = [
    "verify_trans2",
    "verify_trans1",
    "verify_pcosines",
    "verify_orthogonality",
    "verify_recurrences",
    "verify_operator_identities",
    "SUITES",
    "run_suites",
]


def _pairs(n: int) -> list:
    """All (s, t) with s, t >= 0 and s + t <= n, in lattice order."""
    return [(s, t) for (_, s, t) in lattice(n)]


class _PCache:
    """Memoized integer evaluations of P for one (params, N)."""

    def __init__(self, d: DerivedParams, n: int):
        self.d = d
        self.n = n
        self.values: dict = {}

    def __call__(self, a: int, b: int, c: int, dd: int) -> Fraction:
        key = (a, b, c, dd)
        if key not in self.values:
            self.values[key] = eval_P(a, b, c, dd, self.d, self.n)
        return self.values[key]


def verify_trans2(s: StructureSet, f: BilinearForm, d: DerivedParams, n: int) -> Report:
    """Tilde monomials expanded in the plain basis, coefficient by coefficient.

    Oracle: direct symbolic substitution of the tilde variables.
    """
    rec = Recorder(f"transitions.trans2.N{n}")
    p_val = _PCache(d, n)
    theta_n = d.theta**n
    scale = Fraction(factorial(n)) * d.nu**n
    for (rho, sigma, tau) in lattice(n):
        expanded = expand_tilde_monomial_direct(rho, sigma, tau, s)
        formula = Poly3.zero()
        for (r, st, t) in lattice(n):
            coeff = (
                scale
                * p_val(st, t, sigma, tau)
                * d.eta_t[0] ** r * d.eta_t[1] ** st * d.eta_t[2] ** t
                / Fraction(factorial(r) * factorial(st) * factorial(t))
                / theta_n
            )
            formula = formula + Poly3.monomial(r, st, t, coeff)
        for key in lattice(n):
            rec.equal(
                expanded[key],
                formula[key],
                f"tilde monomial {(rho, sigma, tau)}, coefficient of {key}",
            )
    return rec.report()


def verify_trans1(s: StructureSet, f: BilinearForm, d: DerivedParams, n: int) -> Report:
    """Plain monomials expanded in the tilde basis (mirror of trans2).

    Oracle: symbolic substitution through the inverse transition matrix.
    """
    rec = Recorder(f"transitions.trans1.N{n}")
    p_val = _PCache(d, n)
    theta_t_n = d.theta_t**n
    scale = Fraction(factorial(n)) * d.nu**n
    for (rho, sigma, tau) in lattice(n):
        expanded = expand_plain_monomial_direct(rho, sigma, tau, s)
        formula = Poly3.zero(kind="tilde")
        for (r, st, t) in lattice(n):
            coeff = (
                scale
                * p_val(sigma, tau, st, t)
                * d.eta[0] ** r * d.eta[1] ** st * d.eta[2] ** t
                / Fraction(factorial(r) * factorial(st) * factorial(t))
                / theta_t_n
            )
            formula = formula + Poly3.monomial(r, st, t, coeff, kind="tilde")
        for key in lattice(n):
            rec.equal(
                expanded[key],
                formula[key],
                f"plain monomial {(rho, sigma, tau)}, coefficient of {key}",
            )
    return rec.report()


def verify_pcosines(s: StructureSet, f: BilinearForm, d: DerivedParams, n: int) -> Report:
    """<x^r y^s z^t, x~^rho y~^sigma z~^tau> = N! nu^N P(s, t, sigma, tau).

    Left side through the form module, right side through eval_P.
    """
    rec = Recorder(f"transitions.pcosines.N{n}")
    p_val = _PCache(d, n)
    scale = Fraction(factorial(n)) * d.nu**n
    for (r, st, t) in lattice(n):
        plain = Poly3.monomial(r, st, t)
        for (rho, sigma, tau) in lattice(n):
            rec.equal(
                inner(plain, Poly3.monomial(rho, sigma, tau, kind="tilde"), f, s),
                scale * p_val(st, t, sigma, tau),
                f"pair ({(r, st, t)}, {(rho, sigma, tau)})",
            )
    return rec.report()


def verify_orthogonality(d: DerivedParams, n: int) -> Report:
    """Both weighted orthogonality relations over all index pairs."""
    rec = Recorder(f"orthogonality.N{n}")
    p_val = _PCache(d, n)
    pairs = _pairs(n)
    for (s_idx, t_idx) in pairs:
        r_idx = n - s_idx - t_idx
        rhs_base = 1 / multinomial(n, [r_idx, s_idx, t_idx])
        for (sigma, tau) in pairs:
            delta = Fraction(int((s_idx, t_idx) == (sigma, tau)))

            lhs1 = sum(
                (
                    p_val(j, k, s_idx, t_idx)
                    * p_val(j, k, sigma, tau)
                    * d.eta_t[0] ** i * d.eta_t[1] ** j * d.eta_t[2] ** k
                    * multinomial(n, [i, j, k])
                    for (i, j, k) in lattice(n)
                ),
                Fraction(0),
            )
            rhs1 = delta / (d.k_t[1] ** s_idx * d.k_t[2] ** t_idx) * rhs_base
            rec.equal(lhs1, rhs1, f"relation 1 at {(s_idx, t_idx, sigma, tau)}")

            lhs2 = sum(
                (
                    p_val(s_idx, t_idx, j, k)
                    * p_val(sigma, tau, j, k)
                    * d.eta[0] ** i * d.eta[1] ** j * d.eta[2] ** k
                    * multinomial(n, [i, j, k])
                    for (i, j, k) in lattice(n)
                ),
                Fraction(0),
            )
            rhs2 = delta / (d.k[1] ** s_idx * d.k[2] ** t_idx) * rhs_base
            rec.equal(lhs2, rhs2, f"relation 2 at {(s_idx, t_idx, sigma, tau)}")
    return rec.report()


# Recurrence shift patterns: (shift of the varying pair, which counter
# multiplies the coefficient, expansion-coefficient key).  The counters
# are the varying pair (A, B) and the complement C = N - A - B.
_SHIFT_PATTERN = [
    ((-1, 0), "A", "e01"),
    ((0, -1), "B", "e02"),
    ((+1, 0), "C", "e10"),
    ((+1, -1), "B", "e12"),
    ((0, +1), "C", "e20"),
    ((-1, +1), "A", "e21"),
]


def verify_recurrences(p: ParameterSet, d: DerivedParams, n: int) -> Report:
    """The four seven-term recurrences, against direct P evaluation.

    Whenever a shifted index leaves the lattice its coefficient carries
    a counter that must vanish; that vanishing is asserted, not assumed.
    """
    rec = Recorder(f"recurrences.N{n}")
    p_val = _PCache(d, n)
    coeff_tables = expansion_coefficients(p)
    third = Fraction(n, 3)
    pairs = _pairs(n)

    # part -> (coefficient table, varying pair is the back one?, eigenvalue counter)
    parts = [
        ("i", coeff_tables["varphi"], True, "s"),
        ("ii", coeff_tables["phi"], True, "t"),
        ("iii", coeff_tables["varphi_t"], False, "sigma"),
        ("iv", coeff_tables["phi_t"], False, "tau"),
    ]

    for (s_idx, t_idx) in pairs:
        for (sigma, tau) in pairs:
            base = p_val(s_idx, t_idx, sigma, tau)
            for name, coeffs, vary_back, eig in parts:
                if vary_back:
                    a_idx, b_idx = sigma, tau
                else:
                    a_idx, b_idx = s_idx, t_idx
                c_idx = n - a_idx - b_idx
                counters = {"A": a_idx, "B": b_idx, "C": c_idx}

                total = (
                    (Fraction(a_idx) - third) * coeffs["h1"]
                    + (Fraction(b_idx) - third) * coeffs["h2"]
                ) * base
                for (da, db), counter, key in _SHIFT_PATTERN:
                    factor = counters[counter]
                    new_a, new_b = a_idx + da, b_idx + db
                    in_range = new_a >= 0 and new_b >= 0 and new_a + new_b <= n
                    if not in_range:
                        rec.check(
                            factor == 0,
                            f"part ({name}) at {(s_idx, t_idx, sigma, tau)}: "
                            f"out-of-range term {key} has nonzero counter {factor}",
                        )
                        continue
                    if factor == 0:
                        continue
                    if vary_back:
                        shifted = p_val(s_idx, t_idx, new_a, new_b)
                    else:
                        shifted = p_val(new_a, new_b, sigma, tau)
                    total += factor * coeffs[key] * shifted

                eig_value = {
                    "s": s_idx,
                    "t": t_idx,
                    "sigma": sigma,
                    "tau": tau,
                }[eig]
                rec.equal(
                    (Fraction(eig_value) - third) * base,
                    total,
                    f"part ({name}) at {(s_idx, t_idx, sigma, tau)}",
                )
    return rec.report()


def verify_operator_identities(
    s: StructureSet, f: BilinearForm, d: DerivedParams, n: int
) -> Report:
    """P with Cartan-shifted operator arguments maps x^N onto each monomial."""
    rec = Recorder(f"operators.N{n}")
    points = lattice(n)
    dim = len(points)
    shift = Mat.identity(dim).scale(Fraction(n, 3))

    back_c = matrix_of(s.varphi_t, n, "plain", s) + shift
    back_d = matrix_of(s.phi_t, n, "plain", s) + shift
    front_a = matrix_of(s.varphi, n, "tilde", s) + shift
    front_b = matrix_of(s.phi, n, "tilde", s) + shift

    start = [Fraction(int(point == (n, 0, 0))) for point in points]
    for (s_idx, t_idx) in _pairs(n):
        r_idx = n - s_idx - t_idx
        target = [Fraction(int(point == (r_idx, s_idx, t_idx))) for point in points]

        op = eval_P_operator((s_idx, t_idx), (back_c, back_d), d, n, slot="back")
        rec.equal(
            op.apply(start), target, f"back identity at (s,t)={(s_idx, t_idx)}"
        )

        op = eval_P_operator((s_idx, t_idx), (front_a, front_b), d, n, slot="front")
        rec.equal(
            op.apply(start), target, f"front identity at (s,t)={(s_idx, t_idx)}"
        )
    return rec.report()


def _structure_suite(s, f, d, n):
    from . import sl3

    return [
        sl3.verify_matrices(s),
        sl3.verify_dagger(s),
        sl3.verify_expansions(s),
        sl3.verify_generation(s),
    ]


def _module_suite(s, f, d, n):
    from . import polymodule as pm

    return [
        pm.verify_action_tables(s, n),
        pm.verify_representation_law(s, n),
        pm.verify_weight_diagonality(s, n),
        pm.verify_block_structure(s, n),
        pm.irreducibility_probe(s, n),
    ]


def _form_suite(s, f, d, n):
    from . import form as fm

    return [
        fm.verify_adjointness(f, s, n),
        fm.verify_tilde_norms(f, s, n),
        fm.verify_dual_sum_identities(f, s, n),
    ]


def _transitions_suite(s, f, d, n):
    return [
        verify_trans1(s, f, d, n),
        verify_trans2(s, f, d, n),
        verify_pcosines(s, f, d, n),
    ]


SUITES = {
    "structure": _structure_suite,
    "module": _module_suite,
    "form": _form_suite,
    "transitions": _transitions_suite,
    "orthogonality": lambda s, f, d, n: [verify_orthogonality(d, n)],
    "recurrence": lambda s, f, d, n: [verify_recurrences(s.p, d, n)],
    "operators": lambda s, f, d, n: [verify_operator_identities(s, f, d, n)],
}


def run_suites(p: ParameterSet, n: int, names=("all",)) -> list:
    """Run the named verification suites and return their Reports."""
    selected = []
    for name in names:
        if name == "all":
            selected = list(SUITES)
            break
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        selected.append(name)

    d = derive(p)
    s = build(p, d)
    f = BilinearForm(s, n)
    reports = []
    for name in selected:
        reports.extend(SUITES[name](s, f, d, n))
    return reports
