"""Degree-N homogeneous polynomials in three variables as an sl3 module.

A Poly3 is a sparse map from exponent triples to rational coefficients,
tagged with the coordinate system it lives in ("plain" for x,y,z or
"tilde" for the R-transformed variables).  A single action rule drives
everything: a 3x3 matrix beta sends variable j to sum_i beta[i][j] *
variable i, extended to monomials as a derivation.  The per-generator
action tables are test vectors, not code paths.
"""

from __future__ import annotations

from fractions import Fraction

from .matrices import Mat
from .report import Recorder, Report
from .scalars import format_rational
from .sl3 import OFF_DIAGONAL, NotTraceless, StructureSet

__all__ = [
    "DegreeMismatch",
    "NotHomogeneous",
    "Poly3",
    "lattice",
    "lattice_dimension",
    "adjacent",
    "act",
    "matrix_of",
    "tilde_variables",
    "plain_variables_in_tilde",
    "expand_tilde_monomial_direct",
    "expand_plain_monomial_direct",
    "verify_block_structure",
    "irreducibility_probe",
    "verify_action_tables",
    "verify_representation_law",
    "verify_weight_diagonality",
]


class DegreeMismatch(ValueError):
    """Raised when two lattice points or polynomials have different degrees."""


class NotHomogeneous(ValueError):
    """Raised when a polynomial mixes total degrees."""


def lattice(n: int) -> list:
    """All (r, s, t) with r+s+t = n, ordered by descending r then s."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return [
        (r, s, n - r - s)
        for r in range(n, -1, -1)
        for s in range(n - r, -1, -1)
    ]


def lattice_dimension(n: int) -> int:
    return (n + 1) * (n + 2) // 2


def adjacent(a: tuple, b: tuple) -> bool:
    """True iff the componentwise difference is a permutation of (1, -1, 0)."""
    if sum(a) != sum(b):
        raise DegreeMismatch(f"{a} and {b} have different degrees")
    diff = sorted(x - y for x, y in zip(a, b))
    return diff == [-1, 0, 1]


class Poly3:
    """Sparse homogeneous polynomial in one of the two coordinate systems."""

    __slots__ = ("kind", "coeffs", "degree")

    def __init__(self, coeffs: dict, kind: str = "plain"):
        if kind not in ("plain", "tilde"):
            raise ValueError(f"unknown basis kind {kind!r}")
        clean = {}
        degrees = set()
        for key, value in coeffs.items():
            value = Fraction(value)
            if value == 0:
                continue
            key = tuple(int(x) for x in key)
            if len(key) != 3 or any(x < 0 for x in key):
                raise ValueError(f"bad exponent triple {key}")
            degrees.add(sum(key))
            clean[key] = value
        if len(degrees) > 1:
            raise NotHomogeneous(f"mixed degrees {sorted(degrees)}")
        self.kind = kind
        self.coeffs = clean
        self.degree = degrees.pop() if degrees else None

    @classmethod
    def monomial(cls, r: int, s: int, t: int, coeff=1, kind: str = "plain") -> "Poly3":
        return cls({(r, s, t): coeff}, kind)

    @classmethod
    def zero(cls, kind: str = "plain") -> "Poly3":
        return cls({}, kind)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, key) -> Fraction:
        return self.coeffs.get(tuple(key), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly3)
            and self.kind == other.kind
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.kind, frozenset(self.coeffs.items())))

    def _require_same_kind(self, other: "Poly3") -> None:
        if self.kind != other.kind:
            raise ValueError(f"mixing {self.kind} and {other.kind} polynomials")

    def __add__(self, other: "Poly3") -> "Poly3":
        self._require_same_kind(other)
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return Poly3(merged, self.kind)

    def __sub__(self, other: "Poly3") -> "Poly3":
        return self + other.scale(-1)

    def scale(self, c) -> "Poly3":
        c = Fraction(c)
        return Poly3({key: c * value for key, value in self.coeffs.items()}, self.kind)

    def __mul__(self, other: "Poly3") -> "Poly3":
        self._require_same_kind(other)
        product: dict = {}
        for (a, b, c), u in self.coeffs.items():
            for (x, y, z), v in other.coeffs.items():
                key = (a + x, b + y, c + z)
                product[key] = product.get(key, Fraction(0)) + u * v
        return Poly3(product, self.kind)

    def power(self, n: int) -> "Poly3":
        result = Poly3({(0, 0, 0): 1}, self.kind)
        for _ in range(n):
            result = result * self
        return result

    def to_vector(self, n: int) -> list:
        """Coefficients in lattice order for degree n."""
        if self.coeffs and self.degree != n:
            raise DegreeMismatch(f"degree {self.degree}, expected {n}")
        return [self[key] for key in lattice(n)]

    @classmethod
    def from_vector(cls, vector, n: int, kind: str = "plain") -> "Poly3":
        return cls(dict(zip(lattice(n), vector)), kind)

    def to_json(self) -> list:
        """Deterministic JSON form: list of {"index", "coeff"} in lattice order."""
        keys = sorted(self.coeffs, key=lambda k: (-k[0], -k[1]))
        return [
            {"index": list(key), "coeff": format_rational(self.coeffs[key])}
            for key in keys
        ]

    def __repr__(self):
        return f"Poly3({self.coeffs}, kind={self.kind!r})"


def _action_matrix(beta: Mat, kind: str, s: StructureSet) -> Mat:
    """The 3x3 matrix giving beta's action on the chosen variable triple.

    In tilde coordinates beta acts with matrix R^-1 beta R, so the
    conjugated units act on tilde monomials exactly like the plain
    units act on plain monomials.
    """
    if kind == "plain":
        return beta
    return s.Rinv @ beta @ s.R


def act(beta: Mat, xi: Poly3, s: StructureSet) -> Poly3:
    """Derivation action of a traceless 3x3 matrix on a polynomial."""
    if beta.trace() != 0:
        raise NotTraceless(f"trace is {beta.trace()}, expected 0")
    action = _action_matrix(beta, xi.kind, s)
    out: dict = {}
    for exps, coeff in xi.coeffs.items():
        for j in range(3):
            if exps[j] == 0:
                continue
            lowered = list(exps)
            lowered[j] -= 1
            for i in range(3):
                entry = action[i, j]
                if entry == 0:
                    continue
                raised = list(lowered)
                raised[i] += 1
                key = tuple(raised)
                out[key] = out.get(key, Fraction(0)) + coeff * exps[j] * entry
    return Poly3(out, xi.kind)


def matrix_of(beta: Mat, n: int, kind: str, s: StructureSet) -> Mat:
    """DxD matrix of beta on degree-n polynomials, columns in lattice order."""
    points = lattice(n)
    dim = len(points)
    columns = []
    for point in points:
        image = act(beta, Poly3.monomial(*point, kind=kind), s)
        columns.append(image.to_vector(n))
    return Mat([[columns[j][i] for j in range(dim)] for i in range(dim)])


def tilde_variables(s: StructureSet) -> tuple:
    """The tilde variables as degree-1 plain polynomials (columns of R)."""
    return tuple(
        Poly3({(1, 0, 0): s.R[0, j], (0, 1, 0): s.R[1, j], (0, 0, 1): s.R[2, j]})
        for j in range(3)
    )


def plain_variables_in_tilde(s: StructureSet) -> tuple:
    """x, y, z as degree-1 tilde polynomials (columns of R^-1)."""
    return tuple(
        Poly3(
            {(1, 0, 0): s.Rinv[0, j], (0, 1, 0): s.Rinv[1, j], (0, 0, 1): s.Rinv[2, j]},
            kind="tilde",
        )
        for j in range(3)
    )


def expand_tilde_monomial_direct(rho: int, sigma: int, tau: int, s: StructureSet) -> Poly3:
    """Plain-basis expansion of a tilde monomial by symbolic substitution.

    Independent oracle: substitute the degree-1 expressions for the
    tilde variables and multiply out.
    """
    xt, yt, zt = tilde_variables(s)
    return xt.power(rho) * yt.power(sigma) * zt.power(tau)


def expand_plain_monomial_direct(rho: int, sigma: int, tau: int, s: StructureSet) -> Poly3:
    """Tilde-basis expansion of a plain monomial (the reverse substitution)."""
    x, y, z = plain_variables_in_tilde(s)
    return x.power(rho) * y.power(sigma) * z.power(tau)


def verify_block_structure(s: StructureSet, n: int) -> Report:
    """Cross-Cartan action support: diagonal plus adjacent entries only."""
    rec = Recorder(f"module.block_structure.N{n}")
    points = lattice(n)
    cases = [
        ("varphi~ on plain", s.varphi_t, "plain"),
        ("phi~ on plain", s.phi_t, "plain"),
        ("varphi on tilde", s.varphi, "tilde"),
        ("phi on tilde", s.phi, "tilde"),
    ]
    for label, beta, kind in cases:
        matrix = matrix_of(beta, n, kind, s)
        for i, mu in enumerate(points):
            for j, lam in enumerate(points):
                if mu == lam or adjacent(mu, lam):
                    continue
                rec.check(
                    matrix[i, j] == 0,
                    f"{label}: nonzero entry at row {mu}, column {lam}",
                )
    return rec.report()


def verify_action_tables(s: StructureSet, n: int) -> Report:
    """The eight per-generator action rows, reproduced from the one rule.

    Checks every monomial of degree n, in both coordinate systems; the
    tilde generators must act on tilde monomials exactly as the plain
    generators act on plain ones.
    """
    rec = Recorder(f"module.action_tables.N{n}")

    def expected_rows(r, st, t):
        # (generator label, resulting monomial dict)
        return [
            ("e01", {(r + 1, st - 1, t): st} if st else {}),
            ("e12", {(r, st + 1, t - 1): t} if t else {}),
            ("e02", {(r + 1, st, t - 1): t} if t else {}),
            ("e10", {(r - 1, st + 1, t): r} if r else {}),
            ("e21", {(r, st - 1, t + 1): st} if st else {}),
            ("e20", {(r - 1, st, t + 1): r} if r else {}),
            ("varphi", {(r, st, t): Fraction(st) - Fraction(n, 3)}),
            ("phi", {(r, st, t): Fraction(t) - Fraction(n, 3)}),
        ]

    labels = {f"e{i}{j}": (i, j) for i, j in OFF_DIAGONAL}
    for kind in ("plain", "tilde"):
        if kind == "plain":
            gens = {**{k: s.e[v] for k, v in labels.items()},
                    "varphi": s.varphi, "phi": s.phi}
        else:
            gens = {**{k: s.e_t[v] for k, v in labels.items()},
                    "varphi": s.varphi_t, "phi": s.phi_t}
        for point in lattice(n):
            for label, image in expected_rows(*point):
                rec.equal(
                    act(gens[label], Poly3.monomial(*point, kind=kind), s),
                    Poly3(image, kind),
                    f"{kind} table {label} at {point}",
                )
    return rec.report()


def verify_representation_law(s: StructureSet, n: int) -> Report:
    """matrix_of is a Lie algebra homomorphism on the 8-element basis.

    Also checks tilde compatibility: conjugated elements acting in the
    tilde basis reproduce the plain matrices entry for entry.
    """
    rec = Recorder(f"module.representation.N{n}")
    basis = s.cartan_basis()
    matrices = {name: matrix_of(beta, n, "plain", s) for name, beta in basis.items()}
    names = list(basis)
    for a, name_b in enumerate(names):
        for name_g in names[a + 1:]:
            bracket_mat = matrix_of(basis[name_b].bracket(basis[name_g]), n, "plain", s)
            rec.equal(
                bracket_mat,
                matrices[name_b].bracket(matrices[name_g]),
                f"bracket pair ({name_b}, {name_g})",
            )
    for name, beta in basis.items():
        conjugated = s.R @ beta @ s.Rinv
        rec.equal(
            matrix_of(conjugated, n, "tilde", s),
            matrices[name],
            f"tilde compatibility for {name}",
        )
    return rec.report()


def verify_weight_diagonality(s: StructureSet, n: int) -> Report:
    """Both Cartan pairs are diagonal in their own basis, with s-N/3, t-N/3."""
    rec = Recorder(f"module.weights.N{n}")
    points = lattice(n)
    cases = [
        ("varphi plain", s.varphi, "plain", 1),
        ("phi plain", s.phi, "plain", 2),
        ("varphi~ tilde", s.varphi_t, "tilde", 1),
        ("phi~ tilde", s.phi_t, "tilde", 2),
    ]
    for label, beta, kind, slot in cases:
        matrix = matrix_of(beta, n, kind, s)
        expected = Mat.diag(
            [Fraction(point[slot]) - Fraction(n, 3) for point in points]
        )
        rec.equal(matrix, expected, label)
    return rec.report()


def irreducibility_probe(s: StructureSet, n: int) -> Report:
    """Closure of x^N under the six unit actions must fill the module."""
    rec = Recorder(f"module.irreducibility.N{n}")
    dim = lattice_dimension(n)
    generators = [matrix_of(s.e[key], n, "plain", s) for key in s.e]

    basis: list = []  # reduced row-echelon rows spanning the reached subspace

    def insert(vector) -> bool:
        vector = list(vector)
        for row in basis:
            pivot = next(i for i, x in enumerate(row) if x != 0)
            if vector[pivot] != 0:
                factor = vector[pivot] / row[pivot]
                vector = [a - factor * b for a, b in zip(vector, row)]
        if all(x == 0 for x in vector):
            return False
        basis.append(vector)
        return True

    start = Poly3.monomial(n, 0, 0).to_vector(n)
    insert(start)
    frontier = [start]
    while frontier:
        vector = frontier.pop()
        for gen in generators:
            image = gen.apply(vector)
            if insert(image):
                frontier.append(image)
    rec.check(
        len(basis) == dim,
        f"reached dimension {len(basis)}, expected {dim}",
    )
    return rec.report()
