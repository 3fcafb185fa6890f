"""The quadric Veronese embedding of PG(2, q) in PG(5, q), q even.

Coordinates of PG(5, q) are ordered (Y0..Y5) = (a00, a01, a02, a11, a12, a22),
so a point corresponds to the symmetric 3x3 matrix

    [[Y0, Y1, Y2],
     [Y1, Y3, Y4],
     [Y2, Y4, Y5]]

and the conic <-> hyperplane correspondence is the identity on coefficient
vectors.  The module provides the embedding, the rank/nucleus stratification
of points, conic classification, and the lifted PGL(3, q) action
M |-> A M A^T.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .field import GF
from .projgeom import (
    Matrix,
    Subspace,
    Vector,
    all_points,
    canonicalize,
    normalize_point,
    rref,
)


class PointType(IntEnum):
    """The four PGL(3,q)-orbits of points of PG(5, q), q even."""

    RANK1 = 0          # on the Veronese surface
    RANK2_NUCLEUS = 1  # rank 2, in the nucleus plane (zero diagonal)
    RANK2_SECANT = 2   # rank 2, outside the nucleus plane
    RANK3 = 3


class ConicKind(IntEnum):
    """Conic types, in hyperplane-orbit-distribution order."""

    DOUBLE_LINE = 0
    REAL_PAIR = 1
    IMAGINARY_PAIR = 2
    NONSINGULAR = 3


CONIC_KIND_CODES = {
    ConicKind.NONSINGULAR: "N",
    ConicKind.DOUBLE_LINE: "L2",
    ConicKind.REAL_PAIR: "R",
    ConicKind.IMAGINARY_PAIR: "I",
}


def nu(gf: GF, p: Vector) -> Vector:
    """Veronese map (u0,u1,u2) -> (u0^2, u0u1, u0u2, u1^2, u1u2, u2^2)."""
    u0, u1, u2 = p
    m = gf.mul
    return normalize_point(
        gf, (m(u0, u0), m(u0, u1), m(u0, u2), m(u1, u1), m(u1, u2), m(u2, u2))
    )


def nu_inverse(gf: GF, p6: Vector) -> Vector:
    """Preimage under nu of a rank-1 point (square roots of the diagonal)."""
    u = (gf.sqrt(p6[0]), gf.sqrt(p6[3]), gf.sqrt(p6[5]))
    u = normalize_point(gf, u)
    if nu(gf, u) != normalize_point(gf, p6):
        raise ValueError("point is not on the Veronese surface")
    return u


def point_to_mat(p6: Vector) -> Matrix:
    y0, y1, y2, y3, y4, y5 = p6
    return ((y0, y1, y2), (y1, y3, y4), (y2, y4, y5))


def mat_to_point(m: Matrix) -> Vector:
    return (m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2])


def mat_rank(gf: GF, m: Matrix) -> int:
    return len(rref(gf, m))


def point_type(gf: GF, p6: Vector) -> PointType:
    """Stratum of a point of PG(5, q) under the lifted PGL(3, q) action."""
    r = mat_rank(gf, point_to_mat(p6))
    if r == 1:
        return PointType.RANK1
    if r == 3:
        return PointType.RANK3
    if p6[0] == 0 and p6[3] == 0 and p6[5] == 0:
        return PointType.RANK2_NUCLEUS
    return PointType.RANK2_SECANT


# -- conics ------------------------------------------------------------------

def conic_discriminant(gf: GF, c: Vector) -> int:
    """a00*a12^2 + a11*a02^2 + a22*a01^2 + a01*a02*a12; nonzero iff the
    conic is nonsingular (q even)."""
    a00, a01, a02, a11, a12, a22 = c
    m = gf.mul
    return (
        m(a00, m(a12, a12))
        ^ m(a11, m(a02, a02))
        ^ m(a22, m(a01, a01))
        ^ m(a01, m(a02, a12))
    )


def evaluate_conic(gf: GF, c: Vector, p: Vector) -> int:
    a00, a01, a02, a11, a12, a22 = c
    x0, x1, x2 = p
    m = gf.mul
    return (
        m(a00, m(x0, x0))
        ^ m(a01, m(x0, x1))
        ^ m(a02, m(x0, x2))
        ^ m(a11, m(x1, x1))
        ^ m(a12, m(x1, x2))
        ^ m(a22, m(x2, x2))
    )


def count_conic_points(gf: GF, c: Vector) -> int:
    """Rational points of the conic, by evaluation over all of PG(2, q)."""
    return sum(1 for p in all_points(gf, 2) if evaluate_conic(gf, c, p) == 0)


def conic_singular_point(gf: GF, c: Vector) -> Vector:
    """The unique singular point of a line pair (common zero of the three
    partial derivatives lying on the conic)."""
    _, a01, a02, _, a12, _ = c
    # partials in char 2: (a01*X1 + a02*X2, a01*X0 + a12*X2, a02*X0 + a12*X1)
    rows = [r for r in ((0, a01, a02), (a01, 0, a12), (a02, a12, 0)) if any(r)]
    if not rows:
        raise ValueError("double line: every point is singular")
    for p in canonicalize(gf, rows).annihilator().points():
        if evaluate_conic(gf, c, p) == 0:
            return p
    raise ValueError("conic has no singular point (it is nonsingular)")


def _restricted_root_count(gf: GF, c: Vector, axis: int) -> int:
    """Projective root count of the conic restricted to the line X_axis = 0."""
    a00, a01, a02, a11, a12, a22 = c
    if axis == 0:
        alpha, beta, gamma = a11, a12, a22
    elif axis == 1:
        alpha, beta, gamma = a00, a02, a22
    else:
        alpha, beta, gamma = a00, a01, a11
    # binary form alpha*s^2 + beta*s*t + gamma*t^2; roots (s:t) projective
    if alpha == 0:
        count = 1  # root (1:0)
        if beta:
            count += 1  # gamma/beta from beta*s*t + gamma*t^2 = 0, t != 0
        return count
    return len(gf.solve_quadratic(alpha, beta, gamma))


def classify_conic(gf: GF, c: Vector, method: str = "fast") -> ConicKind:
    """Kind of a conic with coefficients (a00,a01,a02,a11,a12,a22).

    method="fast": discriminant, the double-line coefficient test, and for
    line pairs the root count of the form restricted to a coordinate line
    missing the singular point (2 rational points -> real pair, 0 ->
    imaginary pair).
    method="count": the authoritative rational-point count
    (q+1 / 2q+1 / 1 / q+1 for double line / real / imaginary / nonsingular).
    """
    if not any(c):
        raise ValueError("zero coefficient vector is not a conic")
    if conic_discriminant(gf, c) != 0:
        return ConicKind.NONSINGULAR
    if c[1] == 0 and c[2] == 0 and c[4] == 0:
        return ConicKind.DOUBLE_LINE
    if method == "count":
        n = count_conic_points(gf, c)
        if n == 2 * gf.q + 1:
            return ConicKind.REAL_PAIR
        if n == 1:
            return ConicKind.IMAGINARY_PAIR
        raise AssertionError(f"line pair with unexpected point count {n}")
    v = conic_singular_point(gf, c)
    axis = next(i for i, x in enumerate(v) if x)  # line X_axis=0 misses v
    n = _restricted_root_count(gf, c, axis)
    if n == 2:
        return ConicKind.REAL_PAIR
    if n == 0:
        return ConicKind.IMAGINARY_PAIR
    raise AssertionError("line pair meets a line off its vertex in 1 point")


@dataclass(frozen=True)
class Conic:
    """A conic of PG(2, q): normalized coefficients and computed kind."""

    gf: GF
    coeffs: Vector

    @classmethod
    def from_coeffs(cls, gf: GF, coeffs) -> "Conic":
        return cls(gf, normalize_point(gf, tuple(coeffs)))

    @property
    def kind(self) -> ConicKind:
        return classify_conic(self.gf, self.coeffs)

    @property
    def kind_code(self) -> str:
        return CONIC_KIND_CODES[self.kind]

    def to_hex(self) -> str:
        return "".join(self.gf.to_hex(x) for x in self.coeffs)

    @classmethod
    def from_hex(cls, gf: GF, s: str) -> "Conic":
        if len(s) != 6:
            raise ValueError(f"conic needs 6 hex digits, got {s!r}")
        return cls.from_coeffs(gf, tuple(gf.from_hex(ch) for ch in s))


# -- conic <-> hyperplane correspondence --------------------------------------

def delta(gf: GF, c: Vector) -> Subspace:
    """Hyperplane of PG(5, q) cut out by the conic's coefficient vector."""
    if not any(c):
        raise ValueError("zero coefficient vector")
    return canonicalize(gf, [c]).annihilator()


def delta_inv(hyperplane: Subspace) -> Conic:
    """Conic corresponding to a hyperplane (5-dimensional subspace)."""
    if hyperplane.dim != 5:
        raise ValueError("delta_inv expects a hyperplane (vector dim 5)")
    (coeffs,) = hyperplane.annihilator().basis
    return Conic(hyperplane.gf, coeffs)


# -- lifted group action ------------------------------------------------------

def mat3_mul(gf: GF, a: Matrix, b: Matrix) -> Matrix:
    m = gf.mul
    return tuple(
        tuple(m(a[i][0], b[0][j]) ^ m(a[i][1], b[1][j]) ^ m(a[i][2], b[2][j]) for j in range(3))
        for i in range(3)
    )


def mat3_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def mat3_det(gf: GF, a: Matrix) -> int:
    m = gf.mul
    return (
        m(a[0][0], m(a[1][1], a[2][2]) ^ m(a[1][2], a[2][1]))
        ^ m(a[0][1], m(a[1][0], a[2][2]) ^ m(a[1][2], a[2][0]))
        ^ m(a[0][2], m(a[1][0], a[2][1]) ^ m(a[1][1], a[2][0]))
    )


def apply_plane_point(gf: GF, a: Matrix, p: Vector) -> Vector:
    """Action on PG(2, q) as column vectors: p -> A p (normalized)."""
    m = gf.mul
    return normalize_point(
        gf,
        tuple(m(a[i][0], p[0]) ^ m(a[i][1], p[1]) ^ m(a[i][2], p[2]) for i in range(3)),
    )


class LiftedAction:
    """The projectivity of PG(5, q) induced by A via M |-> A M A^T."""

    def __init__(self, gf: GF, a: Matrix):
        a = tuple(tuple(row) for row in a)
        if mat3_det(gf, a) == 0:
            raise ValueError("matrix is singular")
        self.gf = gf
        self.a = a
        self._at = mat3_transpose(a)

    def apply_vector(self, p6: Vector) -> Vector:
        b = mat3_mul(self.gf, mat3_mul(self.gf, self.a, point_to_mat(p6)), self._at)
        return mat_to_point(b)

    def apply_point(self, p6: Vector) -> Vector:
        return normalize_point(self.gf, self.apply_vector(p6))

    def apply_subspace(self, s: Subspace) -> Subspace:
        return canonicalize(self.gf, [self.apply_vector(r) for r in s.basis])


def lift(gf: GF, a: Matrix) -> LiftedAction:
    return LiftedAction(gf, a)
