"""Pencils of conics in PG(2, q) and the corresponding solids of PG(5, q).

A solid (projective dimension 3) and its annihilator pencil (a 2-space of
conic coefficient vectors) determine each other; both are carried around
together.  The point-orbit distribution counts the solid's points in the
four point strata; the hyperplane-orbit distribution classifies the q+1
conics of the pencil.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import GF
from .projgeom import (
    Subspace,
    Vector,
    canonicalize,
    enumerate_subspaces,
    solid_to_hex,
)
from .veronese import Conic, PointType, classify_conic, nu_inverse, point_type

PointOD = tuple[int, int, int, int]
HyperplaneOD = tuple[int, int, int, int]

def o6_line_signature(q: int) -> PointOD:
    """Point OD of a line in the sixth line orbit: [1, 1, q-1, 0]."""
    return (1, 1, q - 1, 0)


@dataclass(frozen=True)
class PencilSolid:
    """A solid of PG(5, q) together with its pencil of conics."""

    gf: GF
    solid: Subspace   # 4x6 canonical basis
    pencil: Subspace  # 2x6 canonical basis (annihilator of the solid)

    @classmethod
    def from_solid(cls, solid: Subspace) -> "PencilSolid":
        if solid.dim != 4 or solid.ncols != 6:
            raise ValueError("a solid needs a rank-4 basis in GF(q)^6")
        return cls(solid.gf, solid, solid.annihilator())

    @classmethod
    def from_pencil(cls, pencil: Subspace) -> "PencilSolid":
        if pencil.dim != 2 or pencil.ncols != 6:
            raise ValueError("a pencil needs a rank-2 basis in GF(q)^6")
        return cls(pencil.gf, pencil.annihilator(), pencil)

    @classmethod
    def from_conics(cls, gf: GF, c1, c2) -> "PencilSolid":
        """Pencil spanned by two projectively independent conics."""
        v1 = c1.coeffs if isinstance(c1, Conic) else tuple(c1)
        v2 = c2.coeffs if isinstance(c2, Conic) else tuple(c2)
        pencil = canonicalize(gf, [v1, v2])
        if pencil.dim != 2:
            raise ValueError("conics are proportional; they span no pencil")
        return cls.from_pencil(pencil)

    @property
    def q(self) -> int:
        return self.gf.q

    def conics(self) -> list[Conic]:
        """The q+1 conics of the pencil, one per projective point."""
        return [Conic(self.gf, p) for p in self.pencil.points()]

    def point_od(self) -> PointOD:
        counts = [0, 0, 0, 0]
        for p in self.solid.points():
            counts[point_type(self.gf, p)] += 1
        return tuple(counts)

    def hyperplane_od(self) -> HyperplaneOD:
        counts = [0, 0, 0, 0]
        for p in self.pencil.points():
            counts[classify_conic(self.gf, p)] += 1
        return tuple(counts)

    def base_points(self) -> frozenset[Vector]:
        """Common zeros of the pencil's conics, as points of PG(2, q).

        Computed as the Veronese preimages of the rank-1 points of the
        solid; tests cross-check against direct common-zero evaluation.
        """
        out = []
        for p in self.solid.points():
            if point_type(self.gf, p) == PointType.RANK1:
                out.append(nu_inverse(self.gf, p))
        return frozenset(out)

    # -- line-orbit tie break --------------------------------------------

    def _line_od(self, p1: Vector, p2: Vector) -> PointOD:
        counts = [0, 0, 0, 0]
        for p in canonicalize(self.gf, [p1, p2]).points():
            counts[point_type(self.gf, p)] += 1
        return tuple(counts)

    def count_o6_lines(self, mode: str = "auto") -> int:
        """Lines of the solid with point-orbit distribution [1,1,q-1,0].

        mode="candidates" requires the solid's point OD to be the shared
        signature [2,1,q^2+q-2,q^3] and inspects only the lines joining
        the nucleus-plane point to the two rank-1 points.  mode="full"
        scans all (q^2+1)(q^2+q+1) lines of the solid.  mode="auto" picks
        candidates when the signature matches, full otherwise.
        """
        q = self.q
        sig = (2, 1, q * q + q - 2, q ** 3)
        target = o6_line_signature(q)
        if mode == "auto":
            mode = "candidates" if self.point_od() == sig else "full"
        if mode == "candidates":
            if self.point_od() != sig:
                raise ValueError("candidates mode needs point OD [2,1,q^2+q-2,q^3]")
            rank1, nucleus = [], []
            for p in self.solid.points():
                t = point_type(self.gf, p)
                if t == PointType.RANK1:
                    rank1.append(p)
                elif t == PointType.RANK2_NUCLEUS:
                    nucleus.append(p)
            (qpt,) = nucleus
            return sum(1 for p in rank1 if self._line_od(qpt, p) == target)
        if mode != "full":
            raise ValueError(f"unknown mode {mode!r}")
        count = 0
        basis = self.solid.basis
        for coeffs in enumerate_subspaces(self.gf, 4, 2):
            rows = []
            for crow in coeffs.basis:
                v = [0] * 6
                for c, brow in zip(crow, basis):
                    if c:
                        for j in range(6):
                            v[j] ^= self.gf.mul(c, brow[j])
                rows.append(tuple(v))
            if self._line_od(rows[0], rows[1]) == target:
                count += 1
        return count

    # -- serialization -----------------------------------------------------

    def record(self, label: int | None = None) -> dict:
        """Distribution record; field order is normative for output streams."""
        rec = {
            "q": self.q,
            "solid": solid_to_hex(self.solid),
            "point_od": list(self.point_od()),
            "hyperplane_od": list(self.hyperplane_od()),
            "base_count": len(self.base_points()),
        }
        if label is not None:
            rec["label"] = label
        return rec


def lemma_identities_hold(q: int, point_od: PointOD, hyperplane_od: HyperplaneOD) -> bool:
    """The two linear identities tying a solid's hyperplane OD to its number
    of rank-1 points (valid for q > 2):
        a1 + 2*a2r + a3 = q + b    and    a2r - a2i + 1 = b,  b = r1."""
    b = point_od[0]
    a1, a2r, a2i, a3 = hyperplane_od
    return a1 + 2 * a2r + a3 == q + b and a2r - a2i + 1 == b


def pencil_lines(q: int) -> int:
    """Number of lines in a solid: (q^2+1)(q^2+q+1)."""
    return (q * q + 1) * (q * q + q + 1)
