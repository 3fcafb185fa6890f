"""The fifteen PGL(3, q)-orbits of solids in PG(5, q), q even.

Each orbit has a label 1..15, a point-orbit distribution, a hyperplane-orbit
distribution, a stabilizer order and an orbit size, all closed forms in q.
The OD pair separates the orbits except for {11, 12} (every q) and, only at
q = 2, additionally {4, 9}; those collisions are broken by counting lines
of the solid with point OD [1, 1, q-1, 0].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pencil import HyperplaneOD, PencilSolid, PointOD


class ClassificationInconsistency(Exception):
    """A solid whose invariants match no orbit of the table."""


@dataclass(frozen=True)
class OrbitRow:
    label: int
    point_od: PointOD
    hyperplane_od: HyperplaneOD
    stabilizer_order: int
    orbit_size: int
    stabilizer_structure: str


def pgl3_order(q: int) -> int:
    return q ** 3 * (q ** 3 - 1) * (q ** 2 - 1)


def _exact(x: Fraction) -> int:
    assert x.denominator == 1
    return int(x)


def expected_table(q: int) -> list[OrbitRow]:
    """The invariants of the fifteen solid orbits, evaluated at q."""
    F = Fraction
    rows = [
        # (label, point_od, hyperplane_od, stab order, orbit size, structure)
        (1, (1, q + 1, 2 * q * q - 1, q ** 3 - q * q),
         (1, q // 2, q // 2, 0),
         q ** 3 * (q - 1), F((q ** 3 - 1) * (q + 1)), "q^3:C_{q-1}"),
        (2, (q + 1, q + 1, 2 * q * q - q - 1, q ** 3 - q * q),
         (1, q, 0, 0),
         q ** 3 * (q - 1) ** 2, F((q * q + q + 1) * (q + 1)), "q^{1+2}:C_{q-1}^2"),
        (3, (1, q * q + q + 1, q * q - 1, q ** 3 - q * q),
         (q + 1, 0, 0, 0),
         q ** 3 * (q - 1) ** 2 * (q + 1), F(q * q + q + 1), "point stabilizer"),
        (4, (q + 2, 1, 2 * q * q - 2, q ** 3 - q * q),
         (0, q + 1, 0, 0),
         q * (q - 1) ** 2 * (q + 1), F(q * q * (q * q + q + 1)), "line pair stabilizer"),
        (5, (1, q + 1, q * q - 1, q ** 3),
         (1, 0, 0, q),
         q * q * (q - 1), F(q * (q ** 3 - 1) * (q + 1)), "q^2:C_{q-1}"),
        (6, (2, q + 1, q * q + q - 2, q ** 3 - q),
         (1, 1, 0, q - 1),
         2 * (q - 1) ** 2, F(q ** 3 * (q * q + q + 1) * (q + 1), 2), "C_{q-1}^2:C2"),
        (7, (0, q + 1, q * q + q, q ** 3 - q),
         (1, 0, 1, q - 1),
         2 * (q + 1) * (q - 1), F(q ** 3 * (q ** 3 - 1), 2), "C_{q^2-1}:C2"),
        (8, (3, 1, q * q + 2 * q - 3, q ** 3 - q),
         (0, 2, 0, q - 1),
         2 * (q - 1), F(q ** 3 * (q ** 3 - 1) * (q + 1), 2), "C_{2(q-1)}"),
        (9, (4, 1, q * q + 3 * q - 4, q ** 3 - 2 * q),
         (0, 3, 0, q - 2),
         24, F(pgl3_order(q), 24), "Sym4"),
        (10, (1, 1, q * q + 2 * q - 1, q ** 3 - q),
         (0, 1, 1, q - 1),
         2 * (q - 1), F(q ** 3 * (q ** 3 - 1) * (q + 1), 2), "C_{2(q-1)}"),
        (11, (2, 1, q * q + q - 2, q ** 3),
         (0, 1, 0, q),
         q * (q - 1), F(q * q * (q ** 3 - 1) * (q + 1)), "q:C_{q-1}"),
        (12, (2, 1, q * q + q - 2, q ** 3),
         (0, 1, 0, q),
         4, F(pgl3_order(q), 4), "C2 x C2"),
        (13, (0, 1, q * q + 3 * q, q ** 3 - 2 * q),
         (0, 1, 2, q - 2),
         8, F(pgl3_order(q), 8), "D8"),
        (14, (0, 1, q * q + q, q ** 3),
         (0, 0, 1, q),
         4, F(pgl3_order(q), 4), "C4"),
        (15, (1, 1, q * q - 1, q ** 3 + q),
         (0, 0, 0, q + 1),
         3, F(pgl3_order(q), 3), "C3"),
    ]
    return [
        OrbitRow(label, pod, hod, stab, _exact(size), struct)
        for label, pod, hod, stab, size, struct in rows
    ]


def expected_row(q: int, label: int) -> OrbitRow:
    return expected_table(q)[label - 1]


def od_pair_index(q: int) -> dict[tuple[PointOD, HyperplaneOD], tuple[int, ...]]:
    """(point OD, hyperplane OD) -> sorted tuple of candidate labels."""
    index: dict[tuple[PointOD, HyperplaneOD], list[int]] = {}
    for row in expected_table(q):
        index.setdefault((row.point_od, row.hyperplane_od), []).append(row.label)
    return {k: tuple(sorted(v)) for k, v in index.items()}


def classify(
    ps: PencilSolid,
    point_od: PointOD | None = None,
    hyperplane_od: HyperplaneOD | None = None,
) -> int:
    """Orbit label of a solid from its ODs, with line-count tie breaks."""
    q = ps.q
    pod = ps.point_od() if point_od is None else tuple(point_od)
    hod = ps.hyperplane_od() if hyperplane_od is None else tuple(hyperplane_od)
    candidates = od_pair_index(q).get((pod, hod))
    if candidates is None:
        raise ClassificationInconsistency(
            f"q={q}: OD pair {pod}/{hod} matches no orbit"
        )
    if len(candidates) == 1:
        return candidates[0]
    if candidates == (11, 12):
        n = ps.count_o6_lines(mode="candidates")
        if n == 1:
            return 11
        if n == 0:
            return 12
        raise ClassificationInconsistency(
            f"q={q}: {{11,12}} tie break saw {n} special lines, expected 0 or 1"
        )
    if candidates == (4, 9):
        n = ps.count_o6_lines(mode="full")
        if n == 3:
            return 4
        if n == 0:
            return 9
        raise ClassificationInconsistency(
            f"q={q}: {{4,9}} tie break saw {n} special lines, expected 0 or 3"
        )
    raise ClassificationInconsistency(f"q={q}: unresolved candidates {candidates}")
