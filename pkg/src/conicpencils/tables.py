"""Packed lookup tables for the vectorized sweeps.

A vector of GF(q)^6 packs into an integer code of 6h bits (h bits per
coordinate, coordinate 0 least significant).  Packing is GF(2)-linear, so
vector addition is XOR of codes.  The tables below are built once per
field and shared by the exhaustive classification sweep, the stabilizer
scans and the hyperplane counting checks.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import GF, gf
from .veronese import ConicKind, PointType

# sentinel type/kind stored at code 0 so the zero vector can be binned away
SENTINEL = 4


class PackedTables:
    """Per-field packed code tables (immutable once built)."""

    def __init__(self, field: GF):
        self.gf = field
        q, h = field.q, field.h
        if q > 8:
            raise ValueError("packed tables support q <= 8 (desk-scale sweeps only)")
        self.q, self.h = q, h
        self.ncodes = q ** 6
        self.shifts = (h * np.arange(6)).astype(np.int64)
        self.mul = field.mul_table.astype(np.int64)

        codes = np.arange(self.ncodes, dtype=np.int64)
        coords = (codes[:, None] >> self.shifts[None, :]) & (q - 1)  # (N, 6)
        self.coords = coords

        # scalar multiples of whole packed vectors: smul[s, code]
        smul = np.empty((q, self.ncodes), dtype=np.int64)
        for s in range(q):
            smul[s] = self._pack(self.mul[s][coords])
        self.smul = smul

        # normalized projective representative of each nonzero code
        first = np.argmax(coords != 0, axis=1)
        lead = coords[np.arange(self.ncodes), first]
        inv = np.array([0] + [field.inv(a) for a in range(1, q)], dtype=np.int64)
        self.norm = smul[inv[lead], codes]
        self.norm[0] = 0

        self.point_type = self._build_point_types()
        self.conic_kind = self._build_conic_kinds()

    def _pack(self, coords: np.ndarray) -> np.ndarray:
        """Pack (..., 6) coordinate arrays into codes."""
        return (coords.astype(np.int64) << self.shifts).sum(axis=-1)

    def pack_rows(self, rows: np.ndarray) -> np.ndarray:
        return self._pack(rows)

    def scaled_rows(self, rows: np.ndarray) -> np.ndarray:
        """Packed scalar multiples: rows (..., 6) -> codes (..., q)."""
        scaled = self.mul[np.arange(self.q)[:, None], rows[..., None, :]]  # (..., q, 6)
        return self._pack(scaled)

    def _mul_cols(self, a, b):
        return self.mul[a, b]

    def _build_point_types(self) -> np.ndarray:
        """Stratum of every code's symmetric matrix [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]].

        Rank via the determinant and the nine 2x2 minors (char 2: minor of
        rows (i,j), cols (k,l) is M[i,k]M[j,l] + M[i,l]M[j,k])."""
        c = self.coords
        m = self._mul_cols
        y0, y1, y2, y3, y4, y5 = (c[:, i] for i in range(6))
        M = ((y0, y1, y2), (y1, y3, y4), (y2, y4, y5))
        det = (
            m(y0, m(y3, y5) ^ m(y4, y4))
            ^ m(y1, m(y1, y5) ^ m(y4, y2))
            ^ m(y2, m(y1, y4) ^ m(y3, y2))
        )
        rank_le_1 = np.ones(self.ncodes, dtype=bool)
        for i in range(3):
            for j in range(i + 1, 3):
                for k in range(3):
                    for l in range(k + 1, 3):
                        minor = m(M[i][k], M[j][l]) ^ m(M[i][l], M[j][k])
                        rank_le_1 &= minor == 0
        diag_zero = (y0 == 0) & (y3 == 0) & (y5 == 0)
        types = np.where(
            det != 0,
            int(PointType.RANK3),
            np.where(
                rank_le_1,
                int(PointType.RANK1),
                np.where(diag_zero, int(PointType.RANK2_NUCLEUS), int(PointType.RANK2_SECANT)),
            ),
        ).astype(np.uint8)
        types[0] = SENTINEL
        return types

    def _build_conic_kinds(self) -> np.ndarray:
        """Conic kind of every code's coefficient vector (a00,a01,a02,a11,a12,a22).

        Nonsingular by the discriminant; double lines by the vanishing of
        the mixed coefficients; real vs imaginary line pairs by the
        authoritative rational point count (2q+1 vs 1), evaluated over all
        points of PG(2, q) in one matrix pass."""
        c = self.coords
        m = self._mul_cols
        a00, a01, a02, a11, a12, a22 = (c[:, i] for i in range(6))
        disc = m(a00, m(a12, a12)) ^ m(a11, m(a02, a02)) ^ m(a22, m(a01, a01)) ^ m(a01, m(a02, a12))
        kinds = np.full(self.ncodes, int(ConicKind.NONSINGULAR), dtype=np.uint8)
        singular = disc == 0
        double = singular & (a01 == 0) & (a02 == 0) & (a12 == 0)
        kinds[double] = int(ConicKind.DOUBLE_LINE)
        pairs = np.nonzero(singular & ~double)[0]
        if pairs.size:
            from .projgeom import all_points
            pts = np.array(list(all_points(self.gf, 2)), dtype=np.int64)  # (P, 3)
            x0, x1, x2 = pts[:, 0], pts[:, 1], pts[:, 2]
            vero = np.stack(
                [m(x0, x0), m(x0, x1), m(x0, x2), m(x1, x1), m(x1, x2), m(x2, x2)],
                axis=1,
            )  # (P, 6)
            vals = np.zeros((pairs.size, pts.shape[0]), dtype=np.int64)
            for i in range(6):
                vals ^= self.mul[c[pairs, i][:, None], vero[None, :, i]]
            zeros = (vals == 0).sum(axis=1)
            real = zeros == 2 * self.q + 1
            imag = zeros == 1
            if not np.all(real | imag):
                raise AssertionError("line pair with unexpected point count")
            kinds[pairs[real]] = int(ConicKind.REAL_PAIR)
            kinds[pairs[imag]] = int(ConicKind.IMAGINARY_PAIR)
        kinds[0] = SENTINEL
        return kinds


@lru_cache(maxsize=None)
def tables(q: int) -> PackedTables:
    return PackedTables(gf(q))


def tables_for(field: GF) -> PackedTables:
    if field.modulus == gf(field.q).modulus:
        return tables(field.q)
    return PackedTables(field)
