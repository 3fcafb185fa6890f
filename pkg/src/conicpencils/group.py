"""PGL(3, q): enumeration, canonical orbit representatives, stabilizers.

A PGL element is stored as a 3x3 matrix tuple whose first nonzero entry is
1 (one matrix per projective class).  Stabilizer orders are found by a
single vectorized membership scan over the whole group: A stabilizes a
solid iff composing each conic of its pencil with A lands back in the
pencil, which needs only the two pencil basis vectors per candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .field import GF, gf
from .pencil import PencilSolid
from .projgeom import Matrix, all_points, normalize_point
from .tables import PackedTables, tables_for
from .veronese import mat3_det, mat3_mul

IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def pgl3_order(q: int) -> int:
    return q ** 3 * (q ** 3 - 1) * (q ** 2 - 1)


def normalize_matrix(field: GF, a: Matrix) -> Matrix:
    """Scale a so its first nonzero entry is 1 (canonical PGL representative)."""
    flat = [x for row in a for x in row]
    lead = next(x for x in flat if x)
    if lead == 1:
        return tuple(tuple(row) for row in a)
    s = field.inv(lead)
    return tuple(tuple(field.mul(s, x) for x in row) for row in a)


def is_scalar(a: Matrix) -> bool:
    return (
        a[0][1] == a[0][2] == a[1][0] == a[1][2] == a[2][0] == a[2][1] == 0
        and a[0][0] == a[1][1] == a[2][2] != 0
    )


def enumerate_pgl3(field: GF):
    """Every element of PGL(3, q) exactly once.

    Rows are chosen as (normalized point, vector off its span, vector off
    the span of the first two), which hits each projective class once
    without any determinant filtering.
    """
    q = field.q
    vectors = list(product(field.elements(), repeat=3))
    for r1 in all_points(field, 2):
        span1 = {tuple(field.mul(s, x) for x in r1) for s in field.elements()}
        for r2 in vectors:
            if r2 in span1:
                continue
            span2 = {
                tuple(field.mul(s, x) ^ field.mul(t, y) for x, y in zip(r1, r2))
                for s in field.elements()
                for t in field.elements()
            }
            for r3 in vectors:
                if r3 not in span2:
                    yield (tuple(r1), r2, r3)


def pgl3_rows_array(field: GF) -> np.ndarray:
    """All of PGL(3, q) as a small-int array of shape (|PGL|, 3, 3).

    Built vectorized: normalized first rows, all second rows off the first
    row's span, all third rows with nonzero determinant relative to the
    first two.  Determinant filtering at the last step only keeps exactly
    the vectors outside the rank-2 span, so each class appears once.
    """
    q = field.q
    mul = field.mul_table.astype(np.int8)
    pts = np.array(list(all_points(field, 2)), dtype=np.int8)       # (P, 3)
    vecs = np.array(list(product(range(q), repeat=3)), dtype=np.int8)  # (q^3, 3)

    # pairs (r1, r2) with r2 not proportional to r1
    scaled = mul[np.arange(q)[:, None], pts[:, None, :]]  # (P, q, 3)
    r1 = np.repeat(pts, q ** 3, axis=0)
    r2 = np.tile(vecs, (pts.shape[0], 1))
    prop = (scaled[:, :, None, :] == vecs[None, None, :, :]).all(axis=3).any(axis=1)
    keep = ~prop.reshape(-1)
    r1, r2 = r1[keep], r2[keep]

    n2 = r1.shape[0]
    r1 = np.repeat(r1, q ** 3, axis=0)
    r2 = np.repeat(r2, q ** 3, axis=0)
    r3 = np.tile(vecs, (n2, 1))
    det = _det_rows(mul, r1, r2, r3)
    keep = det != 0
    out = np.stack([r1[keep], r2[keep], r3[keep]], axis=1)
    assert out.shape[0] == pgl3_order(q)
    return out


def _det_rows(mul: np.ndarray, r1, r2, r3) -> np.ndarray:
    m = lambda a, b: mul[a, b]
    return (
        m(r1[:, 0], m(r2[:, 1], r3[:, 2]) ^ m(r2[:, 2], r3[:, 1]))
        ^ m(r1[:, 1], m(r2[:, 0], r3[:, 2]) ^ m(r2[:, 2], r3[:, 0]))
        ^ m(r1[:, 2], m(r2[:, 0], r3[:, 1]) ^ m(r2[:, 1], r3[:, 0]))
    )


# -- canonical representatives -------------------------------------------------

def representative_conics(field: GF, label: int) -> tuple[tuple, tuple]:
    """Generating pair of conic coefficient vectors for each orbit.

    Field parameters (gamma with Tr(1/gamma) = 1, gamma with Tr(gamma) = 1,
    the first irreducible b*x^3 + c*x + 1) are chosen by deterministic
    canonical search so representatives are reproducible.
    """
    m = field.mul
    gi = field.find_gamma_inv_trace
    gt = field.find_gamma_trace
    data = {
        1: lambda: ((0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 1, 0)),
        2: lambda: ((0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0)),
        3: lambda: ((0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)),
        4: lambda: ((0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0)),
        5: lambda: ((0, 1, 0, 0, 0, 1), (1, 0, 0, 0, 0, 0)),
        6: lambda: ((0, 1, 0, 0, 0, 1), (0, 0, 0, 0, 0, 1)),
        7: lambda: ((0, 1, 0, 0, 0, 1), (1, 0, 0, 1, 0, m(gi(), gi()))),
        8: lambda: ((0, 1, 0, 0, 0, 1), (0, 1, 1, 0, 1, 1)),
        9: lambda: ((1, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 1)),
        10: lambda: ((0, 1, 0, 0, 0, 1), (0, 1, 0, 1, gi(), 0)),
        11: lambda: ((0, 1, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0)),
        12: lambda: ((0, 1, 0, 0, 0, 1), (0, 0, 1, 0, 1, gi())),
        13: lambda: ((gt(), 1, 0, 1, 0, 0), (gt(), 0, 1, 0, 0, 1)),
        14: lambda: ((0, 0, 1, 1, 0, gt()), (gt(), 1, 0, 1, 0, 0)),
        15: lambda: (
            (0, 1, 0, 0, 0, 1),
            (0, 0, 1) + (lambda b, c: (b, 0, c))(*field.find_irreducible_cubic_params()),
        ),
    }
    if label not in data:
        raise ValueError(f"orbit label must be 1..15, got {label}")
    return data[label]()


def representative(q: int, label: int, field: GF | None = None) -> PencilSolid:
    """Canonical pencil/solid representative of an orbit."""
    f = field if field is not None else gf(q)
    c1, c2 = representative_conics(f, label)
    return PencilSolid.from_conics(f, c1, c2)


# -- stabilizers ---------------------------------------------------------------

def compose_conic_rows(pt: PackedTables, c: tuple, rows: np.ndarray) -> np.ndarray:
    """Packed coefficient codes of Q_c composed with each matrix in rows.

    rows has shape (N, 3, 3); the result codes the conic Q_c(A x) for each A.
    The coefficient of x_k x_l (k <= l) in Q(Ax) is
        sum over i <= j of a_ij * (A_ik A_jl + [k < l] A_il A_jk).
    """
    mul = pt.mul
    n = rows.shape[0]
    upper = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
    out = np.zeros(n, dtype=np.int64)
    for pos, (k, l) in enumerate(upper):
        coeff = np.zeros(n, dtype=np.int64)
        for a, (i, j) in zip(c, upper):
            if not a:
                continue
            term = mul[rows[:, i, k], rows[:, j, l]]
            if k != l:
                term = term ^ mul[rows[:, i, l], rows[:, j, k]]
            coeff ^= mul[a, term]
        out |= coeff << pt.shifts[pos]
    return out


def pencil_membership(pt: PackedTables, ps: PencilSolid) -> np.ndarray:
    """Boolean array over packed codes: code lies in the pencil's 2-space."""
    codes = pt.pack_rows(np.array(ps.pencil.basis, dtype=np.int64))
    span = pt.smul[:, codes[0]][:, None] ^ pt.smul[:, codes[1]][None, :]
    in_p = np.zeros(pt.ncodes, dtype=bool)
    in_p[span.reshape(-1)] = True
    in_p[0] = False
    return in_p


def stabilizer_matrices(
    ps: PencilSolid, rows: np.ndarray | None = None, chunk: int = 1 << 20
) -> list[Matrix]:
    """All PGL(3, q) elements stabilizing the solid, as matrix tuples."""
    pt = tables_for(ps.gf)
    if rows is None:
        rows = pgl3_rows_array(ps.gf)
    in_p = pencil_membership(pt, ps)
    c1, c2 = ps.pencil.basis
    keep = []
    for lo in range(0, rows.shape[0], chunk):
        part = rows[lo: lo + chunk]
        mask = in_p[compose_conic_rows(pt, c1, part)]
        survivors = part[mask]
        if survivors.shape[0]:
            mask2 = in_p[compose_conic_rows(pt, c2, survivors)]
            keep.append(survivors[mask2])
    if not keep:
        return []
    found = np.concatenate(keep)
    return [tuple(tuple(int(x) for x in row) for row in a) for a in found]


def element_order(field: GF, a: Matrix) -> int:
    """Order of a in PGL(3, q): least n with a^n scalar."""
    p = a
    for n in range(1, pgl3_order(field.q) + 1):
        if is_scalar(p):
            return n
        p = mat3_mul(field, p, a)
    raise AssertionError("element order exceeded the group order")


def _pgl_equal(field: GF, a: Matrix, b: Matrix) -> bool:
    return normalize_matrix(field, a) == normalize_matrix(field, b)


@dataclass(frozen=True)
class StabilizerReport:
    label: int
    q: int
    order: int
    expected_order: int
    abelian: bool
    order_multiset: dict[int, int]
    center_order: int

    @property
    def ok(self) -> bool:
        return self.order == self.expected_order

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "q": self.q,
            "order": self.order,
            "expected_order": self.expected_order,
            "abelian": self.abelian,
            "order_multiset": {str(k): v for k, v in sorted(self.order_multiset.items())},
            "center_order": self.center_order,
            "pass": self.ok,
        }


def stabilizer_report(
    q: int, label: int, rows: np.ndarray | None = None, field: GF | None = None
) -> StabilizerReport:
    """Scan PGL(3, q) for the stabilizer of the canonical representative and
    summarize its order, element-order multiset, abelianness and center."""
    from .classifier import expected_row

    f = field if field is not None else gf(q)
    ps = representative(q, label, field=f)
    elems = stabilizer_matrices(ps, rows=rows)
    norm = [normalize_matrix(f, a) for a in elems]

    orders: dict[int, int] = {}
    for a in norm:
        n = element_order(f, a)
        orders[n] = orders.get(n, 0) + 1

    abelian = True
    for i, a in enumerate(norm):
        for b in norm[i + 1:]:
            if not _pgl_equal(f, mat3_mul(f, a, b), mat3_mul(f, b, a)):
                abelian = False
                break
        if not abelian:
            break

    center = 0
    for a in norm:
        if all(_pgl_equal(f, mat3_mul(f, a, b), mat3_mul(f, b, a)) for b in norm):
            center += 1

    return StabilizerReport(
        label=label,
        q=q,
        order=len(norm),
        expected_order=expected_row(q, label).stabilizer_order,
        abelian=abelian,
        order_multiset=orders,
        center_order=center,
    )


def all_stabilizer_reports(q: int, field: GF | None = None) -> list[StabilizerReport]:
    """Stabilizer reports for all fifteen representatives from one shared
    enumeration of PGL(3, q)."""
    f = field if field is not None else gf(q)
    rows = pgl3_rows_array(f)
    return [stabilizer_report(q, label, rows=rows, field=f) for label in range(1, 16)]


# -- stated stabilizer generators ---------------------------------------------

def structured_cubic_params(field: GF) -> tuple[int, int]:
    """Parameters (b, c) of an irreducible b*x^3 + c*x + 1 in the shape the
    explicit order-3 stabilizer generator needs: c = 0 for even h (b a
    non-cube), c = b for odd h."""
    if field.h % 2 == 0:
        for b in field.units():
            if not field.is_cube(b) and field.cubic_has_no_roots(b, 0):
                return (b, 0)
    else:
        for b in field.units():
            if field.cubic_has_no_roots(b, b):
                return (b, b)
    raise AssertionError("no structured cubic parameters found")


def stabilizer_generators(field: GF, label: int) -> list[Matrix]:
    """Explicit generating matrices for the stabilizers with fixed finite
    structure (labels 8, 13, 14, 15)."""
    q, h = field.q, field.h
    if label == 8:
        w = field.primitive_element()
        return [
            ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
            ((1, 0, w ^ 1), (0, 1, w ^ 1), (0, 0, w)),
        ]
    if label == 13:
        return [
            ((1, 0, 0), (1, 1, 0), (0, 0, 1)),
            ((1, 0, 0), (0, 1, 0), (1, 0, 1)),
            ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        ]
    if label == 14:
        g = field.find_gamma_trace()
        return [((1, 0, 0), (1, 1, 0), (0, field.inv(g), 1))]
    if label == 15:
        b, c = structured_cubic_params(field)
        if h % 2 == 0:
            z = field.cube_root_of_unity()
            return [((1, 0, 0), (0, z, 0), (0, 0, field.mul(z, z)))]
        # odd h: zeta = b^4 + b^16 + ... + b^(2^(h-1)*2), empty sum for h = 1
        z = 0
        e = b
        for _ in range((h - 1) // 2):
            e = field.pow(e, 4)
            z ^= e
        return [
            (
                (1, 0, 0),
                (0, z, b),
                (0, b, field.mul(z, z) ^ field.mul(b, b)),
            )
        ]
    raise ValueError(f"no stated generators for label {label}")


def generated_subgroup(field: GF, gens: list[Matrix]) -> set[Matrix]:
    """Closure of the generators in PGL(3, q) (normalized matrices)."""
    gens = [normalize_matrix(field, g) for g in gens]
    group = {normalize_matrix(field, IDENTITY)}
    frontier = list(group)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = normalize_matrix(field, mat3_mul(field, a, g))
                if b not in group:
                    group.add(b)
                    nxt.append(b)
        frontier = nxt
    return group


def verify_generators(q: int, label: int, field: GF | None = None) -> dict:
    """Check the stated generators stabilize the representative and generate
    a group of the expected order."""
    from .classifier import expected_row

    f = field if field is not None else gf(q)
    if label == 15:
        # the stated generator fixes the structured-parameter member of
        # the orbit, not the canonical-search representative
        b, c = structured_cubic_params(f)
        ps = PencilSolid.from_conics(f, (0, 1, 0, 0, 0, 1), (0, 0, 1, b, 0, c))
    else:
        ps = representative(q, label, field=f)
    gens = stabilizer_generators(f, label)
    pt = tables_for(f)
    in_p = pencil_membership(pt, ps)
    stabilizes = True
    for g in gens:
        rows = np.array([g], dtype=np.int64)
        for c in ps.pencil.basis:
            if not in_p[compose_conic_rows(pt, c, rows)][0]:
                stabilizes = False
    group = generated_subgroup(f, gens)
    expected = expected_row(q, label).stabilizer_order
    return {
        "label": label,
        "q": q,
        "stabilizes": stabilizes,
        "generated_order": len(group),
        "expected_order": expected,
        "pass": stabilizes and len(group) == expected,
    }
