"""Exhaustive, vectorized classification of all solids of PG(5, q).

Solids are generated in canonical RREF order, batched by pivot pattern.
For each batch the point-orbit distribution is accumulated over the q^4
packed row-space combinations with a single lookup per combination (the
four 16-bit counters live in one int64), the pencil is read off the RREF
in closed form, and the hyperplane-orbit distribution comes from the q+1
conic-kind lookups.  The OD pair determines the orbit label except for
{11, 12} (and {4, 9} at q = 2), which are broken by special-line counts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dfield

import numpy as np

from .field import gf
from .classifier import ClassificationInconsistency, expected_table, od_pair_index
from .pencil import PencilSolid
from .projgeom import (
    Subspace,
    all_points,
    canonicalize,
    free_positions,
    gaussian_count,
    pattern_sizes,
    pivot_patterns,
    rref,
)
from .tables import SENTINEL, PackedTables, tables
from .veronese import ConicKind, PointType, nu

_POD_WEIGHTS = np.array([1, 1 << 16, 1 << 32, 1 << 48, 0], dtype=np.int64)


def batch_rows(q: int, pattern: tuple[int, ...], start: int, stop: int) -> np.ndarray:
    """RREF bases start..stop-1 for a pivot pattern, as (B, 4, 6) int8.

    Entry order matches subspace_from_pattern_index: the last free position
    is the least significant digit of the index.
    """
    free = free_positions(6, pattern)
    idx = np.arange(start, stop, dtype=np.int64)
    rows = np.zeros((idx.size, len(pattern), 6), dtype=np.int8)
    for i, p in enumerate(pattern):
        rows[:, i, p] = 1
    nfree = len(free)
    for pos, (i, j) in enumerate(free):
        rows[:, i, j] = (idx >> ((nfree - 1 - pos) * (q.bit_length() - 1))) & (q - 1)
    return rows


def kernel_rows(pattern: tuple[int, ...], rows: np.ndarray) -> np.ndarray:
    """Annihilator (pencil) bases of RREF solids with a fixed pivot pattern.

    For each free column f the kernel vector has 1 at f and the column
    entries of the basis at the pivot positions (characteristic 2).
    """
    b = rows.shape[0]
    free = [j for j in range(6) if j not in pattern]
    out = np.zeros((b, len(free), 6), dtype=np.int8)
    for a, f in enumerate(free):
        out[:, a, f] = 1
        for i, p in enumerate(pattern):
            out[:, a, p] = rows[:, i, f]
    return out


def pod_batch(pt: PackedTables, row_codes: np.ndarray) -> np.ndarray:
    """Point-orbit distributions, shape (B, 4), from packed basis codes (B, 4)."""
    q = pt.q
    wtab = _POD_WEIGHTS[pt.point_type]
    sc = pt.smul[:, row_codes]  # (q, B, 4)
    acc = np.zeros(row_codes.shape[0], dtype=np.int64)
    for c0 in range(q):
        t0 = sc[c0, :, 0]
        for c1 in range(q):
            t1 = t0 ^ sc[c1, :, 1]
            for c2 in range(q):
                t2 = t1 ^ sc[c2, :, 2]
                for c3 in range(q):
                    acc += wtab[t2 ^ sc[c3, :, 3]]
    pod = np.empty((row_codes.shape[0], 4), dtype=np.int32)
    for k in range(4):
        cnt = (acc >> (16 * k)) & 0xFFFF
        if q > 2 and np.any(cnt % (q - 1)):
            raise AssertionError("vector counts not divisible by q - 1")
        pod[:, k] = cnt // (q - 1)
    return pod


def hod_batch(pt: PackedTables, k_codes: np.ndarray) -> np.ndarray:
    """Hyperplane-orbit distributions, shape (B, 4), from pencil codes (B, 2)."""
    q = pt.q
    b = k_codes.shape[0]
    hod = np.zeros((b, 4), dtype=np.int32)
    combos = [k_codes[:, 1]] + [k_codes[:, 0] ^ pt.smul[s, k_codes[:, 1]] for s in range(q)]
    for code in combos:
        kind = pt.conic_kind[code]
        if np.any(kind == SENTINEL):
            raise AssertionError("degenerate pencil (zero conic vector)")
        for k in range(4):
            hod[:, k] += kind == k
    return hod


def _od_key(pod: np.ndarray, hod: np.ndarray) -> np.ndarray:
    """Pack an OD pair into one int64 (pod entries < 2^10, hod < 2^4)."""
    key = np.zeros(pod.shape[0], dtype=np.int64)
    for k in range(4):
        key |= pod[:, k].astype(np.int64) << (10 * k)
        key |= hod[:, k].astype(np.int64) << (40 + 4 * k)
    return key


def _expected_keys(q: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    pairs = od_pair_index(q)
    keys, cands = [], []
    for (pod, hod), labels in pairs.items():
        k = 0
        for i in range(4):
            k |= pod[i] << (10 * i)
            k |= hod[i] << (40 + 4 * i)
        keys.append(k)
        cands.append(labels)
    order = np.argsort(keys)
    return np.array(keys, dtype=np.int64)[order], [cands[i] for i in order]


# -- tie breaks ---------------------------------------------------------------

def _dot_eval(pt: PackedTables, vecs: np.ndarray, const: tuple[int, ...]) -> np.ndarray:
    """XOR-bilinear pairing of (B, 6) coefficient rows with a fixed 6-vector."""
    out = np.zeros(vecs.shape[0], dtype=np.int64)
    for i in range(6):
        if const[i]:
            out ^= pt.mul[const[i], vecs[:, i]]
    return out


def o6_candidate_counts(pt: PackedTables, kernels: np.ndarray) -> np.ndarray:
    """For solids with point OD [2,1,q^2+q-2,q^3]: how many of the two lines
    joining the solid's nucleus-plane point to its conic points consist of
    rank-2 secant points otherwise (0, 1 or 2).

    kernels holds the two pencil basis vectors, shape (B, 2, 6).  The two
    rank-1 points are the Veronese images of the pencil's base points; the
    nucleus point is the unique solid point with zero diagonal.  Both are
    found by testing the q^2+q+1 candidates against the pencil equations.
    """
    g = pt.gf
    b = kernels.shape[0]
    p1 = np.full(b, -1, dtype=np.int64)
    p2 = np.full(b, -1, dtype=np.int64)
    nuc = np.full(b, -1, dtype=np.int64)
    k1, k2 = kernels[:, 0, :], kernels[:, 1, :]
    for x in all_points(g, 2):
        v = nu(g, x)
        on = (_dot_eval(pt, k1, v) == 0) & (_dot_eval(pt, k2, v) == 0)
        code = int(pt.pack_rows(np.array(v, dtype=np.int64)))
        first = on & (p1 < 0)
        p1[first] = code
        p2[on & ~first & (p2 < 0)] = code
    for y in all_points(g, 2):
        n = (0, y[0], y[1], 0, y[2], 0)
        on = (_dot_eval(pt, k1, n) == 0) & (_dot_eval(pt, k2, n) == 0)
        code = int(pt.pack_rows(np.array(n, dtype=np.int64)))
        nuc[on & (nuc < 0)] = code
    if np.any(p1 < 0) or np.any(p2 < 0) or np.any(nuc < 0):
        raise ClassificationInconsistency("tie-break solid missing expected points")
    count = np.zeros(b, dtype=np.int32)
    for p in (p1, p2):
        good = np.ones(b, dtype=bool)
        for s in range(1, pt.q):
            good &= pt.point_type[p ^ pt.smul[s, nuc]] == int(PointType.RANK2_SECANT)
        count += good
    return count


def _resolve_4_9(q: int, rows: np.ndarray, sel: np.ndarray) -> np.ndarray:
    """q = 2 only: split the {4, 9} OD collision by the full line scan."""
    g = gf(q)
    labels = np.empty(sel.sum(), dtype=np.int8)
    for k, i in enumerate(np.nonzero(sel)[0]):
        basis = tuple(tuple(int(x) for x in r) for r in rows[i])
        ps = PencilSolid.from_solid(Subspace(g, basis))
        n = ps.count_o6_lines(mode="full")
        if n == 3:
            labels[k] = 4
        elif n == 0:
            labels[k] = 9
        else:
            raise ClassificationInconsistency(
                f"q={q}: {{4,9}} tie break saw {n} special lines"
            )
    return labels


# -- batch classification -------------------------------------------------------

@dataclass
class BatchStats:
    """Associative tallies from one batch of solids."""

    counts: np.ndarray = dfield(default_factory=lambda: np.zeros(16, dtype=np.int64))
    total: int = 0
    identity_violations: int = 0      # hod/pod linear identities (q > 2)
    all_singular_empty_base: int = 0  # no nonsingular conic and no conic point
    forbidden_hod: int = 0            # hod of shape [1, 0, a2i > 0, 0]

    def merge(self, other: "BatchStats") -> "BatchStats":
        self.counts += other.counts
        self.total += other.total
        self.identity_violations += other.identity_violations
        self.all_singular_empty_base += other.all_singular_empty_base
        self.forbidden_hod += other.forbidden_hod
        return self


def classify_batch(q: int, rows: np.ndarray, kernels: np.ndarray) -> tuple[np.ndarray, BatchStats]:
    """Labels (B,) plus tallies for RREF solids (B, 4, 6) with pencils (B, 2, 6)."""
    pt = tables(q)
    row_codes = pt.pack_rows(rows.astype(np.int64))
    k_codes = pt.pack_rows(kernels.astype(np.int64))
    pod = pod_batch(pt, row_codes)
    hod = hod_batch(pt, k_codes)

    keys, cands = _expected_keys(q)
    key = _od_key(pod, hod)
    pos = np.searchsorted(keys, key)
    pos[pos == keys.size] = 0
    if np.any(keys[pos] != key):
        bad = int(np.nonzero(keys[pos] != key)[0][0])
        raise ClassificationInconsistency(
            f"q={q}: OD pair {tuple(pod[bad])}/{tuple(hod[bad])} matches no orbit"
        )
    labels = np.zeros(rows.shape[0], dtype=np.int8)
    for ci, labelset in enumerate(cands):
        sel = pos == ci
        if not np.any(sel):
            continue
        if len(labelset) == 1:
            labels[sel] = labelset[0]
        elif labelset == (11, 12):
            n = o6_candidate_counts(pt, kernels[sel])
            if np.any(n > 1):
                raise ClassificationInconsistency(
                    f"q={q}: {{11,12}} tie break saw more than one special line"
                )
            labels[sel] = np.where(n == 1, 11, 12).astype(np.int8)
        elif labelset == (4, 9):
            labels[sel] = _resolve_4_9(q, rows, sel)
        else:
            raise ClassificationInconsistency(f"q={q}: unresolved candidates {labelset}")

    stats = BatchStats()
    stats.counts += np.bincount(labels, minlength=16).astype(np.int64)
    stats.total = rows.shape[0]
    if q > 2:
        # the linear identities are stated for q = 2^h with h > 1 only
        b = pod[:, 0]
        ok = (hod[:, 0] + 2 * hod[:, 1] + hod[:, 3] == q + b) & (hod[:, 1] - hod[:, 2] + 1 == b)
        stats.identity_violations = int((~ok).sum())
    stats.all_singular_empty_base = int(((hod[:, 3] == 0) & (pod[:, 0] == 0)).sum())
    stats.forbidden_hod = int(
        ((hod[:, 0] == 1) & (hod[:, 1] == 0) & (hod[:, 2] > 0) & (hod[:, 3] == 0)).sum()
    )
    return labels, stats


def _sweep_shard(args: tuple[int, tuple[int, ...], int, int]) -> BatchStats:
    q, pattern, start, stop = args
    rows = batch_rows(q, pattern, start, stop)
    kernels = kernel_rows(pattern, rows)
    _, stats = classify_batch(q, rows, kernels)
    return stats


@dataclass
class SweepResult:
    q: int
    counts: dict[int, int]
    total: int
    identity_violations: int
    all_singular_empty_base: int
    forbidden_hod: int

    @property
    def expected_counts(self) -> dict[int, int]:
        return {row.label: row.orbit_size for row in expected_table(self.q)}

    @property
    def ok(self) -> bool:
        """Counts, total, identities and the forbidden-OD shape.  The
        all-singular-empty-base tally is judged by its own check (it is
        nonzero at q = 2, where the 21 solids with ODs [0,1,10,4]/[0,1,2,0]
        have three singular conics and no base point)."""
        return (
            self.counts == self.expected_counts
            and self.total == gaussian_count(6, 4, self.q)
            and self.identity_violations == 0
            and self.forbidden_hod == 0
        )

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "counts": [self.counts[label] for label in range(1, 16)],
            "total": self.total,
            "pass": self.ok,
        }


def run_sweep(q: int, threads: int = 1, batch: int = 1 << 18) -> SweepResult:
    """Classify every solid of PG(5, q) and tally the orbit counts.

    Work is sharded by (pivot pattern, index range); shard tallies merge
    associatively, so the result is independent of thread count.
    """
    shards = []
    for pattern, size in pattern_sizes(6, 4, q):
        for start in range(0, size, batch):
            shards.append((q, pattern, start, min(start + batch, size)))
    total = BatchStats()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for stats in ex.map(_sweep_shard, shards):
                total.merge(stats)
    else:
        for shard in shards:
            total.merge(_sweep_shard(shard))
    return SweepResult(
        q=q,
        counts={label: int(total.counts[label]) for label in range(1, 16)},
        total=total.total,
        identity_violations=total.identity_violations,
        all_singular_empty_base=total.all_singular_empty_base,
        forbidden_hod=total.forbidden_hod,
    )


# -- sampled checks (q = 8 scale) ----------------------------------------------

def random_identity_check(q: int, n: int, seed: int = 0) -> tuple[int, int]:
    """Point/hyperplane OD identity check on n random solids; returns
    (tested, violations)."""
    g = gf(q)
    rng = np.random.default_rng(seed)
    rows_list, kern_list = [], []
    while len(rows_list) < n:
        raw = rng.integers(0, q, size=(4, 6))
        basis = rref(g, [tuple(int(x) for x in r) for r in raw])
        if len(basis) != 4:
            continue
        sub = Subspace(g, basis)
        rows_list.append(basis)
        kern_list.append(sub.annihilator().basis)
    rows = np.array(rows_list, dtype=np.int8)
    kernels = np.array(kern_list, dtype=np.int8)
    pt = tables(q)
    pod = pod_batch(pt, pt.pack_rows(rows.astype(np.int64)))
    hod = hod_batch(pt, pt.pack_rows(kernels.astype(np.int64)))
    b = pod[:, 0]
    ok = (hod[:, 0] + 2 * hod[:, 1] + hod[:, 3] == q + b) & (hod[:, 1] - hod[:, 2] + 1 == b)
    return n, int((~ok).sum())


# -- global censuses ------------------------------------------------------------

def point_census(q: int) -> list[int]:
    """Points of PG(5, q) per stratum (conic, nucleus, secant, rank 3)."""
    pt = tables(q)
    codes = np.arange(1, pt.ncodes, dtype=np.int64)
    normalized = pt.norm[codes] == codes
    return [int(x) for x in np.bincount(pt.point_type[codes[normalized]], minlength=4)[:4]]


def hyperplane_census(q: int) -> list[int]:
    """Hyperplanes of PG(5, q) per conic kind of their coefficient vectors."""
    pt = tables(q)
    codes = np.arange(1, pt.ncodes, dtype=np.int64)
    normalized = pt.norm[codes] == codes
    return [int(x) for x in np.bincount(pt.conic_kind[codes[normalized]], minlength=4)[:4]]


def expected_point_census(q: int) -> list[int]:
    s = q * q + q + 1
    return [s, s, (q * q - 1) * s, q ** 5 - q * q]


def expected_hyperplane_census(q: int) -> list[int]:
    s = q * q + q + 1
    return [s, q * (q + 1) * s // 2, q * (q - 1) * s // 2, q ** 5 - q * q]


def nested_hyperplane_check(q: int) -> tuple[int, int]:
    """For every nonsingular conic c, the hyperplane of c must contain
    exactly q^2 solids that lie both in a double-line hyperplane and in a
    line-pair hyperplane.  Returns (hyperplanes tested, violations).

    Solids inside the hyperplane of c correspond to pencils through c; a
    pencil is counted from its q^2 - q spanning vectors off the span of c.
    """
    pt = tables(q)
    codes = np.arange(pt.ncodes, dtype=np.int64)
    normalized = (pt.norm[codes] == codes) & (codes > 0)
    nonsingular = normalized & (pt.conic_kind == int(ConicKind.NONSINGULAR))
    kinds = pt.conic_kind
    tested = violations = 0
    for c in np.nonzero(nonsingular)[0]:
        span_c = pt.smul[:, c]  # q codes (incl. 0)
        off = np.ones(pt.ncodes, dtype=bool)
        off[span_c] = False
        w = codes[off]
        has_l2 = np.zeros(w.size, dtype=bool)
        has_pair = np.zeros(w.size, dtype=bool)
        for s in range(q):
            k = kinds[w ^ int(span_c[s])]
            has_l2 |= k == int(ConicKind.DOUBLE_LINE)
            has_pair |= (k == int(ConicKind.REAL_PAIR)) | (k == int(ConicKind.IMAGINARY_PAIR))
        hits = int((has_l2 & has_pair).sum())
        assert hits % (q * q - q) == 0
        tested += 1
        if hits // (q * q - q) != q * q:
            violations += 1
    return tested, violations
