"""Points and subspaces of PG(n, q): canonical echelon bases, enumeration,
annihilators (duality) and incidence.

A projective point is a nonzero coordinate tuple normalized so its first
nonzero coordinate is 1.  A subspace is held as the reduced row-echelon
basis of its underlying vector space, which is the unique canonical
representative of the row space, so subspace equality is plain tuple
equality.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from .field import GF

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def normalize_point(gf: GF, v: Vector) -> Vector:
    """Scale v so its first nonzero coordinate is 1."""
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            s = gf.inv(x)
            return tuple(gf.mul(s, y) for y in v)
    raise ValueError("cannot normalize the zero vector")


def rref(gf: GF, rows) -> Matrix:
    """Reduced row-echelon form over GF(q); zero rows are dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        s = gf.inv(mat[rank][col])
        if s != 1:
            mat[rank] = [gf.mul(s, x) for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x ^ gf.mul(f, y) for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(r) for r in mat[:rank])


class Subspace:
    """A projective subspace of PG(n-1, q), stored as an RREF basis.

    `dim` is the vector-space dimension k; the projective dimension is k-1.
    """

    __slots__ = ("gf", "basis")

    def __init__(self, gf: GF, basis: Matrix):
        self.gf = gf
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ncols(self) -> int:
        return len(self.basis[0])

    @property
    def num_points(self) -> int:
        q = self.gf.q
        return (q ** self.dim - 1) // (q - 1)

    def contains(self, v: Vector) -> bool:
        """Membership of a vector in the row space (reduce against basis)."""
        gf = self.gf
        w = list(v)
        for row in self.basis:
            piv = next(i for i, x in enumerate(row) if x)
            if w[piv]:
                f = w[piv]
                w = [x ^ gf.mul(f, y) for x, y in zip(w, row)]
        return not any(w)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def points(self) -> Iterator[Vector]:
        """Each projective point of the subspace exactly once, normalized.

        Combinations with leading coefficient 1 on an RREF basis are
        already in normalized form.
        """
        gf, basis, k = self.gf, self.basis, self.dim
        ncols = self.ncols
        for lead in range(k):
            for rest in product(gf.elements(), repeat=k - 1 - lead):
                v = list(basis[lead])
                for c, row in zip(rest, basis[lead + 1:]):
                    if c:
                        for j in range(ncols):
                            v[j] ^= gf.mul(c, row[j])
                yield tuple(v)

    def annihilator(self) -> "Subspace":
        """All linear forms vanishing on the subspace (an involution)."""
        gf = self.gf
        basis = self.basis
        n = self.ncols
        pivots = [next(i for i, x in enumerate(row) if x) for row in basis]
        free = [j for j in range(n) if j not in pivots]
        out = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for i, p in enumerate(pivots):
                v[p] = basis[i][f]  # char 2: no sign
            out.append(tuple(v))
        return Subspace(gf, rref(gf, out))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.gf.q == other.gf.q
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.gf.q, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(q={self.gf.q}, dim={self.dim}, basis={self.basis})"


def canonicalize(gf: GF, generators) -> Subspace:
    """Subspace spanned by the given coordinate tuples (RREF basis)."""
    basis = rref(gf, generators)
    if not basis:
        raise ValueError("generators span only the zero space")
    return Subspace(gf, basis)


def full_space(gf: GF, n: int) -> Subspace:
    eye = tuple(tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1))
    return Subspace(gf, eye)


def all_points(gf: GF, n: int) -> Iterator[Vector]:
    """All points of PG(n, q), normalized, in a deterministic order."""
    return full_space(gf, n).points()


def gaussian_count(n: int, k: int, q: int) -> int:
    """Number of k-dimensional vector subspaces of GF(q)^n."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def pivot_patterns(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of column indices, lexicographically ordered."""
    return sorted(combinations(range(n), k))


def free_positions(n: int, pattern: tuple[int, ...]) -> list[tuple[int, int]]:
    """Row-major free (row, col) slots of an RREF matrix with given pivots."""
    out = []
    for i, p in enumerate(pattern):
        for j in range(p + 1, n):
            if j not in pattern:
                out.append((i, j))
    return out


def pattern_sizes(n: int, k: int, q: int) -> list[tuple[tuple[int, ...], int]]:
    """(pattern, number of RREF matrices with that pattern) pairs."""
    return [(p, q ** len(free_positions(n, p))) for p in pivot_patterns(n, k)]


def subspace_from_pattern_index(gf: GF, n: int, pattern: tuple[int, ...], index: int) -> Matrix:
    """The index-th RREF basis with the given pivot pattern (lex over entries)."""
    k = len(pattern)
    free = free_positions(n, pattern)
    mat = [[0] * n for _ in range(k)]
    for i, p in enumerate(pattern):
        mat[i][p] = 1
    for pos in reversed(free):
        mat[pos[0]][pos[1]] = index % gf.q
        index //= gf.q
    if index:
        raise IndexError("index out of range for pivot pattern")
    return tuple(tuple(r) for r in mat)


def enumerate_subspaces(gf: GF, n: int, k: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces of GF(q)^n, RREF, lexicographic over
    pivot patterns then entries.  This fixed order makes sharded sweeps
    reproducible."""
    for pattern in pivot_patterns(n, k):
        free = free_positions(n, pattern)
        for values in product(gf.elements(), repeat=len(free)):
            mat = [[0] * n for _ in range(k)]
            for i, p in enumerate(pattern):
                mat[i][p] = 1
            for (i, j), v in zip(free, values):
                mat[i][j] = v
            yield Subspace(gf, tuple(tuple(r) for r in mat))


def enumerate_solids(gf: GF) -> Iterator[Subspace]:
    """All solids (projective dimension 3) of PG(5, q)."""
    return enumerate_subspaces(gf, 6, 4)


# -- serialization ---------------------------------------------------------

def point_to_hex(gf: GF, v: Vector) -> str:
    return "".join(gf.to_hex(x) for x in v)


def point_from_hex(gf: GF, s: str, n: int = 6) -> Vector:
    if len(s) != n:
        raise ValueError(f"expected {n} hex digits, got {s!r}")
    return tuple(gf.from_hex(c) for c in s)


def solid_to_hex(solid: Subspace) -> str:
    """A solid serializes as q=<q>: plus 24 hex digits (row-major 4x6)."""
    gf = solid.gf
    digits = "".join(gf.to_hex(x) for row in solid.basis for x in row)
    return f"q={gf.q}:{digits}"


def solid_from_hex(gf: GF, s: str) -> Subspace:
    prefix = f"q={gf.q}:"
    if not s.startswith(prefix):
        raise ValueError(f"solid string must start with {prefix!r}")
    digits = s[len(prefix):]
    if len(digits) != 24:
        raise ValueError("solid string must carry 24 hex digits")
    vals = [gf.from_hex(c) for c in digits]
    rows = [tuple(vals[6 * i: 6 * i + 6]) for i in range(4)]
    sub = canonicalize(gf, rows)
    if sub.dim != 4:
        raise ValueError("rows do not span a solid (rank != 4)")
    return sub
