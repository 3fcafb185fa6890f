"""Veronese embedding, point stratification, conic classification and the
lifted group action, cross-checked against point-count oracles and the
packed lookup tables."""

from itertools import product

import numpy as np
import pytest

from conicpencils.field import gf
from conicpencils.projgeom import all_points, normalize_point
from conicpencils.tables import SENTINEL, tables
from conicpencils.veronese import (
    Conic,
    ConicKind,
    LiftedAction,
    PointType,
    classify_conic,
    conic_discriminant,
    count_conic_points,
    delta,
    delta_inv,
    lift,
    mat3_det,
    nu,
    nu_inverse,
    point_type,
)


def all_vectors6(q):
    return product(range(q), repeat=6)


@pytest.mark.parametrize("q", [2, 4])
def test_veronese_image(q):
    f = gf(q)
    image = {nu(f, p) for p in all_points(f, 2)}
    assert len(image) == q * q + q + 1
    for y in image:
        assert point_type(f, y) == PointType.RANK1
        assert nu(f, nu_inverse(f, y)) == y


@pytest.mark.parametrize("q", [2, 4])
def test_point_type_census(q):
    f = gf(q)
    counts = [0, 0, 0, 0]
    for p in all_points(f, 5):
        counts[point_type(f, p)] += 1
    s = q * q + q + 1
    assert counts == [s, s, (q * q - 1) * s, q ** 5 - q * q]


def test_nu_inverse_rejects_off_surface():
    f = gf(4)
    with pytest.raises(ValueError):
        nu_inverse(f, (0, 1, 0, 0, 0, 1))  # rank 3 point


@pytest.mark.parametrize("q", [2, 4])
def test_classify_conic_fast_equals_point_count(q):
    """Discriminant/restriction classification agrees with the rational
    point count oracle on every projective conic."""
    f = gf(q)
    seen = set()
    for c in all_vectors6(q):
        if not any(c):
            continue
        c = normalize_point(f, c)
        if c in seen:
            continue
        seen.add(c)
        fast = classify_conic(f, c, method="fast")
        slow = classify_conic(f, c, method="count")
        assert fast == slow
        n = count_conic_points(f, c)
        expected_points = {
            ConicKind.NONSINGULAR: q + 1,
            ConicKind.DOUBLE_LINE: q + 1,
            ConicKind.REAL_PAIR: 2 * q + 1,
            ConicKind.IMAGINARY_PAIR: 1,
        }[fast]
        assert n == expected_points
        assert (fast == ConicKind.NONSINGULAR) == (conic_discriminant(f, c) != 0)
    assert len(seen) == (q ** 6 - 1) // (q - 1)


def test_conic_examples():
    f = gf(4)
    assert classify_conic(f, (0, 1, 0, 0, 0, 1)) == ConicKind.NONSINGULAR
    assert classify_conic(f, (1, 0, 0, 0, 0, 1)) == ConicKind.DOUBLE_LINE
    assert classify_conic(f, (0, 1, 0, 0, 0, 0)) == ConicKind.REAL_PAIR
    # x0^2 + x0x1 + gamma*x1^2 with Tr(gamma)=1 is an imaginary pair
    g = f.find_gamma_trace()
    assert classify_conic(f, (1, 1, 0, g, 0, 0)) == ConicKind.IMAGINARY_PAIR


@pytest.mark.parametrize("q", [2, 4, 8])
def test_delta_roundtrip(q):
    f = gf(q)
    c = Conic.from_coeffs(f, (0, 1, 0, 0, 0, 1))
    h = delta(f, c.coeffs)
    assert h.dim == 5
    assert delta_inv(h).coeffs == c.coeffs
    # a point lies on the conic iff its Veronese image lies on the hyperplane
    from conicpencils.veronese import evaluate_conic

    for p in all_points(f, 2):
        assert (evaluate_conic(f, c.coeffs, p) == 0) == h.contains(nu(f, p))


@pytest.mark.parametrize("q", [2, 4, 8])
def test_lifted_action_commutes_with_veronese(q):
    f = gf(q)
    rng = np.random.default_rng(7)
    mats = []
    while len(mats) < 5:
        a = tuple(tuple(int(x) for x in row) for row in rng.integers(0, q, (3, 3)))
        if mat3_det(f, a) != 0:
            mats.append(a)
    for a in mats:
        la = lift(f, a)
        for p in all_points(f, 2):
            from conicpencils.veronese import apply_plane_point

            assert la.apply_point(nu(f, p)) == nu(f, apply_plane_point(f, a, p))
        for p in list(all_points(f, 5))[:: max(1, q)]:
            assert point_type(f, la.apply_point(p)) == point_type(f, p)


def test_lifted_action_rejects_singular():
    f = gf(2)
    with pytest.raises(ValueError):
        LiftedAction(f, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))


@pytest.mark.parametrize("q", [2, 4])
def test_packed_tables_match_scalar(q):
    f = gf(q)
    pt = tables(q)
    assert pt.point_type[0] == SENTINEL and pt.conic_kind[0] == SENTINEL
    for code in range(1, pt.ncodes):
        v = tuple((code >> (f.h * i)) & (q - 1) for i in range(6))
        assert pt.point_type[code] == point_type(f, v)
        assert pt.conic_kind[code] == classify_conic(f, v)


def test_packed_tables_match_scalar_q8_sample():
    f = gf(8)
    pt = tables(8)
    rng = np.random.default_rng(11)
    for code in rng.integers(1, pt.ncodes, 500):
        v = tuple((int(code) >> (3 * i)) & 7 for i in range(6))
        assert pt.point_type[code] == point_type(f, v)
        assert pt.conic_kind[code] == classify_conic(f, v)


def test_conic_hex_roundtrip():
    f = gf(8)
    c = Conic.from_coeffs(f, (0, 1, 0, 0, 5, 7))
    assert Conic.from_hex(f, c.to_hex()).coeffs == c.coeffs
    assert c.kind_code in {"N", "L2", "R", "I"}
    with pytest.raises(ValueError):
        Conic.from_hex(f, "01")
