"""Closed-form invariant table and the OD-based classifier."""

import pytest

from conicpencils.classifier import (
    ClassificationInconsistency,
    classify,
    expected_row,
    expected_table,
    od_pair_index,
    pgl3_order,
)
from conicpencils.group import representative
from conicpencils.pencil import PencilSolid
from conicpencils.projgeom import gaussian_count


@pytest.mark.parametrize("q", [2, 4, 8])
def test_table_consistency(q):
    rows = expected_table(q)
    assert [r.label for r in rows] == list(range(1, 16))
    assert sum(r.orbit_size for r in rows) == gaussian_count(6, 4, q)
    for r in rows:
        assert r.stabilizer_order * r.orbit_size == pgl3_order(q)
        assert all(x >= 0 for x in r.point_od + r.hyperplane_od)
        assert sum(r.point_od) == (q ** 4 - 1) // (q - 1)
        assert sum(r.hyperplane_od) == q + 1


def test_pgl3_order_values():
    assert pgl3_order(2) == 168
    assert pgl3_order(4) == 60480
    assert pgl3_order(8) == 16482816


@pytest.mark.parametrize("q", [2, 4, 8])
def test_od_collisions(q):
    colliding = sorted(v for v in od_pair_index(q).values() if len(v) > 1)
    if q == 2:
        assert colliding == [(4, 9), (11, 12)]
    else:
        assert colliding == [(11, 12)]


@pytest.mark.parametrize("q", [2, 4, 8])
def test_classify_representatives(q):
    for row in expected_table(q):
        ps = representative(q, row.label)
        assert classify(ps) == row.label


def test_classify_rejects_unknown_od():
    ps = representative(4, 1)
    with pytest.raises(ClassificationInconsistency):
        classify(ps, point_od=(9, 9, 9, 9), hyperplane_od=(5, 0, 0, 0))


def test_expected_row_lookup():
    r = expected_row(4, 9)
    assert r.stabilizer_order == 24
    assert r.orbit_size == 60480 // 24
    assert r.point_od == (4, 1, 24, 56)
