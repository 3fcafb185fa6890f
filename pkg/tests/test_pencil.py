"""Pencil/solid duality, orbit distributions, base points and the
special-line tie-break counts."""

import pytest

from conicpencils.classifier import expected_table
from conicpencils.field import gf
from conicpencils.group import representative
from conicpencils.pencil import PencilSolid, lemma_identities_hold, pencil_lines
from conicpencils.projgeom import all_points
from conicpencils.veronese import evaluate_conic


@pytest.mark.parametrize("q", [2, 4])
def test_constructors_agree(q):
    ps = representative(q, 6)
    assert PencilSolid.from_solid(ps.solid) == ps
    assert PencilSolid.from_pencil(ps.pencil) == ps
    assert ps.solid.annihilator() == ps.pencil
    assert ps.pencil.annihilator() == ps.solid


def test_from_conics_rejects_proportional():
    f = gf(4)
    with pytest.raises(ValueError):
        PencilSolid.from_conics(f, (0, 1, 0, 0, 0, 1), (0, 2, 0, 0, 0, 2))


@pytest.mark.parametrize("q", [2, 4])
def test_pencil_members(q):
    ps = representative(q, 15)
    conics = ps.conics()
    assert len(conics) == q + 1
    assert len({c.coeffs for c in conics}) == q + 1


@pytest.mark.parametrize("q", [2, 4, 8])
def test_od_totals(q):
    for label in (1, 7, 12):
        ps = representative(q, label)
        assert sum(ps.point_od()) == (q ** 4 - 1) // (q - 1)
        assert sum(ps.hyperplane_od()) == q + 1


@pytest.mark.parametrize("q", [2, 4])
def test_base_points_equal_common_zeros(q):
    """Rank-1 points of the solid vs direct common zeros of the pencil."""
    f = gf(q)
    for label in range(1, 16):
        ps = representative(q, label)
        coeff_vectors = [c.coeffs for c in ps.conics()]
        direct = frozenset(
            p
            for p in all_points(f, 2)
            if all(evaluate_conic(f, c, p) == 0 for c in coeff_vectors)
        )
        assert ps.base_points() == direct
        assert len(direct) == ps.point_od()[0]


@pytest.mark.parametrize("q", [2, 4, 8])
def test_o6_tie_break_counts(q):
    assert representative(q, 11).count_o6_lines(mode="candidates") == 1
    assert representative(q, 12).count_o6_lines(mode="candidates") == 0


@pytest.mark.parametrize("q", [2, 4])
def test_o6_full_agrees_with_candidates(q):
    # for the colliding point OD the only special lines are the candidates
    for label in (11, 12):
        ps = representative(q, label)
        assert ps.count_o6_lines(mode="full") == ps.count_o6_lines(mode="candidates")


def test_o6_full_q2_4_vs_9():
    assert representative(2, 4).count_o6_lines(mode="full") == 3
    assert representative(2, 9).count_o6_lines(mode="full") == 0


def test_o6_candidates_precondition():
    ps = representative(4, 1)
    with pytest.raises(ValueError):
        ps.count_o6_lines(mode="candidates")


@pytest.mark.parametrize("q", [4, 8])
def test_identities_on_representatives(q):
    for row in expected_table(q):
        ps = representative(q, row.label)
        assert lemma_identities_hold(q, ps.point_od(), ps.hyperplane_od())


def test_record_field_order():
    ps = representative(4, 5)
    rec = ps.record(label=5)
    assert list(rec.keys()) == ["q", "solid", "point_od", "hyperplane_od", "base_count", "label"]
    assert rec["q"] == 4 and rec["label"] == 5
    assert rec["base_count"] == 1
    assert rec["solid"].startswith("q=4:")
    assert list(ps.record().keys())[-1] == "base_count"


def test_pencil_lines_count():
    assert pencil_lines(2) == 35
    assert pencil_lines(4) == 357
