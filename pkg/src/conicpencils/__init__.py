"""Classification of pencils of conics in PG(2, q), q even, via solids of
PG(5, q) under the lifted PGL(3, q) action."""

from .classifier import ClassificationInconsistency, classify, expected_table
from .field import GF, gf
from .group import representative, stabilizer_report, verify_generators
from .pencil import PencilSolid
from .projgeom import Subspace, gaussian_count, solid_from_hex, solid_to_hex
from .sweep import run_sweep
from .veronese import Conic, ConicKind, PointType, nu

__all__ = [
    "ClassificationInconsistency",
    "Conic",
    "ConicKind",
    "GF",
    "PencilSolid",
    "PointType",
    "Subspace",
    "classify",
    "expected_table",
    "gaussian_count",
    "gf",
    "nu",
    "representative",
    "run_sweep",
    "solid_from_hex",
    "solid_to_hex",
    "stabilizer_report",
    "verify_generators",
]

__version__ = "1.0.0"
