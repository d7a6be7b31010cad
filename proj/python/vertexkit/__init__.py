"""Optimal fixed-point algorithm vertices, arc diagrams and exact certificates.

H-matrices are lists of rows of ``Fraction``; row k holds h[k][1..k].
"""

from fractions import Fraction
import json

from . import _core
from ._core import (
    CrossingDiagramError,
    NonOptimalInputError,
    NotAVertexError,
    diagram_from_vertex as _diagram_from_vertex,
    dualize_diagram,
    enumerate_diagrams,
    render_ascii,
)

__all__ = [
    "CrossingDiagramError",
    "NonOptimalInputError",
    "NotAVertexError",
    "anti_transpose",
    "certificates",
    "check_invariance",
    "diagram_from_vertex",
    "dual_ohm_hmatrix",
    "dualize_diagram",
    "enumerate_diagrams",
    "fsdm_hmatrix",
    "glue",
    "is_optimal",
    "ohm_hmatrix",
    "rdo_hmatrix",
    "render_ascii",
    "rho",
    "run",
    "run_experiment",
    "vertex_from_diagram",
]


def _out(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _in(h):
    return [[str(Fraction(x)) for x in row] for row in h]


def vertex_from_diagram(parent):
    return _out(_core.vertex_from_diagram(list(parent)))


def diagram_from_vertex(h):
    return _diagram_from_vertex(_in(h))


def is_optimal(h):
    return _core.is_optimal(_in(h))


def check_invariance(h):
    return _core.check_invariance(_in(h))


def certificates(h):
    """Nonzero certificates as {(k, j): Fraction}."""
    return {kj: Fraction(v) for kj, v in _core.certificates(_in(h)).items()}


def rho(h):
    return Fraction(_core.rho(_in(h)))


def glue(left, right):
    return _out(_core.glue(_in(left), _in(right)))


def anti_transpose(h):
    return _out(_core.anti_transpose(_in(h)))


def ohm_hmatrix(size):
    return _out(_core.ohm_hmatrix(size))


def dual_ohm_hmatrix(size):
    return _out(_core.dual_ohm_hmatrix(size))


def rdo_hmatrix(period, size):
    return _out(_core.rdo_hmatrix(period, size))


def fsdm_hmatrix(n_power):
    return _out(_core.fsdm_hmatrix(n_power))


def run(alg, horizon, op="worst_case", gamma=1.0, delta=0.0, radius=1.0, seed=0):
    """Trace of one algorithm as a dict of parallel lists."""
    return _core.run(alg, horizon, op, gamma, delta, radius, seed)


def run_experiment(config, output_dir=""):
    """Run a config dict (the CLI's JSON format) and return the manifest."""
    return json.loads(_core.run_experiment(json.dumps(config), output_dir))
