"""Exact computation of the hyperhomology of small Gobelins attached to two
syzygies over a zero-dimensional Gorenstein algebra."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ComplexBroken,
    GobelinError,
    InputError,
    NoSolution,
    NotACycle,
    NotChainCompatible,
    NotGorenstein,
    NotLocal,
    NotStabilized,
    NotZeroDimensional,
    ParseError,
    SyzygyViolation,
    UnitElement,
)
from .exactlin import GF, QQ, FieldSpec, Matrix, Subspace, kernel_basis, rank, solve  # noqa: E402
from .polyring import QuotientPresentation, build_quotient_algebra, parse_poly  # noqa: E402
from .algebra import FiniteAlgebra, Submodule, choose_trace, ideal, annihilator, colon  # noqa: E402
from .koszul import SyzygyPair, koszul, colon_in_h1  # noqa: E402
from .gobelin import build_g1, build_g2, build_g1_dual, build_g2_dual, les_maps  # noqa: E402
from .flags import compute_flags  # noqa: E402
from .scenario import Scenario, load_scenario, parse_scenario  # noqa: E402
from .harness import corpus, family, run_suite  # noqa: E402


def algebra(variables, relations, field=QQ):
    """Shortcut: the quotient algebra field[variables]/(relations)."""
    return build_quotient_algebra(QuotientPresentation.from_strings(list(variables), list(relations), field=field))
