"""msl: an interpreter for a small language of exact real arithmetic
with partiality and nondeterminism.

Reals are Dedekind cuts narrowed by interval refinement, props are
semi-decidable observations with lower/upper approximants, booleans are
pairs of props that may overlap (nondeterminism) or leave gaps
(partiality), and ``||`` joins guarded branches any of which may answer.
"""

from .cli import SessionState, execute_item, main, render
from .evaluator import (
    BoolFF, BoolTT, Diverged, FunctionValue, LOWER, Mode, Outcome, PRUNED,
    PropFalseProven, PropTrue, RealBall, TupleOf, UPPER, evaluate_step,
    prop_approx, real_approx, refine_step, run,
)
from .interval import (
    DivisionIndeterminate, ENTIRE, GInterval, IndeterminateSum, NEG_INF,
    POS_INF, UnboundedInterval, XRat,
)
from .normalize import NormalForm, normalize, substitute
from .prelude import Asset, car_controller_asset, load_prelude, roots_asset
from .syntax import (
    LexError, ParseError, SourceError, parse_expression, parse_program,
    pretty_print, tokenize,
)
from .typecheck import TypecheckError, infer_type, is_base

__all__ = [
    "Asset", "BoolFF", "BoolTT", "Diverged", "DivisionIndeterminate",
    "ENTIRE", "FunctionValue", "GInterval", "IndeterminateSum", "LOWER",
    "LexError", "Mode", "NEG_INF", "NormalForm", "Outcome", "POS_INF",
    "PRUNED", "ParseError", "PropFalseProven", "PropTrue", "RealBall",
    "SessionState", "SourceError", "TupleOf", "TypecheckError",
    "UPPER", "UnboundedInterval", "XRat", "car_controller_asset",
    "evaluate_step", "execute_item", "infer_type", "is_base",
    "load_prelude", "main", "normalize", "parse_expression",
    "parse_program", "prelude", "pretty_print", "prop_approx",
    "real_approx", "refine_step", "render", "roots_asset", "run",
    "substitute", "tokenize",
]
