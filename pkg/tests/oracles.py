"""Independent oracles shared by the unit and acceptance suites.

Everything here is computed by a route unrelated to the interpreter:
bisection, grid search over exact rationals, and closed-form kinematics.
"""

from fractions import Fraction

from msl.cli import SessionState, _wrap_definitions, execute_item
from msl.evaluator import run
from msl.syntax import parse_expression, parse_program
from msl.typecheck import infer_type

F = Fraction


def bisect_sqrt2(tol):
    """Rational bisection for sqrt(2) on [1, 2] to within tol."""
    lo, hi = F(1), F(2)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid * mid < 2:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def grid_min_abs(f, lo, hi, steps):
    """Minimum of |f| over an inclusive rational grid."""
    lo, hi = F(lo), F(hi)
    step = (hi - lo) / steps
    return min(abs(f(lo + k * step)) for k in range(steps + 1))


# --- car kinematics (w=10, eps=1, T=4, a_max=2, a_min=-3) --------------------

CAR_W = F(10)
CAR_EPS = F(1)
CAR_T = F(4)
CAR_A_MAX = F(2)
CAR_A_MIN = F(-3)


def a_go(x, v):
    raw = 2 * (CAR_W + CAR_EPS - x - v * CAR_T) / CAR_T ** 2
    return max(F(0), raw)


def a_stop(x, v):
    return v * v / (2 * (x + CAR_EPS))


def pos_at_red(x, v, a):
    """Position when the light turns red; velocity clamps at zero."""
    x, v, a = F(x), F(v), F(a)
    if a < 0 and -v / a <= CAR_T:
        t_stop = -v / a
        return x + v * t_stop + a * t_stop ** 2 / 2
    return x + v * CAR_T + a * CAR_T ** 2 / 2


def car_is_safe(x, v, a, margin=F(0)):
    pos = pos_at_red(x, v, a)
    return pos <= -margin or pos >= CAR_W + margin


def car_guards(x, v):
    """Which controller branches apply at a state, per the closed forms."""
    return (a_go(x, v) < CAR_A_MAX, a_stop(x, v) > CAR_A_MIN)


# --- session helpers -----------------------------------------------------------

def session_from(*sources):
    """Build a session by executing whole programs in order."""
    state = SessionState()
    for source in sources:
        for item in parse_program(source):
            state, _ = execute_item(state, item)
    return state


def eval_outcome(state, source, precision=None, max_steps=None,
                 witness_log=None):
    """Evaluate one expression inside a session, returning the Outcome."""
    expr = parse_expression(source)
    infer_type(state.type_context(), expr)
    wrapped = _wrap_definitions(state, expr)
    return run(wrapped,
               precision=precision if precision is not None
               else state.precision,
               max_steps=max_steps if max_steps is not None
               else state.step_budget,
               witness_log=witness_log)
