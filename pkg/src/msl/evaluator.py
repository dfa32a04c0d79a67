"""The operational core: approximation, refinement, and the run loop.

Every prop has two computable approximants.  The lower one may only say
"true" when the prop provably holds; the upper one may only say "false"
when it provably fails.  Both are driven by interval approximation of
the real subterms, with a single comparison rule -- ``e1 < e2`` holds
when the second endpoint of e1's generalized interval lies below the
first endpoint of e2's -- and a mode-dependent choice of the intervals
bound to quantified variables and cut ranges:

    =========  lower mode          upper mode
    cut var    its range <a, b>    dualized <b, a>
    forall     <a, b>              <b, a>
    exists     point <a, a>        <b, a>
    =========  ==================  ==================

In lower mode an existential is affirmed through a concrete witness
point (range splitting makes the probed points dense), and a universal
through the interval evaluation of its whole range; upper mode dualizes
the ranges so the same endpoint test becomes the optimistic reading,
refuting an existential only when the whole range fails and a universal
only when some subrange fails everywhere.

Refinement rewrites an expression without changing its meaning: decided
props collapse to literals, cut ranges narrow by trisection probes,
quantifiers split at range midpoints, proven guards unwrap and refuted
guards prune their branch.  The run loop alternates evaluation attempts
with one fair refinement sweep over all live disjuncts of the normal
form until one disjunct is precise enough to answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .interval import DivisionIndeterminate, ENTIRE, GInterval, XRat
from .normalize import mk_and, mk_or, normalize
from .syntax import (
    And, App, Arith, BOOL, Cut, Exists, FalseLit, Forall, IsFalse, IsTrue,
    Join, Lambda, Less, MkBool, Or, PROP, Pow, ProductTy, Proj, Range, RatLit,
    Restrict, Tuple, TrueLit, Var,
)
from .typecheck import infer_type, is_base


class EvalError(Exception):
    """An expression outside the evaluable normal-form fragment."""


class Mode(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"

    def flip(self):
        return Mode.UPPER if self is Mode.LOWER else Mode.LOWER


LOWER = Mode.LOWER
UPPER = Mode.UPPER


def no_info(mode):
    """The no-information interval for a mode."""
    return ENTIRE if mode is LOWER else ENTIRE.dual()


# ---------------------------------------------------------------------------
# Outcomes


@dataclass(frozen=True)
class Outcome:
    pass


@dataclass(frozen=True)
class RealBall(Outcome):
    center: Fraction
    radius: Fraction

    def interval(self):
        return GInterval(self.center - self.radius, self.center + self.radius)


@dataclass(frozen=True)
class PropTrue(Outcome):
    pass


@dataclass(frozen=True)
class PropFalseProven(Outcome):
    pass


@dataclass(frozen=True)
class BoolTT(Outcome):
    pass


@dataclass(frozen=True)
class BoolFF(Outcome):
    pass


@dataclass(frozen=True)
class TupleOf(Outcome):
    items: tuple


@dataclass(frozen=True)
class Diverged(Outcome):
    steps: int


@dataclass(frozen=True)
class FunctionValue(Outcome):
    pass


class _PrunedType:
    """Sentinel for a disjunct proven bottom (its guard was refuted)."""

    def __repr__(self):
        return "Pruned"


PRUNED = _PrunedType()


# ---------------------------------------------------------------------------
# Approximation


def real_approx(e, env, mode):
    """Interval approximation of a join-free real expression."""
    if isinstance(e, RatLit):
        return GInterval.point(e.value)
    if isinstance(e, Var):
        try:
            return env[e.name]
        except KeyError:
            raise EvalError(f"unbound variable '{e.name}'") from None
    if isinstance(e, Arith):
        a = real_approx(e.lhs, env, mode)
        b = real_approx(e.rhs, env, mode)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        try:
            return a / b
        except DivisionIndeterminate:
            return no_info(mode)
    if isinstance(e, Pow):
        return real_approx(e.base, env, mode) ** e.exp
    if isinstance(e, Cut):
        r = e.range
        if mode is LOWER:
            return GInterval(r.lo, r.hi)
        return GInterval(r.hi, r.lo)
    if isinstance(e, Restrict):
        if prop_approx(e.guard, env, mode):
            return real_approx(e.body, env, mode)
        return no_info(mode)
    raise EvalError(f"real_approx: {type(e).__name__} is not normal")


def prop_approx(e, env, mode):
    """The lower (mode=LOWER) or upper (mode=UPPER) approximant of a prop."""
    if isinstance(e, TrueLit):
        return True
    if isinstance(e, FalseLit):
        return False
    if isinstance(e, And):
        return all(prop_approx(item, env, mode) for item in e.items)
    if isinstance(e, (Or, Join)):
        return any(prop_approx(item, env, mode) for item in e.items)
    if isinstance(e, Less):
        lhs = real_approx(e.lhs, env, mode)
        rhs = real_approx(e.rhs, env, mode)
        return lhs.hi < rhs.lo
    if isinstance(e, Forall):
        r = e.range
        box = GInterval(r.lo, r.hi) if mode is LOWER else GInterval(r.hi, r.lo)
        return prop_approx(e.body, {**env, e.var: box}, mode)
    if isinstance(e, Exists):
        r = e.range
        box = GInterval(r.lo, r.lo) if mode is LOWER else GInterval(r.hi, r.lo)
        return prop_approx(e.body, {**env, e.var: box}, mode)
    if isinstance(e, Restrict):
        # Restriction at prop is conjunction with the guard.
        return prop_approx(e.guard, env, mode) and prop_approx(e.body, env, mode)
    if isinstance(e, IsTrue):
        if isinstance(e.arg, MkBool):
            return prop_approx(e.arg.if_true, env, mode)
        raise EvalError("is_true over an unreduced boolean")
    if isinstance(e, IsFalse):
        if isinstance(e.arg, MkBool):
            return prop_approx(e.arg.if_false, env, mode)
        raise EvalError("is_false over an unreduced boolean")
    raise EvalError(f"prop_approx: {type(e).__name__} is not normal")


# ---------------------------------------------------------------------------
# Refinement

#: Node visits after which a refinement sweep returns the remaining
#: subtrees unchanged.  Quantifier splitting is the only growth source,
#: so the horizon bounds both the work of every sweep and the growth per
#: sweep; boundary-degenerate props then diverge in bounded time per
#: step instead of exploding.  Decided regions collapse to literals over
#: time, which moves the horizon forward.
SWEEP_VISIT_CAP = 10_000


class _Sweep:
    """Mutable per-sweep state: probe pacing, witness log, work budget."""

    __slots__ = ("n", "wlog", "visits")

    def __init__(self, n, wlog):
        self.n = n
        self.wlog = wlog
        self.visits = 0

    def may_split(self):
        return self.visits < SWEEP_VISIT_CAP


def refine_step(e, round_index=0, witness_log=None):
    """One meaning-preserving refinement of a join-free expression.

    Returns the refined expression, or PRUNED when the expression is
    proven bottom (a refuted restriction guard or a boolean whose both
    components are refuted).  ``round_index`` paces the probe sequence
    for unbounded cut ranges; ``witness_log`` collects (var, lo, hi)
    entries whenever an existential is affirmed.
    """
    return _refine(e, _Sweep(round_index, witness_log), frozenset())


_PROP_NODES = (TrueLit, FalseLit, And, Or, Less, Exists, Forall, IsTrue,
               IsFalse)


def _refine(e, st, scope):
    st.visits += 1
    if st.visits > SWEEP_VISIT_CAP:
        return e  # past the sweep horizon: left for a later round
    if isinstance(e, _PROP_NODES) and not _uses(e, scope):
        if prop_approx(e, {}, LOWER):
            if st.wlog is not None:
                _log_witnesses(e, {}, st.wlog)
            return TrueLit()
        if not prop_approx(e, {}, UPPER):
            return FalseLit()
    if isinstance(e, (TrueLit, FalseLit, RatLit, Var, Lambda)):
        return e
    # A pruned subterm (its guard was refuted) makes the whole disjunct
    # undefined, so PRUNED propagates through every compound node.
    if isinstance(e, And):
        items = _refine_all(e.items, st, scope)
        return PRUNED if items is PRUNED else mk_and(items)
    if isinstance(e, Or):
        items = _refine_all(e.items, st, scope)
        return PRUNED if items is PRUNED else mk_or(items)
    if isinstance(e, Less):
        sides = _refine_all((e.lhs, e.rhs), st, scope)
        return PRUNED if sides is PRUNED else Less(*sides)
    if isinstance(e, Arith):
        sides = _refine_all((e.lhs, e.rhs), st, scope)
        return PRUNED if sides is PRUNED else Arith(e.op, *sides)
    if isinstance(e, Pow):
        base = _refine(e.base, st, scope)
        return PRUNED if base is PRUNED else Pow(base, e.exp)
    if isinstance(e, Cut):
        return _refine_cut(e, st, scope)
    if isinstance(e, Exists):
        return _split_quantifier(e, Exists, mk_or, st, scope)
    if isinstance(e, Forall):
        return _split_quantifier(e, Forall, mk_and, st, scope)
    if isinstance(e, Restrict):
        guard = e.guard
        if not isinstance(guard, TrueLit):
            guard = _refine(guard, st, scope)
        if isinstance(guard, TrueLit):
            return _refine(e.body, st, scope)
        if isinstance(guard, FalseLit) or guard is PRUNED:
            return PRUNED
        body = _refine(e.body, st, scope)
        if body is PRUNED:
            return PRUNED
        return Restrict(guard, body)
    if isinstance(e, MkBool):
        p = _refine(e.if_true, st, scope)
        q = _refine(e.if_false, st, scope)
        if p is PRUNED or q is PRUNED:
            return PRUNED
        if isinstance(p, FalseLit) and isinstance(q, FalseLit):
            return PRUNED  # both branches refuted: the boolean is bottom
        return MkBool(p, q)
    if isinstance(e, Tuple):
        items = _refine_all(e.items, st, scope)
        return PRUNED if items is PRUNED else Tuple(tuple(items))
    if isinstance(e, Proj):
        inner = _refine(e.tuple_, st, scope)
        return PRUNED if inner is PRUNED else Proj(inner, e.index)
    if isinstance(e, App):
        sides = _refine_all((e.fn, e.arg), st, scope)
        return PRUNED if sides is PRUNED else App(*sides)
    if isinstance(e, IsTrue):
        arg = _refine(e.arg, st, scope)
        return PRUNED if arg is PRUNED else IsTrue(arg)
    if isinstance(e, IsFalse):
        arg = _refine(e.arg, st, scope)
        return PRUNED if arg is PRUNED else IsFalse(arg)
    raise EvalError(f"refine: {type(e).__name__} is not normal")


def _refine_all(items, st, scope):
    out = []
    for item in items:
        r = _refine(item, st, scope)
        if r is PRUNED:
            return PRUNED
        out.append(r)
    return out


def _log_witnesses(e, env, wlog):
    """Record the range of every existential along a positive certificate.

    Precondition: the lower approximant of ``e`` holds under ``env``.
    """
    if isinstance(e, Exists):
        r = e.range
        wlog.append((e.var, r.lo.q, r.hi.q))
        _log_witnesses(e.body, {**env, e.var: GInterval(r.lo, r.lo)}, wlog)
    elif isinstance(e, Or):
        for item in e.items:
            if prop_approx(item, env, LOWER):
                _log_witnesses(item, env, wlog)
                return
    elif isinstance(e, And):
        for item in e.items:
            _log_witnesses(item, env, wlog)
    elif isinstance(e, Forall):
        r = e.range
        _log_witnesses(e.body, {**env, e.var: GInterval(r.lo, r.hi)}, wlog)
    elif isinstance(e, Restrict):
        _log_witnesses(e.guard, env, wlog)
        _log_witnesses(e.body, env, wlog)
    elif isinstance(e, IsTrue) and isinstance(e.arg, MkBool):
        _log_witnesses(e.arg.if_true, env, wlog)
    elif isinstance(e, IsFalse) and isinstance(e.arg, MkBool):
        _log_witnesses(e.arg.if_false, env, wlog)


def _split_quantifier(e, node, combine, st, scope):
    body = _refine(e.body, st, scope | {e.var})
    if body is PRUNED:
        return PRUNED  # pointwise-undefined body: the quantifier is bottom
    if not st.may_split():
        return node(e.var, e.range, body)
    a, b = e.range.lo.q, e.range.hi.q
    m = (a + b) / 2
    return combine([node(e.var, Range(XRat(a), XRat(m)), body),
                    node(e.var, Range(XRat(m), XRat(b)), body)])


def _refine_cut(e, st, scope):
    lo, hi = e.range.lo, e.range.hi
    probeable = not _uses(e.left, scope) and not _uses(e.right, scope)
    if probeable:
        if lo.is_finite and hi.is_finite:
            a, b = lo.q, hi.q
            q1 = (2 * a + b) / 3
            q2 = (a + 2 * b) / 3
            if prop_approx(e.left, {e.var: GInterval.point(q1)}, LOWER):
                a = q1
            if prop_approx(e.right, {e.var: GInterval.point(q2)}, LOWER):
                b = q2
            lo, hi = XRat(a), XRat(b)
        else:
            # Establish finite bounds by probing doubling candidates.
            step = Fraction(2) ** min(st.n, 256)
            if not lo.is_finite:
                cand = -step if (not hi.is_finite or -step < hi.q) \
                    else hi.q - step
                if prop_approx(e.left, {e.var: GInterval.point(cand)}, LOWER):
                    lo = XRat(cand)
            if not hi.is_finite:
                cand = step if (not lo.is_finite or step > lo.q) \
                    else lo.q + step
                if prop_approx(e.right, {e.var: GInterval.point(cand)}, LOWER):
                    hi = XRat(cand)
    inner = scope | {e.var}
    rng = Range(lo, hi, lo_open=not lo.is_finite, hi_open=not hi.is_finite)
    sides = _refine_all((e.left, e.right), st, inner)
    if sides is PRUNED:
        return PRUNED  # a cut over an undefined predicate cannot converge
    return Cut(e.var, rng, *sides)


def _uses(e, scope):
    """Does ``e`` mention any of the names in ``scope`` as a free variable?"""
    if not scope:
        return False
    if isinstance(e, Var):
        return e.name in scope
    if isinstance(e, (TrueLit, FalseLit, RatLit)):
        return False
    if isinstance(e, (And, Or, Join, Tuple)):
        return any(_uses(item, scope) for item in e.items)
    if isinstance(e, (Less, Arith)):
        return _uses(e.lhs, scope) or _uses(e.rhs, scope)
    if isinstance(e, Pow):
        return _uses(e.base, scope)
    if isinstance(e, App):
        return _uses(e.fn, scope) or _uses(e.arg, scope)
    if isinstance(e, Proj):
        return _uses(e.tuple_, scope)
    if isinstance(e, Restrict):
        return _uses(e.guard, scope) or _uses(e.body, scope)
    if isinstance(e, MkBool):
        return _uses(e.if_true, scope) or _uses(e.if_false, scope)
    if isinstance(e, (IsTrue, IsFalse)):
        return _uses(e.arg, scope)
    if isinstance(e, Cut):
        inner = scope - {e.var}
        return _uses(e.left, inner) or _uses(e.right, inner)
    if isinstance(e, (Exists, Forall)):
        return _uses(e.body, scope - {e.var})
    if isinstance(e, Lambda):
        return _uses(e.body, scope - {e.var})
    raise EvalError(f"_uses: {type(e).__name__}")


# ---------------------------------------------------------------------------
# Evaluation


def evaluate_step(e, precision, ty):
    """Produce an Outcome for one disjunct if it is refined enough."""
    if ty == PROP:
        if isinstance(e, TrueLit):
            return PropTrue()
        if isinstance(e, FalseLit):
            return PropFalseProven()
        return None
    if ty == BOOL:
        if isinstance(e, MkBool):
            if isinstance(e.if_true, TrueLit):
                return BoolTT()
            if isinstance(e.if_false, TrueLit):
                return BoolFF()
        return None
    if isinstance(ty, ProductTy):
        if not isinstance(e, Tuple):
            return None
        items = []
        for item, item_ty in zip(e.items, ty.items):
            out = evaluate_step(item, precision, item_ty)
            if out is None:
                return None
            items.append(out)
        return TupleOf(tuple(items))
    if is_base(ty):  # real
        box = real_approx(e, {}, LOWER)
        if not (box.is_finite and box.is_proper):
            return None
        a, b = box.lo.q, box.hi.q
        if b - a < precision:
            return RealBall((a + b) / 2, (b - a) / 2)
        return None
    return FunctionValue()


def _contains_false(outcome):
    if isinstance(outcome, PropFalseProven):
        return True
    if isinstance(outcome, TupleOf):
        return any(_contains_false(item) for item in outcome.items)
    return False


DEFAULT_PRECISION = Fraction(1, 1000)
DEFAULT_MAX_STEPS = 100_000


def run(e, precision=DEFAULT_PRECISION, max_steps=DEFAULT_MAX_STEPS,
        witness_log=None):
    """Evaluate a closed, well-typed expression to an Outcome.

    Normalizes, then alternates evaluation attempts with fair refinement
    sweeps.  Every live disjunct is refined once per round, so a
    diverging disjunct cannot starve one that will answer; the first
    disjunct (in normal-form order) to evaluate supplies the result,
    keeping runs deterministic.  Diverged is a normal outcome: the step
    budget ran out, or every disjunct was pruned.
    """
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    ty = infer_type({}, e)
    if not is_base(ty):
        return FunctionValue()
    live = list(normalize(e))
    for step in range(max_steps):
        sole = len(live) == 1
        for d in live:
            out = evaluate_step(d, precision, ty)
            if out is not None and (sole or not _contains_false(out)):
                return out
        nxt = []
        for d in live:
            rd = refine_step(d, step, witness_log)
            if rd is PRUNED:
                continue
            if ty == PROP and isinstance(rd, FalseLit) and not sole:
                continue  # a refuted disjunct adds nothing to the join
            nxt.append(rd)
        live = nxt
        if not live:
            # Every disjunct proven bottom.  For a prop that *is* the
            # proof of falsity; elsewhere the value is undefined.
            if ty == PROP:
                return PropFalseProven()
            return Diverged(step + 1)
    return Diverged(max_steps)
