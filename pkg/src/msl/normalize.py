"""Reduction to normal form: an n-ary choice of join-free expressions.

Normalization eliminates local definitions and redexes (beta, tuple
projection, the boolean projections is_true/is_false over mkbool) and
hoists nondeterministic joins outward until a single top-level join of
join-free disjuncts remains.  Reduction also happens under binders.

Joins of real, bool, and tuple type distribute through the surrounding
construct (arithmetic, comparison, tuples, projections, application,
restriction bodies) and hoist out of lambdas, committing each choice
once per program.  A prop-typed join coincides with disjunction, so in
any non-top-level position it is emitted as an Or node instead of being
distributed; distributing it through a universal quantifier would change
the meaning.

Three extra reductions keep evaluation total on well-typed programs:
projections and the boolean projections push through restriction
(``(g ~> e)#k`` becomes ``g ~> e#k``, ``is_true (g ~> b)`` becomes
``g /\\ is_true b``), and a prop-typed restriction itself collapses to a
conjunction.  Literal conjunctions and disjunctions are folded, and
duplicate disjuncts of a join are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    And, App, Arith, Cut, Exists, FalseLit, Forall, IsFalse, IsTrue, Join,
    Lambda, Less, Let, MkBool, Or, PROP, Pow, Proj, RatLit, REAL, Restrict,
    Tuple, TrueLit, Var, free_vars,
)
from .typecheck import infer_type


@dataclass(frozen=True)
class NormalForm:
    """A non-empty tuple of join-free disjuncts, any of which may answer."""

    disjuncts: tuple

    def __len__(self):
        return len(self.disjuncts)

    def __iter__(self):
        return iter(self.disjuncts)


def normalize(e):
    """Normalize a closed, well-typed expression."""
    return NormalForm(tuple(_nf(e, {})))


# ---------------------------------------------------------------------------
# Substitution


def substitute(name, value, e):
    """Capture-avoiding substitution of ``value`` for ``name`` in ``e``."""
    if isinstance(e, Var):
        return value if e.name == name else e
    if isinstance(e, (TrueLit, FalseLit, RatLit)):
        return e
    if isinstance(e, (And, Or, Join, Tuple)):
        items = tuple(substitute(name, value, item) for item in e.items)
        return type(e)(items, loc=e.loc)
    if isinstance(e, Less):
        return Less(substitute(name, value, e.lhs),
                    substitute(name, value, e.rhs), loc=e.loc)
    if isinstance(e, Arith):
        return Arith(e.op, substitute(name, value, e.lhs),
                     substitute(name, value, e.rhs), loc=e.loc)
    if isinstance(e, Pow):
        return Pow(substitute(name, value, e.base), e.exp, loc=e.loc)
    if isinstance(e, App):
        return App(substitute(name, value, e.fn),
                   substitute(name, value, e.arg), loc=e.loc)
    if isinstance(e, Proj):
        return Proj(substitute(name, value, e.tuple_), e.index, loc=e.loc)
    if isinstance(e, Restrict):
        return Restrict(substitute(name, value, e.guard),
                        substitute(name, value, e.body), loc=e.loc)
    if isinstance(e, MkBool):
        return MkBool(substitute(name, value, e.if_true),
                      substitute(name, value, e.if_false), loc=e.loc)
    if isinstance(e, IsTrue):
        return IsTrue(substitute(name, value, e.arg), loc=e.loc)
    if isinstance(e, IsFalse):
        return IsFalse(substitute(name, value, e.arg), loc=e.loc)
    if isinstance(e, Lambda):
        var, (body,) = _under_binder(name, value, e.var, (e.body,))
        return Lambda(var, e.var_ty, body, loc=e.loc)
    if isinstance(e, Cut):
        var, (left, right) = _under_binder(name, value, e.var,
                                           (e.left, e.right))
        return Cut(var, e.range, left, right, loc=e.loc)
    if isinstance(e, Exists):
        var, (body,) = _under_binder(name, value, e.var, (e.body,))
        return Exists(var, e.range, body, loc=e.loc)
    if isinstance(e, Forall):
        var, (body,) = _under_binder(name, value, e.var, (e.body,))
        return Forall(var, e.range, body, loc=e.loc)
    if isinstance(e, Let):
        bound = substitute(name, value, e.bound)
        var, (body,) = _under_binder(name, value, e.var, (e.body,))
        return Let(var, bound, body, loc=e.loc)
    raise TypeError(f"substitute: {type(e).__name__}")


def _under_binder(name, value, var, bodies):
    """Substitute under a binder of ``var``, renaming it if needed."""
    if var == name:
        return var, bodies  # shadowed: nothing to do below
    if any(name in free_vars(b) for b in bodies) and var in free_vars(value):
        avoid = free_vars(value) | {name}
        for b in bodies:
            avoid |= free_vars(b)
        fresh = _fresh(var, avoid)
        bodies = tuple(substitute(var, Var(fresh), b) for b in bodies)
        var = fresh
    return var, tuple(substitute(name, value, b) for b in bodies)


def _fresh(base, avoid):
    name = base + "'"
    while name in avoid:
        name += "'"
    return name


# ---------------------------------------------------------------------------
# Smart constructors


def mk_and(items):
    """Conjunction with flattening and literal folding."""
    flat = []
    for item in items:
        if isinstance(item, FalseLit):
            return FalseLit()
        if isinstance(item, TrueLit):
            continue
        if isinstance(item, And):
            flat.extend(item.items)
        else:
            flat.append(item)
    if not flat:
        return TrueLit()
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def mk_or(items):
    """Disjunction with flattening and literal folding."""
    flat = []
    for item in items:
        if isinstance(item, TrueLit):
            return TrueLit()
        if isinstance(item, FalseLit):
            continue
        if isinstance(item, Or):
            flat.extend(item.items)
        else:
            flat.append(item)
    if not flat:
        return FalseLit()
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def _embed(disjuncts):
    """Re-emit a prop-typed normal form as a single expression."""
    if len(disjuncts) == 1:
        return disjuncts[0]
    return mk_or(disjuncts)


def _dedup(disjuncts):
    return list(dict.fromkeys(disjuncts))


# ---------------------------------------------------------------------------
# The normalizer proper: returns the list of join-free disjuncts.


def _nf(e, ctx):
    if isinstance(e, (Var, TrueLit, FalseLit, RatLit)):
        return [e]
    if isinstance(e, Join):
        out = []
        for item in e.items:
            out.extend(_nf(item, ctx))
        return _dedup(out)
    if isinstance(e, And):
        return [mk_and([_embed(_nf(item, ctx)) for item in e.items])]
    if isinstance(e, Or):
        return [mk_or([_embed(_nf(item, ctx)) for item in e.items])]
    if isinstance(e, Less):
        return [Less(a, b)
                for a in _nf(e.lhs, ctx) for b in _nf(e.rhs, ctx)]
    if isinstance(e, Arith):
        return [Arith(e.op, a, b)
                for a in _nf(e.lhs, ctx) for b in _nf(e.rhs, ctx)]
    if isinstance(e, Pow):
        return [Pow(b, e.exp) for b in _nf(e.base, ctx)]
    if isinstance(e, Tuple):
        rows = [[]]
        for item in e.items:
            rows = [row + [d] for row in rows for d in _nf(item, ctx)]
        return [Tuple(tuple(row)) for row in rows]
    if isinstance(e, Proj):
        return [_proj_reduce(d, e.index) for d in _nf(e.tuple_, ctx)]
    if isinstance(e, Lambda):
        inner = {**ctx, e.var: e.var_ty}
        return [Lambda(e.var, e.var_ty, d) for d in _nf(e.body, inner)]
    if isinstance(e, App):
        out = []
        for fn in _nf(e.fn, ctx):
            for arg in _nf(e.arg, ctx):
                if isinstance(fn, Lambda):
                    out.extend(_nf(substitute(fn.var, arg, fn.body), ctx))
                else:
                    out.append(App(fn, arg))
        return _dedup(out)
    if isinstance(e, Let):
        out = []
        for bound in _nf(e.bound, ctx):
            out.extend(_nf(substitute(e.var, bound, e.body), ctx))
        return _dedup(out)
    if isinstance(e, Cut):
        inner = {**ctx, e.var: REAL}
        left = _embed(_nf(e.left, inner))
        right = _embed(_nf(e.right, inner))
        return [Cut(e.var, e.range, left, right)]
    if isinstance(e, Exists):
        body = _embed(_nf(e.body, {**ctx, e.var: REAL}))
        return [Exists(e.var, e.range, body)]
    if isinstance(e, Forall):
        body = _embed(_nf(e.body, {**ctx, e.var: REAL}))
        return [Forall(e.var, e.range, body)]
    if isinstance(e, Restrict):
        guard = _embed(_nf(e.guard, ctx))
        if infer_type(ctx, e.body) == PROP:
            # Restriction at prop is conjunction with the guard.
            return [mk_and([guard, _embed(_nf(e.body, ctx))])]
        return [Restrict(guard, d) for d in _nf(e.body, ctx)]
    if isinstance(e, MkBool):
        p = _embed(_nf(e.if_true, ctx))
        q = _embed(_nf(e.if_false, ctx))
        return [MkBool(p, q)]
    if isinstance(e, IsTrue):
        return _dedup([_bool_project(d, True) for d in _nf(e.arg, ctx)])
    if isinstance(e, IsFalse):
        return _dedup([_bool_project(d, False) for d in _nf(e.arg, ctx)])
    raise TypeError(f"normalize: {type(e).__name__}")


def _proj_reduce(d, k):
    if isinstance(d, Tuple):
        return d.items[k - 1]
    if isinstance(d, Restrict):
        return Restrict(d.guard, _proj_reduce(d.body, k))
    return Proj(d, k)


def _bool_project(d, want_true):
    if isinstance(d, MkBool):
        return d.if_true if want_true else d.if_false
    if isinstance(d, Restrict):
        return mk_and([d.guard, _bool_project(d.body, want_true)])
    return IsTrue(d) if want_true else IsFalse(d)

