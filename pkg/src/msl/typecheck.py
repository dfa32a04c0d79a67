"""Type checker for the surface language.

The context maps variable names to types; inner bindings shadow outer
ones.  Restriction and choice are only permitted at base types (types
with no function arrow); quantifier and cut bodies type their bound
variable at real.  Quantifier ranges must be finite closed intervals —
exhaustive search needs a compact range — while cut ranges may be open
or unbounded.
"""

from __future__ import annotations

from .syntax import (
    And, App, Arith, ArrowTy, BOOL, Cut, Exists, FalseLit, Forall, IsFalse,
    IsTrue, Join, Lambda, Less, Let, MkBool, Or, PROP, Pow, ProductTy, Proj,
    RatLit, REAL, Restrict, SourceError, Tuple, TrueLit, Var, type_str,
)


class TypecheckError(SourceError):
    pass


def is_base(t):
    """True iff the type contains no function arrow."""
    if isinstance(t, ArrowTy):
        return False
    if isinstance(t, ProductTy):
        return all(is_base(item) for item in t.items)
    return True


def infer_type(ctx, e):
    """Infer the unique type of ``e`` under ``ctx`` or raise TypecheckError."""
    if isinstance(e, Var):
        try:
            return ctx[e.name]
        except KeyError:
            raise TypecheckError(f"unbound variable '{e.name}'", e.loc) from None
    if isinstance(e, (TrueLit, FalseLit)):
        return PROP
    if isinstance(e, RatLit):
        return REAL
    if isinstance(e, Cut):
        inner = {**ctx, e.var: REAL}
        _check(inner, e.left, PROP, "the left cut body")
        _check(inner, e.right, PROP, "the right cut body")
        return REAL
    if isinstance(e, And):
        for item in e.items:
            _check(ctx, item, PROP, "a conjunct")
        return PROP
    if isinstance(e, Or):
        for item in e.items:
            _check(ctx, item, PROP, "a disjunct")
        return PROP
    if isinstance(e, Less):
        _check(ctx, e.lhs, REAL, "the left side of '<'")
        _check(ctx, e.rhs, REAL, "the right side of '<'")
        return PROP
    if isinstance(e, (Exists, Forall)):
        if not e.range.is_finite or e.range.lo_open or e.range.hi_open:
            raise TypecheckError(
                "quantifier ranges must be finite closed intervals [a, b]",
                e.loc)
        _check({**ctx, e.var: REAL}, e.body, PROP, "the quantifier body")
        return PROP
    if isinstance(e, Tuple):
        return ProductTy(tuple(infer_type(ctx, item) for item in e.items))
    if isinstance(e, Proj):
        t = infer_type(ctx, e.tuple_)
        if not isinstance(t, ProductTy):
            raise TypecheckError(
                f"projection from a non-tuple of type {type_str(t)}", e.loc)
        if not 1 <= e.index <= len(t.items):
            raise TypecheckError(
                f"projection index {e.index} out of range for {type_str(t)}",
                e.loc)
        return t.items[e.index - 1]
    if isinstance(e, Lambda):
        return ArrowTy(e.var_ty, infer_type({**ctx, e.var: e.var_ty}, e.body))
    if isinstance(e, App):
        fn_ty = infer_type(ctx, e.fn)
        if not isinstance(fn_ty, ArrowTy):
            raise TypecheckError(
                f"applying a non-function of type {type_str(fn_ty)}", e.loc)
        arg_ty = infer_type(ctx, e.arg)
        if arg_ty != fn_ty.arg:
            raise TypecheckError(
                f"argument has type {type_str(arg_ty)}, expected "
                f"{type_str(fn_ty.arg)}", e.loc)
        return fn_ty.result
    if isinstance(e, Arith):
        _check(ctx, e.lhs, REAL, f"the left operand of '{e.op}'")
        _check(ctx, e.rhs, REAL, f"the right operand of '{e.op}'")
        return REAL
    if isinstance(e, Pow):
        _check(ctx, e.base, REAL, "the base of '^'")
        return REAL
    if isinstance(e, Let):
        bound_ty = infer_type(ctx, e.bound)
        return infer_type({**ctx, e.var: bound_ty}, e.body)
    if isinstance(e, Restrict):
        _check(ctx, e.guard, PROP, "a restriction guard")
        t = infer_type(ctx, e.body)
        if not is_base(t):
            raise TypecheckError(
                f"'~>' needs a base-typed body, got {type_str(t)}", e.loc)
        return t
    if isinstance(e, Join):
        t = infer_type(ctx, e.items[0])
        if not is_base(t):
            raise TypecheckError(
                f"'||' needs base-typed branches, got {type_str(t)}", e.loc)
        for item in e.items[1:]:
            t2 = infer_type(ctx, item)
            if t2 != t:
                raise TypecheckError(
                    f"'||' branches disagree: {type_str(t)} vs {type_str(t2)}",
                    item.loc or e.loc)
        return t
    if isinstance(e, MkBool):
        _check(ctx, e.if_true, PROP, "the first mkbool component")
        _check(ctx, e.if_false, PROP, "the second mkbool component")
        return BOOL
    if isinstance(e, IsTrue):
        _check(ctx, e.arg, BOOL, "the is_true argument")
        return PROP
    if isinstance(e, IsFalse):
        _check(ctx, e.arg, BOOL, "the is_false argument")
        return PROP
    raise TypecheckError(f"cannot type {type(e).__name__}", getattr(e, "loc", None))


def _check(ctx, e, expected, what):
    t = infer_type(ctx, e)
    if t != expected:
        raise TypecheckError(
            f"{what} has type {type_str(t)}, expected {type_str(expected)}",
            e.loc)
    return t
