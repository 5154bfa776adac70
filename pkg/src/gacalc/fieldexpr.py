"""Small symbolic expression kernel for scalar fields.

Nodes cover exactly what the differential operators need: rational
constants, named variables, sums, products, integer powers, quotients,
and square roots.  Differentiation is closed over this node set.

``simplify`` normalizes an expression to a single quotient of
polynomials.  Square roots are carried as opaque atoms subject to the
formal rule sqrt(u)^2 = u; denominators containing such an atom are
rationalized by conjugate multiplication.  This is a bounded normalizer:
it folds constants, collects like terms, and combines quotients, but
makes no general factoring promise.  Square roots are treated formally
throughout, so a simplified expression can evaluate exactly (as a
rational number) even where the unsimplified form would walk through
the square root of a negative quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnboundVariable


class Expr:
    """Base class; arithmetic operators build new trees."""

    __slots__ = ()

    def __add__(self, other):
        return add(self, _as_expr(other))

    def __radd__(self, other):
        return add(_as_expr(other), self)

    def __sub__(self, other):
        return add(self, mul(_NEG_ONE, _as_expr(other)))

    def __rsub__(self, other):
        return add(_as_expr(other), mul(_NEG_ONE, self))

    def __mul__(self, other):
        return mul(self, _as_expr(other))

    def __rmul__(self, other):
        return mul(_as_expr(other), self)

    def __truediv__(self, other):
        return quotient(self, _as_expr(other))

    def __rtruediv__(self, other):
        return quotient(_as_expr(other), self)

    def __pow__(self, exponent):
        return power(self, exponent)

    def __neg__(self):
        return mul(_NEG_ONE, self)


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Add(Expr):
    terms: tuple


@dataclass(frozen=True)
class Mul(Expr):
    factors: tuple


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Div(Expr):
    num: Expr
    den: Expr


@dataclass(frozen=True)
class Sqrt(Expr):
    arg: Expr


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))
_NEG_ONE = Const(Fraction(-1))


def _as_expr(value) -> Expr:
    if isinstance(value, Expr):
        return value
    return Const(Fraction(value))


def const(value) -> Const:
    return Const(Fraction(value))


def variable(name: str) -> Var:
    return Var(name)


def add(*terms) -> Expr:
    """Sum with nested sums flattened and constants folded."""
    flat: list[Expr] = []
    constant = Fraction(0)
    for term in terms:
        term = _as_expr(term)
        if isinstance(term, Add):
            sub_terms = term.terms
        else:
            sub_terms = (term,)
        for item in sub_terms:
            if isinstance(item, Const):
                constant += item.value
            else:
                flat.append(item)
    if constant != 0:
        flat.insert(0, Const(constant))
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return Add(tuple(flat))


def mul(*factors) -> Expr:
    """Product with nested products flattened and constants folded."""
    flat: list[Expr] = []
    constant = Fraction(1)
    for factor in factors:
        factor = _as_expr(factor)
        if isinstance(factor, Mul):
            sub = factor.factors
        else:
            sub = (factor,)
        for item in sub:
            if isinstance(item, Const):
                constant *= item.value
            else:
                flat.append(item)
    if constant == 0:
        return ZERO
    if constant != 1:
        flat.insert(0, Const(constant))
    if not flat:
        return ONE
    if len(flat) == 1:
        return flat[0]
    return Mul(tuple(flat))


def power(base, exponent: int) -> Expr:
    base = _as_expr(base)
    if not isinstance(exponent, int):
        if isinstance(exponent, Fraction) and exponent.denominator == 1:
            exponent = exponent.numerator
        else:
            raise TypeError("power exponent must be an integer")
    if exponent == 0:
        return ONE
    if exponent == 1:
        return base
    if isinstance(base, Const):
        if base.value == 0 and exponent < 0:
            raise DomainError("zero raised to a negative power")
        return Const(base.value ** exponent)
    if isinstance(base, Pow):
        return power(base.base, base.exponent * exponent)
    return Pow(base, exponent)


def quotient(num, den) -> Expr:
    num = _as_expr(num)
    den = _as_expr(den)
    if isinstance(den, Const):
        if den.value == 0:
            raise DomainError("division by zero")
        return mul(num, Const(1 / den.value))
    if isinstance(num, Const) and num.value == 0:
        return ZERO
    return Div(num, den)


def sqrt_of(arg) -> Expr:
    arg = _as_expr(arg)
    if isinstance(arg, Const) and arg.value >= 0:
        root = _exact_sqrt(arg.value)
        if root is not None:
            return Const(root)
    return Sqrt(arg)


def _exact_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def free_variables(expr: Expr) -> set[str]:
    if isinstance(expr, Var):
        return {expr.name}
    if isinstance(expr, Const):
        return set()
    if isinstance(expr, Add):
        return set().union(*(free_variables(t) for t in expr.terms))
    if isinstance(expr, Mul):
        return set().union(*(free_variables(f) for f in expr.factors))
    if isinstance(expr, Pow):
        return free_variables(expr.base)
    if isinstance(expr, Div):
        return free_variables(expr.num) | free_variables(expr.den)
    if isinstance(expr, Sqrt):
        return free_variables(expr.arg)
    raise TypeError(f"not an expression node: {expr!r}")


# -- differentiation ---------------------------------------------------------

def diff(expr: Expr, var: str) -> Expr:
    """Partial derivative with respect to the named variable."""
    if isinstance(var, Var):
        var = var.name
    if isinstance(expr, Const):
        return ZERO
    if isinstance(expr, Var):
        return ONE if expr.name == var else ZERO
    if isinstance(expr, Add):
        return add(*(diff(t, var) for t in expr.terms))
    if isinstance(expr, Mul):
        pieces = []
        factors = expr.factors
        for i in range(len(factors)):
            pieces.append(mul(*factors[:i], diff(factors[i], var),
                              *factors[i + 1:]))
        return add(*pieces)
    if isinstance(expr, Pow):
        return mul(const(expr.exponent), power(expr.base, expr.exponent - 1),
                   diff(expr.base, var))
    if isinstance(expr, Div):
        u, v = expr.num, expr.den
        return quotient(add(mul(diff(u, var), v),
                            mul(_NEG_ONE, u, diff(v, var))),
                        power(v, 2))
    if isinstance(expr, Sqrt):
        return quotient(diff(expr.arg, var), mul(const(2), Sqrt(expr.arg)))
    raise TypeError(f"not an expression node: {expr!r}")


# -- evaluation ---------------------------------------------------------------

def eval_expr(expr: Expr, env) -> Fraction | float:
    """Evaluate at a point; exact when everything stays rational."""
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        try:
            value = env[expr.name]
        except KeyError:
            raise UnboundVariable(f"variable {expr.name!r} is not bound") from None
        return Fraction(value) if isinstance(value, int) else value
    if isinstance(expr, Add):
        total = Fraction(0)
        for term in expr.terms:
            total += eval_expr(term, env)
        return total
    if isinstance(expr, Mul):
        total = Fraction(1)
        for factor in expr.factors:
            total *= eval_expr(factor, env)
        return total
    if isinstance(expr, Pow):
        base = eval_expr(expr.base, env)
        if base == 0 and expr.exponent < 0:
            raise DomainError("zero raised to a negative power")
        return base ** expr.exponent
    if isinstance(expr, Div):
        den = eval_expr(expr.den, env)
        if den == 0:
            raise DomainError("division by zero")
        return eval_expr(expr.num, env) / den
    if isinstance(expr, Sqrt):
        value = eval_expr(expr.arg, env)
        if value < 0:
            raise DomainError("square root of a negative value")
        if isinstance(value, Fraction):
            root = _exact_sqrt(value)
            if root is not None:
                return root
        return math.sqrt(float(value))
    raise TypeError(f"not an expression node: {expr!r}")


# -- normalization -------------------------------------------------------------
#
# Polynomials are dicts mapping monomials to Fraction coefficients.  A
# monomial is a sorted tuple of (atom, exponent) pairs.  Atoms are
# ("var", name) or ("sqrt", key) where key is the frozen polynomial under
# the root; multiplying two sqrt atoms of the same key substitutes that
# polynomial back in, which keeps every sqrt exponent at 0 or 1.

_EMPTY_MONO = ()


def _freeze(poly: dict) -> tuple:
    return tuple(sorted(poly.items()))


def _pconst(value: Fraction) -> dict:
    value = Fraction(value)
    return {_EMPTY_MONO: value} if value != 0 else {}


_PONE = {_EMPTY_MONO: Fraction(1)}


def _patom(atom) -> dict:
    return {((atom, 1),): Fraction(1)}


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for mono, coeff in b.items():
        total = out.get(mono, 0) + coeff
        if total:
            out[mono] = total
        else:
            out.pop(mono, None)
    return out


def _psub(a: dict, b: dict) -> dict:
    return _padd(a, {m: -c for m, c in b.items()})


def _mono_mul(m1, m2):
    """Combine exponents; squares of sqrt atoms come back as radicands."""
    exps = dict(m1)
    for atom, e in m2:
        exps[atom] = exps.get(atom, 0) + e
    radicands = []
    reduced = {}
    for atom, e in exps.items():
        if atom[0] == "sqrt" and e >= 2:
            radicands.extend([atom[1]] * (e // 2))
            e %= 2
        if e:
            reduced[atom] = e
    return tuple(sorted(reduced.items())), radicands


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono, radicands = _mono_mul(ma, mb)
            term = {mono: ca * cb}
            for key in radicands:
                term = _pmul(term, dict(key))
            for m, c in term.items():
                total = out.get(m, 0) + c
                if total:
                    out[m] = total
                else:
                    out.pop(m, None)
    return out


def _ppow(a: dict, exponent: int) -> dict:
    out = dict(_PONE)
    for _ in range(exponent):
        out = _pmul(out, a)
    return out


def _content(poly: dict) -> Fraction:
    """Positive rational content: gcd of numerators over lcm of denominators."""
    num_gcd = 0
    den_lcm = 1
    for coeff in poly.values():
        num_gcd = math.gcd(num_gcd, abs(coeff.numerator))
        den_lcm = den_lcm * coeff.denominator // math.gcd(den_lcm, coeff.denominator)
    return Fraction(num_gcd, den_lcm) if num_gcd else Fraction(1)


# Denominators stay factored during normalization: a dict mapping frozen
# polynomial keys to positive exponents.  Sums then need only the
# factor-wise maximum instead of the full product of all denominators,
# which keeps repeated 1/sqrt(w) structures from blowing up the degree.

def _expand_factors(factors: dict) -> dict:
    out = dict(_PONE)
    for key, exponent in sorted(factors.items()):
        out = _pmul(out, _ppow(dict(key), exponent))
    return out


def _factor_lcm(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, exponent in b.items():
        out[key] = max(out.get(key, 0), exponent)
    return out


def _factor_scale(whole: dict, part: dict) -> dict:
    """Expanded polynomial for whole/part (exponent-wise difference)."""
    diff_factors = {}
    for key, exponent in whole.items():
        remaining = exponent - part.get(key, 0)
        if remaining:
            diff_factors[key] = remaining
    return _expand_factors(diff_factors)


def _norm(expr: Expr, radicands: set) -> tuple[dict, dict]:
    """Normalize to (numerator polynomial, factored denominator)."""
    if isinstance(expr, Const):
        return _pconst(expr.value), {}
    if isinstance(expr, Var):
        return _patom(("var", expr.name)), {}
    if isinstance(expr, Add):
        parts = [_norm(term, radicands) for term in expr.terms]
        den: dict = {}
        for _, fd in parts:
            den = _factor_lcm(den, fd)
        num: dict = {}
        for tn, fd in parts:
            num = _padd(num, _pmul(tn, _factor_scale(den, fd)))
        return num, den
    if isinstance(expr, Mul):
        num, den = dict(_PONE), {}
        for factor in expr.factors:
            fn, fd = _norm(factor, radicands)
            num = _pmul(num, fn)
            for key, exponent in fd.items():
                den[key] = den.get(key, 0) + exponent
        return num, den
    if isinstance(expr, Pow):
        bn, bd = _norm(expr.base, radicands)
        if expr.exponent >= 0:
            return _ppow(bn, expr.exponent), {k: e * expr.exponent
                                              for k, e in bd.items()}
        if not bn:
            raise DomainError("zero raised to a negative power")
        k = -expr.exponent
        num = _ppow(_expand_factors(bd), k)
        return num, {_freeze(bn): k}
    if isinstance(expr, Div):
        nn, nd = _norm(expr.num, radicands)
        dn, dd = _norm(expr.den, radicands)
        if not dn:
            raise DomainError("division by an identically zero expression")
        num = _pmul(nn, _expand_factors(dd))
        den = dict(nd)
        key = _freeze(dn)
        if set(dn) == {_EMPTY_MONO}:  # constant divisor folds into the numerator
            num = {m: c / dn[_EMPTY_MONO] for m, c in num.items()}
        else:
            den[key] = den.get(key, 0) + 1
        return num, den
    if isinstance(expr, Sqrt):
        an, ad = _norm(expr.arg, radicands)
        radicand = _pmul(an, _expand_factors(ad))  # sqrt(n/d) = sqrt(n d)/d
        if not radicand:
            return {}, {}
        scale = Fraction(1)
        content = _content(radicand)
        root = _exact_sqrt(content)
        if root is not None and root != 1:
            scale = root
            radicand = {m: c / content for m, c in radicand.items()}
        if set(radicand) == {_EMPTY_MONO}:
            value = radicand[_EMPTY_MONO]
            exact = _exact_sqrt(value) if value >= 0 else None
            if exact is not None:
                return _pconst(scale * exact), ad
        atom = ("sqrt", _freeze(radicand))
        radicands.add(atom[1])
        num = {((atom, 1),): scale}
        return num, ad
    raise TypeError(f"not an expression node: {expr!r}")


def _sqrt_atoms(poly: dict):
    return sorted({atom for mono in poly for atom, _ in mono if atom[0] == "sqrt"})


def _rationalize(num: dict, den: dict) -> tuple[dict, dict]:
    """Clear sqrt atoms out of the denominator by conjugate multiplication."""
    for _ in range(64):
        atoms = _sqrt_atoms(den)
        if not atoms:
            break
        atom = atoms[0]
        plain = {}
        carried = {}
        for mono, coeff in den.items():
            exps = dict(mono)
            if atom in exps:
                del exps[atom]
                carried[tuple(sorted(exps.items()))] = coeff
            else:
                plain[mono] = coeff
        conjugate = _psub(plain, _pmul(_patom(atom), carried))
        new_den = _pmul(den, conjugate)
        if not new_den:
            break  # den is a zero divisor of the extension; leave as-is
        num = _pmul(num, conjugate)
        den = new_den
    return num, den


def _pdiv_exact(a: dict, b: dict) -> dict | None:
    """Exact polynomial quotient a/b, or None.  Sqrt atoms are refused.

    Leading-term reduction under a graded lexicographic order; the order
    must be compatible with monomial multiplication, so exponents are
    compared as dense vectors over the atoms of the call.
    """
    if not b or _sqrt_atoms(a) or _sqrt_atoms(b):
        return None
    atoms = sorted({atom for mono in a for atom, _ in mono}
                   | {atom for mono in b for atom, _ in mono})
    position = {atom: i for i, atom in enumerate(atoms)}

    def grlex(mono):
        vec = [0] * len(atoms)
        for atom, e in mono:
            vec[position[atom]] = e
        return (sum(vec), tuple(vec))

    lead_b = max(b, key=grlex)
    coeff_b = b[lead_b]
    exps_b = dict(lead_b)
    quotient_poly: dict = {}
    rest = dict(a)
    while rest:
        lead_r = max(rest, key=grlex)
        exps = dict(lead_r)
        for atom, e in exps_b.items():
            if exps.get(atom, 0) < e:
                return None
            exps[atom] -= e
        mono = tuple(sorted((atom, e) for atom, e in exps.items() if e))
        coeff = rest[lead_r] / coeff_b
        quotient_poly[mono] = quotient_poly.get(mono, 0) + coeff
        rest = _psub(rest, _pmul({mono: coeff}, b))
    return quotient_poly


def _cancel(num: dict, den: dict, radicands: set) -> tuple[dict, dict]:
    if not num:
        return {}, dict(_PONE)
    # Common monomial factor (per-atom minimum exponent over every term).
    shared: dict = {}
    first = True
    for poly in (num, den):
        for mono in poly:
            exps = dict(mono)
            if first:
                shared = exps
                first = False
            else:
                shared = {atom: min(e, exps.get(atom, 0))
                          for atom, e in shared.items() if exps.get(atom, 0)}
    if shared:
        def strip(poly):
            out = {}
            for mono, coeff in poly.items():
                exps = dict(mono)
                for atom, e in shared.items():
                    exps[atom] -= e
                out[tuple(sorted((a, e) for a, e in exps.items() if e))] = coeff
            return out
        num, den = strip(num), strip(den)
    # Cancel radicand polynomials manufactured by the sqrt rules; they are
    # the common factors quotient combination produces.
    for key in sorted(radicands):
        factor = dict(key)
        if set(factor) == {_EMPTY_MONO}:
            continue
        while True:
            qn = _pdiv_exact(num, factor)
            if qn is None or not qn:
                break
            qd = _pdiv_exact(den, factor)
            if qd is None or not qd:
                break
            num, den = qn, qd
    lead = den[min(den, key=_display_key)]
    num = {m: c / lead for m, c in num.items()}
    den = {m: c / lead for m, c in den.items()}
    return num, den


def _display_key(mono):
    return (-sum(e for _, e in mono), mono)


def _poly_to_expr(poly: dict) -> Expr:
    if not poly:
        return ZERO
    terms = []
    for mono in sorted(poly, key=_display_key):
        factors = [Const(poly[mono])]
        for atom, exp in mono:
            if atom[0] == "var":
                base: Expr = Var(atom[1])
            else:
                base = Sqrt(_poly_to_expr(dict(atom[1])))
            factors.append(power(base, exp))
        terms.append(mul(*factors))
    return add(*terms)


def simplify(expr: Expr) -> Expr:
    """Normalize to a single quotient of collected polynomials."""
    radicands: set = set()
    num, factored = _norm(expr, radicands)
    den = _expand_factors(factored)
    if not den:
        raise DomainError("denominator is identically zero")
    num, den = _rationalize(num, den)
    num, den = _cancel(num, den, radicands)
    num_expr = _poly_to_expr(num)
    if den == _PONE:
        return num_expr
    return Div(num_expr, _poly_to_expr(den))


# -- formatting ---------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4


def format_expr(expr: Expr) -> str:
    """Render with ^ for powers; normalized forms read back in the
    expression language's scalar-field sub-grammar."""
    return _fmt(expr, 0)


def _fmt(expr: Expr, parent: int) -> str:
    if isinstance(expr, Const):
        text = str(expr.value)
        prec = _PREC_ATOM if expr.value >= 0 else _PREC_ADD
    elif isinstance(expr, Var):
        text, prec = expr.name, _PREC_ATOM
    elif isinstance(expr, Add):
        parts = [_fmt(expr.terms[0], _PREC_ADD)]
        for term in expr.terms[1:]:
            body = _fmt(term, _PREC_ADD)
            if body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        text, prec = " ".join(parts), _PREC_ADD
    elif isinstance(expr, Mul):
        factors = list(expr.factors)
        lead = ""
        if isinstance(factors[0], Const) and factors[0].value == -1 and len(factors) > 1:
            lead = "-"
            factors = factors[1:]
        text = lead + "*".join(_fmt(f, _PREC_MUL + 1 if isinstance(f, Mul) else _PREC_MUL)
                               for f in factors)
        prec = _PREC_ADD if lead else _PREC_MUL
    elif isinstance(expr, Div):
        text = _fmt(expr.num, _PREC_MUL) + "/" + _fmt(expr.den, _PREC_POW)
        prec = _PREC_MUL
    elif isinstance(expr, Pow):
        if expr.exponent < 0:
            return _fmt(Div(ONE, Pow(expr.base, -expr.exponent)), parent)
        text = _fmt(expr.base, _PREC_ATOM) + "^" + str(expr.exponent)
        prec = _PREC_POW
    elif isinstance(expr, Sqrt):
        text, prec = f"sqrt({_fmt(expr.arg, 0)})", _PREC_ATOM
    else:
        raise TypeError(f"not an expression node: {expr!r}")
    if prec < parent:
        return f"({text})"
    return text
