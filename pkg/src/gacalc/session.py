"""Statement evaluation against the algebra kernel.

A Session holds the current signature, coefficient mode, optional
default dimension, and name bindings.  Values remember the signature
they were created under; changing ``:sig`` only affects statements
evaluated afterwards.  A failing statement never touches session state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import fieldexpr
from .blades import EUCLIDEAN, Signature
from .calculus import gaussian_curvature
from .errors import EvalError, GaError, ParseError, UnboundVariable
from .fieldexpr import Expr, format_expr
from .multivector import (
    FLOAT,
    RATIONAL,
    Multivector,
    apply_versor,
    cross_product,
    format_scalar,
    rotate_in_plane,
    rotate_vec_to_vec,
)
from .parser import (
    Basis,
    Binary,
    Call,
    Directive,
    Let,
    Name,
    Num,
    Unary,
    parse_statement,
)

FUNCTIONS = {"grade", "dual", "inv", "mag", "nsq", "rev", "cross", "rot",
             "rotto", "versor", "coeff", "curvature"}
CONSTANTS = {"pi"}
RESERVED = FUNCTIONS | CONSTANTS | {"let", "sqrt"}


@dataclass
class Session:
    signature: Signature = EUCLIDEAN
    mode: str = RATIONAL
    default_dim: int | None = None
    bindings: dict = field(default_factory=dict)

    def eval(self, source: str):
        """Evaluate one statement; returns the result or None for blanks."""
        node = parse_statement(source)
        if node is None:
            return None
        return eval_statement(node, self, source)


@dataclass(frozen=True)
class Ack:
    """Acknowledgment of a directive, for REPL display."""
    message: str


def eval_statement(node, session: Session, source: str = ""):
    if isinstance(node, Directive):
        return _apply_directive(node, session, source)
    if isinstance(node, Let):
        if node.name in RESERVED:
            raise EvalError(f"{node.name!r} is a reserved name", node.span, source)
        value = _eval(node.value, session, source)
        session.bindings[node.name] = value
        return value
    return _eval(node, session, source)


def _apply_directive(node: Directive, session: Session, source: str) -> Ack:
    name, args = node.name, node.args
    if name == "sig":
        if len(args) != 1:
            raise ParseError(":sig takes one argument (a threshold or 'euclid')",
                             node.span, source)
        if args[0] in ("euclid", "euclidean"):
            session.signature = EUCLIDEAN
        elif args[0].isdigit():
            session.signature = Signature(int(args[0]))
        else:
            raise ParseError(f"bad signature {args[0]!r}", node.span, source)
        return Ack(f"signature: {session.signature}")
    if name == "dim":
        if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
            raise ParseError(":dim takes a positive integer", node.span, source)
        session.default_dim = int(args[0])
        return Ack(f"default dimension: {session.default_dim}")
    if name == "mode":
        if args not in (("rational",), ("float",)):
            raise ParseError(":mode takes 'rational' or 'float'", node.span, source)
        session.mode = args[0]
        return Ack(f"coefficient mode: {session.mode}")
    raise ParseError(f"unknown directive :{name}", node.span, source)


def _wrap_kernel_error(err: GaError, span, source: str) -> EvalError:
    wrapped = EvalError(str(err), span, source)
    wrapped.__cause__ = err
    return wrapped


def _eval(node, session: Session, source: str):
    try:
        return _eval_inner(node, session, source)
    except (EvalError, ParseError):
        raise
    except GaError as err:
        raise _wrap_kernel_error(err, node.span, source) from err
    except ZeroDivisionError as err:
        raise EvalError("division by zero", node.span, source) from err


def _eval_inner(node, session: Session, source: str):
    if isinstance(node, Num):
        if session.mode == FLOAT:
            return float(node.value)
        return node.value
    if isinstance(node, Basis):
        coefficient = 1.0 if session.mode == FLOAT else 1
        return Multivector.blade(node.indices, node.sign * coefficient,
                                 session.signature, session.mode)
    if isinstance(node, Name):
        if node.ident == "pi":
            return math.pi
        try:
            return session.bindings[node.ident]
        except KeyError:
            raise UnboundVariable(f"name {node.ident!r} is not bound") from None
    if isinstance(node, Unary):
        operand = _eval(node.operand, session, source)
        if node.op == "-":
            return -operand
        if isinstance(operand, Multivector):
            return operand.reverse()
        return operand  # reverse fixes grade 0
    if isinstance(node, Binary):
        return _eval_binary(node, session, source)
    if isinstance(node, Call):
        return _eval_call(node, session, source)
    raise EvalError("statement is not an expression", node.span, source)


def _as_mv(value, session: Session) -> Multivector:
    if isinstance(value, Multivector):
        return value
    mode = FLOAT if isinstance(value, float) else RATIONAL
    return Multivector.scalar(value, session.signature, mode)


def _eval_binary(node: Binary, session: Session, source: str):
    left = _eval(node.left, session, source)
    right = _eval(node.right, session, source)
    scalars = not isinstance(left, Multivector) and not isinstance(right, Multivector)
    if scalars and node.op in "+-*/":
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if right == 0:
            raise EvalError("division by zero", node.span, source)
        if isinstance(left, float) or isinstance(right, float):
            return float(left) / float(right)
        return Fraction(left) / Fraction(right)
    a, b = _as_mv(left, session), _as_mv(right, session)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if node.op == "/":
        return a / b
    if node.op == "|":
        return a.inner(b)
    if node.op == "^":
        return a.outer(b)
    raise EvalError(f"unknown operator {node.op!r}", node.span, source)


def _int_arg(value, node, source: str, what: str) -> int:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise EvalError(f"{what} must be an integer", node.span, source)


def _float_arg(value, node, source: str, what: str) -> float:
    if isinstance(value, Multivector):
        if value.is_scalar():
            return float(value.scalar_part())
        raise EvalError(f"{what} must be a scalar", node.span, source)
    return float(value)


def _eval_call(node: Call, session: Session, source: str):
    func = node.func
    if func not in FUNCTIONS:
        raise EvalError(f"unknown function {func!r}", node.span, source)
    if func == "curvature":
        if len(node.args) != 1:
            raise EvalError("curvature(f) takes one argument", node.span, source)
        surface = _field_expr(node.args[0], source)
        return gaussian_curvature(surface, session.signature)
    if func == "coeff":
        if len(node.args) != 2 or not isinstance(node.args[1], Basis):
            raise EvalError("coeff(A, e..) takes a value and a basis symbol",
                            node.span, source)
        target = _as_mv(_eval(node.args[0], session, source), session)
        blade_node = node.args[1]
        return blade_node.sign * target.coeff(blade_node.indices)

    args = [_eval(arg, session, source) for arg in node.args]

    def arity(n):
        if len(args) != n:
            raise EvalError(f"{func}() takes {n} argument(s), got {len(args)}",
                            node.span, source)

    if func == "grade":
        arity(2)
        return _as_mv(args[0], session).grade(
            _int_arg(args[1], node, source, "grade"))
    if func == "dual":
        if len(args) == 1:
            if session.default_dim is None:
                raise EvalError("dual needs a dimension: dual(A, n) or :dim n",
                                node.span, source)
            dim = session.default_dim
        else:
            arity(2)
            dim = _int_arg(args[1], node, source, "dimension")
        return _as_mv(args[0], session).dual(dim)
    if func == "inv":
        arity(1)
        return _as_mv(args[0], session).inverse()
    if func == "mag":
        arity(1)
        return _as_mv(args[0], session).magnitude()
    if func == "nsq":
        arity(1)
        return _as_mv(args[0], session).norm_squared()
    if func == "rev":
        arity(1)
        return _as_mv(args[0], session).reverse()
    if func == "cross":
        arity(2)
        return cross_product(_as_mv(args[0], session), _as_mv(args[1], session))
    if func == "rot":
        arity(4)
        return rotate_in_plane(_as_mv(args[0], session), _as_mv(args[1], session),
                               _as_mv(args[2], session),
                               _float_arg(args[3], node, source, "angle"))
    if func == "rotto":
        arity(3)
        return rotate_vec_to_vec(_as_mv(args[0], session),
                                 _as_mv(args[1], session),
                                 _as_mv(args[2], session))
    if func == "versor":
        if len(args) < 2:
            raise EvalError("versor(v, u1, ..., uk) needs at least one factor",
                            node.span, source)
        return apply_versor(_as_mv(args[0], session),
                            [_as_mv(a, session) for a in args[1:]])
    raise EvalError(f"unknown function {func!r}", node.span, source)


def _field_expr(node, source: str) -> Expr:
    """Interpret a parse tree as a scalar field expression over x1..x3.

    Identifiers become symbolic variables, ``^`` is an integer power
    (not the outer product; there is nothing to wedge in a scalar
    field), and sqrt(...) is admitted.
    """
    if isinstance(node, Num):
        if isinstance(node.value, float):
            raise EvalError("field expressions use rational constants",
                            node.span, source)
        return fieldexpr.Const(node.value)
    if isinstance(node, Name):
        return fieldexpr.variable(node.ident)
    if isinstance(node, Unary):
        if node.op == "-":
            return fieldexpr.mul(-1, _field_expr(node.operand, source))
        raise EvalError("reverse has no meaning in a scalar field",
                        node.span, source)
    if isinstance(node, Binary):
        if node.op == "^":
            exponent_node = node.right
            if not (isinstance(exponent_node, Num)
                    and isinstance(exponent_node.value, Fraction)
                    and exponent_node.value.denominator == 1):
                raise EvalError("power needs a literal integer exponent",
                                node.span, source)
            return fieldexpr.power(_field_expr(node.left, source),
                                   int(exponent_node.value))
        left = _field_expr(node.left, source)
        right = _field_expr(node.right, source)
        if node.op == "+":
            return fieldexpr.add(left, right)
        if node.op == "-":
            return fieldexpr.add(left, fieldexpr.mul(-1, right))
        if node.op == "*":
            return fieldexpr.mul(left, right)
        if node.op == "/":
            return fieldexpr.quotient(left, right)
        raise EvalError(f"operator {node.op!r} has no meaning in a scalar field",
                        node.span, source)
    if isinstance(node, Call) and node.func == "sqrt" and len(node.args) == 1:
        return fieldexpr.sqrt_of(_field_expr(node.args[0], source))
    if isinstance(node, Basis):
        raise EvalError("basis symbols cannot appear in a scalar field",
                        node.span, source)
    raise EvalError("not a scalar field expression",
                    getattr(node, "span", (0, 0)), source)


# -- output -----------------------------------------------------------------

def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Ack):
        return value.message
    if isinstance(value, Multivector):
        return str(value)
    if isinstance(value, Expr):
        return format_expr(value)
    return format_scalar(value if isinstance(value, (Fraction, float))
                         else Fraction(value))


def value_record(value, session: Session) -> dict:
    """JSON-ready record; scalars are reported as grade-0 multivectors."""
    if isinstance(value, Expr):
        return {"expr": format_expr(value)}
    if not isinstance(value, Multivector):
        value = _as_mv(value, session)
    return value.to_record()
