"""Parse polynomial expressions such as ``"binom(x+2,2) + 3/2*x^2"``.

Grammar: integer and rational literals, the variable ``x``, ``+ - * /``,
``^`` or ``**`` with a non-negative integer exponent, parentheses, and
``binom(<linear in x>, d)``.  Division is only allowed by a constant.
"""

from __future__ import annotations

import ast
from fractions import Fraction

from .poly import Polynomial, binomial_poly, shift


class PolynomialSyntaxError(ValueError):
    pass


def _const(p: Polynomial, what: str) -> Fraction:
    if p.is_zero:
        return Fraction(0)
    if p.degree != 0:
        raise PolynomialSyntaxError(f"{what} must be a constant, got {p}")
    return p.coeffs[0]


def _binom(arg: Polynomial, d: Polynomial) -> Polynomial:
    n = _const(d, "binom degree")
    if n.denominator != 1 or n < 0:
        raise PolynomialSyntaxError(f"binom degree must be a non-negative integer, got {n}")
    if arg.is_zero or arg.degree == 0:
        value = binomial_poly(0, int(n))(_const(arg, "binom argument"))
        return Polynomial((value,))
    if arg.degree != 1:
        raise PolynomialSyntaxError(f"binom argument must be linear in x, got {arg}")
    # C(a x + s, n) is C(y, n) composed with y = a x + s
    a, s = arg.coeffs[1], arg.coeffs[0]
    return shift(binomial_poly(0, int(n)), s).scale_arg(a)


def _eval(node) -> Polynomial:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Polynomial((node.value,))
    if isinstance(node, ast.Name) and node.id == "x":
        return Polynomial.x()
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            c = _const(right, "divisor")
            if c == 0:
                raise PolynomialSyntaxError("division by zero")
            return left / c
        if isinstance(node.op, ast.Pow):
            e = _const(right, "exponent")
            if e.denominator != 1 or e < 0:
                raise PolynomialSyntaxError(f"exponent must be a non-negative integer, got {e}")
            return left ** int(e)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "binom"
        and len(node.args) == 2
        and not node.keywords
    ):
        return _binom(_eval(node.args[0]), _eval(node.args[1]))
    raise PolynomialSyntaxError(f"unsupported syntax: {ast.dump(node)[:60]}")


def parse_polynomial(text: str) -> Polynomial:
    src = text.replace("^", "**").strip()
    if not src:
        raise PolynomialSyntaxError("empty polynomial")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolynomialSyntaxError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval(tree)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise PolynomialSyntaxError(f"not a rational number: {text!r}") from None
