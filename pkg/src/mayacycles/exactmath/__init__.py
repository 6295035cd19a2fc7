"""Exact scalar, polynomial and rational-function arithmetic."""

from .linalg import bareiss_det, int_det, newton_to_monomial, wronskian, wronskian_interpolated
from .poly import Z, Poly, format_poly, poly_gcd, poly_lcm
from .ratfunc import RatFunc, common_denominator, logderiv_poly, ratfunc_logderiv
from .scalar import (
    ExactScalar,
    RadicandMismatch,
    Scalar,
    make_scalar,
    scalar_from_json,
    scalar_to_json,
    sqrt_rational,
    to_rational,
)


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_derivative(p: Poly, k: int = 1) -> Poly:
    return p.derivative(k)


__all__ = [
    "ExactScalar",
    "Poly",
    "RadicandMismatch",
    "RatFunc",
    "Scalar",
    "Z",
    "bareiss_det",
    "common_denominator",
    "format_poly",
    "logderiv_poly",
    "make_scalar",
    "poly_arith",
    "poly_derivative",
    "poly_gcd",
    "poly_lcm",
    "ratfunc_logderiv",
    "scalar_from_json",
    "scalar_to_json",
    "sqrt_rational",
    "to_rational",
    "wronskian",
    "wronskian_interpolated",
    "int_det",
    "newton_to_monomial",
]
