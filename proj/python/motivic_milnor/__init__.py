"""Exact products in the mod-2 motivic Steenrod algebra, Milnor basis."""

from ._core import (
    AlgebraError,
    Element,
    ExpressionSyntaxError,
    coproduct,
    element,
    from_json,
    p,
    q,
    simplify,
    unit,
    verify,
)

__all__ = [
    "AlgebraError",
    "Element",
    "ExpressionSyntaxError",
    "coproduct",
    "element",
    "from_json",
    "p",
    "q",
    "simplify",
    "unit",
    "verify",
]
