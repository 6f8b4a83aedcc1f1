"""Exact computations in two-parameter quantum groups over Q(r,s)."""

from ._qrs import (
    DivisionByZero,
    ExprSyntaxError,
    PoleAtPoint,
    QrsError,
    Scalar,
    Workbench,
    q_binomial,
    q_number,
    suites,
    verify,
)

__all__ = [
    "DivisionByZero",
    "ExprSyntaxError",
    "PoleAtPoint",
    "QrsError",
    "Scalar",
    "Workbench",
    "q_binomial",
    "q_number",
    "suites",
    "verify",
]
