"""Proof terms for IPC, Visser's rules (V) and Kreisel-Putnam logic (KP)."""

from ._vkp import (
    Formula,
    NormalizeError,
    ParseError,
    SearchBudgetExceeded,
    Term,
    TypeCheckError,
    check,
    check_script,
    eval_v,
    extract,
    infer,
    normalize,
    parse_formula,
    parse_term,
    prove,
)

__all__ = [
    "Formula",
    "NormalizeError",
    "ParseError",
    "SearchBudgetExceeded",
    "Term",
    "TypeCheckError",
    "check",
    "check_script",
    "eval_v",
    "extract",
    "infer",
    "normalize",
    "parse_formula",
    "parse_term",
    "prove",
]
