from ._hyperlog import (
    DialectError,
    ParseError,
    SearchTimeout,
    check_proof,
    evaluate,
    prove,
    translate,
)

__all__ = [
    "DialectError",
    "ParseError",
    "SearchTimeout",
    "check_proof",
    "evaluate",
    "prove",
    "translate",
]
