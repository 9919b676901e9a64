"""Exception hierarchy shared by every module.

Each exception carries a short ``kind`` string, used by the CLI to build
structured error records.
"""


class WreathVarError(Exception):
    kind = "error"

    def to_record(self) -> dict:
        return {"kind": self.kind, "message": str(self), "location": None}


class IncomparableCardinals(WreathVarError):
    kind = "IncomparableCardinals"


class NotPrime(WreathVarError):
    kind = "NotPrime"


class PrimeMismatch(WreathVarError):
    kind = "PrimeMismatch"


class NotFinite(WreathVarError):
    kind = "NotFinite"


class NotAbelian(WreathVarError):
    kind = "NotAbelian"


class CapExceeded(WreathVarError):
    kind = "CapExceeded"


class BudgetExceeded(WreathVarError):
    kind = "BudgetExceeded"


class ParseError(WreathVarError):
    """Syntax error in a group or word expression.

    ``position`` is a byte offset into the input, ``expected`` the set of
    tokens that would have been accepted there.
    """

    kind = "SyntaxError"

    def __init__(self, message: str, position: int, expected=()):
        super().__init__(f"{message} at offset {position}")
        self.position = position
        self.expected = tuple(sorted(set(expected)))

    def to_record(self) -> dict:
        rec = super().to_record()
        rec["location"] = self.position
        rec["expected"] = list(self.expected)
        return rec
