"""Shared exception types."""


class InvariantViolation(RuntimeError):
    """A guaranteed-total procedure found neither of its promised outcomes.

    Raised when an exhaustive dichotomy search comes up empty: this signals
    a corrupted input or an implementation bug, never a valid result.
    """


class SearchBudgetExceeded(RuntimeError):
    """A search hit its node or wall-clock budget before reaching a verdict."""

    def __init__(self, kind: str, nodes: int):
        super().__init__(f"search budget exceeded ({kind}) after {nodes} nodes")
        self.kind = kind
        self.nodes = nodes
