"""Search kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python twin takes over.  ``POSET_RAMSEY_BACKEND=pure`` forces the
fallback (useful for benchmarking and twin testing); ``=compiled`` makes a
missing extension an import error instead of a silent downgrade.
"""

from __future__ import annotations

import os

from poset_ramsey._kernels import pure as _pure

STATUS_NONE = _pure.STATUS_NONE
STATUS_FOUND = _pure.STATUS_FOUND
STATUS_BUDGET = _pure.STATUS_BUDGET
STATUS_TIMEOUT = _pure.STATUS_TIMEOUT

_forced = os.environ.get("POSET_RAMSEY_BACKEND")
if _forced not in (None, "", "pure", "compiled"):
    raise ImportError(f"POSET_RAMSEY_BACKEND must be 'pure' or 'compiled', not {_forced!r}")

if _forced == "pure":
    _impl = _pure
else:
    try:
        from poset_ramsey._kernels import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _pure

BACKEND_NAME: str = _impl.BACKEND_NAME
find_induced_copy = _impl.find_induced_copy
witness_search = _impl.witness_search


def available_backends() -> dict[str, object]:
    """Importable kernel modules by name; 'compiled' is absent if unbuilt."""
    backends: dict[str, object] = {"pure-python": _pure}
    try:
        from poset_ramsey._kernels import _ckernels
        backends["compiled"] = _ckernels
    except ImportError:
        pass
    return backends
