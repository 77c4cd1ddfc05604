"""Point-classification kernels with a compiled fast path.

The compiled extension (slicetype.kernels._geomcore) is optional: it is
built at install time when a C toolchain is available.  When the import
fails the pure numpy implementation is used instead.  Both backends share
one contract and must classify identically, bit for bit.

Set SLICETYPE_KERNEL=python or SLICETYPE_KERNEL=compiled to force a
backend (the latter raises if the extension is missing).
"""

import os

_FORCED = os.environ.get("SLICETYPE_KERNEL", "").strip().lower()

if _FORCED == "python":
    from slicetype.kernels import _purepy as _impl

    BACKEND = "python"
elif _FORCED == "compiled":
    from slicetype.kernels import _geomcore as _impl  # hard failure if absent

    BACKEND = "compiled"
elif _FORCED:
    raise ImportError(
        f"unknown SLICETYPE_KERNEL value {_FORCED!r}; use 'python' or 'compiled'"
    )
else:
    try:
        from slicetype.kernels import _geomcore as _impl

        BACKEND = "compiled"
    except ImportError:
        from slicetype.kernels import _purepy as _impl

        BACKEND = "python"

classify_batch = _impl.classify_batch
classify_point = _impl.classify_point


def available_backends() -> dict[str, object]:
    """Import every backend present in this installation (for benchmarks
    and equivalence tests).  Keys: backend name, values: module."""
    from slicetype.kernels import _purepy

    found: dict[str, object] = {"python": _purepy}
    try:
        from slicetype.kernels import _geomcore

        found["compiled"] = _geomcore
    except ImportError:
        pass
    return found
