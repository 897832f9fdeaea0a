"""Backend selection for the scan kernel.

Prefers the compiled extension and falls back to the pure-Python twin when
it is absent (source checkout without a build) or unusable for the request
(widths beyond the compiled stack limit).  ``BACKEND`` names the default
choice so diagnostics and benchmarks can report it.
"""

from __future__ import annotations

from . import _scan_py

try:
    from . import _scan  # compiled extension, optional
except ImportError:  # pragma: no cover - depends on how the package was built
    _scan = None

BACKEND = "compiled" if _scan is not None else "python"

COMPILED_MAX_WIDTH = 8


def scan(width: int, bound: int, first_lo: int = 1, first_hi: int | None = None,
         backend: str | None = None):
    """Dispatch to the requested or best available kernel."""
    choice = backend or BACKEND
    if choice == "compiled" and (_scan is None or width > COMPILED_MAX_WIDTH):
        if backend == "compiled":
            raise ValueError("compiled kernel unavailable for this request")
        choice = "python"
    module = _scan if choice == "compiled" else _scan_py
    return module.scan(width, bound, first_lo, first_hi)
