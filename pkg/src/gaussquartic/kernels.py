"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``GAUSSQUARTIC_PURE_PYTHON=1`` to force the fallback. Requests whose
values could overflow int64 are always routed to the Python kernels.
"""

from __future__ import annotations

import math
import os

from . import _pykernels

__all__ = ["BACKEND", "square_class_hits", "quartic_box_solutions", "is_square"]

_c = None
if not os.environ.get("GAUSSQUARTIC_PURE_PYTHON"):
    try:
        from . import _ckernels as _c
    except ImportError:
        _c = None

BACKEND = "compiled" if _c is not None else "python"

# headroom below 2**63 for the norm p^2 + q^2 and the isqrt correction
_I64_NORM_LIMIT = 2**61


def _abs(re: int, im: int) -> float:
    return math.hypot(re, im)


def square_class_hits(a, b, d, v, height, backend=None):
    """See ``_pykernels.square_class_hits``; arguments are (re, im) pairs."""
    mod = _pick(backend)
    if mod is _c:
        r = math.sqrt(2) * height
        bound = r**3 * (1 + _abs(*a) + _abs(*b))
        if (bound + 1) ** 2 >= _I64_NORM_LIMIT:
            mod = _pykernels
    return mod.square_class_hits(*a, *b, *d, *v, height)


def quartic_box_solutions(eps, c, bound, backend=None):
    mod = _pick(backend)
    if mod is _c and (2 * float(bound) ** 2) ** 4 >= _I64_NORM_LIMIT:
        mod = _pykernels
    return mod.quartic_box_solutions(eps, *c, bound)


def is_square(p: int, q: int, backend=None) -> bool:
    mod = _pick(backend)
    if mod is _c and p * p + q * q >= _I64_NORM_LIMIT:
        mod = _pykernels
    return mod.is_square(p, q)


def _pick(backend):
    if backend is None:
        return _c if _c is not None else _pykernels
    if backend == "python":
        return _pykernels
    if backend == "compiled":
        if _c is None:
            raise RuntimeError("compiled kernels are not available")
        return _c
    raise ValueError(f"unknown backend {backend!r}")
