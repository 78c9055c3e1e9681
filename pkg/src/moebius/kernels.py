"""Hot enumeration kernels, compiled when available.

``BACKEND`` is ``"cython"`` when the extension imported and ``"python"``
otherwise.  Setting ``MOEBIUS_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pycore

if os.environ.get("MOEBIUS_PURE_PYTHON") == "1":
    _impl = _pycore
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _pycore

BACKEND = "python" if _impl is _pycore else "cython"

count_aperiodic_words = _impl.count_aperiodic_words
count_necklaces = _impl.count_necklaces
trial_factor = _impl.trial_factor

__all__ = ["BACKEND", "count_aperiodic_words", "count_necklaces", "trial_factor"]
