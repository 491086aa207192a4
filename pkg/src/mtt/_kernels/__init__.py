"""Tree-growing kernel with compiled and pure-Python backends.

The compiled Cython kernel is used when it was built; otherwise the
pure-Python reference takes over. Both grow bit-identical trees. Set
MTT_BACKEND=python or MTT_BACKEND=compiled to force a choice (the
latter raises if the extension is missing).
"""

import os

from . import _fallback

_choice = os.environ.get("MTT_BACKEND", "").lower()

if _choice == "python":
    _impl = _fallback
else:
    try:
        from . import _core as _impl
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "MTT_BACKEND=compiled but the mtt._kernels._core extension "
                "is not built; reinstall with a C compiler available")
        _impl = _fallback

build_tree = _impl.build_tree


def backend_name() -> str:
    return "compiled" if _impl.__name__.endswith("_core") else "python"
