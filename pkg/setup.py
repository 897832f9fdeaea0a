"""Build script for the optional compiled scan kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time); building it just makes the
exhaustive search run orders of magnitude faster.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/twofrieze/_scan.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # noqa: BLE001 - any build-env problem means "skip the ext"
    print(f"warning: compiled kernel skipped ({exc}); pure-Python fallback "
          "will be used", file=sys.stderr)

setup(ext_modules=ext_modules)
