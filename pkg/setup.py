"""Build script: compiles the optional fast kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); build failures here therefore only cost speed, not
functionality.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HEAWOOD_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/heawood/_kernels/_speed.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
