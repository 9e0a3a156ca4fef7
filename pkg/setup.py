"""Build script for the compiled kernel extension.

The extension is optional: if Cython or a C compiler is unavailable the
package installs anyway and falls back to the pure-Python kernels at import.
"""

import os

from setuptools import Extension, setup

PYX = "src/turanmatch/kernels/_fast.pyx"

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("turanmatch.kernels._fast", [PYX])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
