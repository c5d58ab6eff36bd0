"""Build script: compiles the optional bitset kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so a missing Cython or a failed compile should not block
installation.  Build in place for development with:

    python setup.py build_ext --inplace
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cyclomat/_core.pyx"],
        language_level="3",
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
