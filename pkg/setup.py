"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so a missing Cython or a failed compile must not break the
install.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/zkframe/_kernels.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
