"""Build script: compiles the optional C extension for the hot sweep kernel.

The package is pure Python by default.  When Cython is available at build
time, ``malcevkit._sweep_cy`` is compiled and picked up automatically at
import; otherwise the pure-Python kernel in ``malcevkit._sweep_py`` is used.
Both backends implement the same contract and are cross-checked by the test
suite and the benchmark under ``benchmarks/``.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/malcevkit/_sweep_cy.pyx"],
        language_level="3",
    )
except ImportError:
    # No Cython at build time: ship pure Python only.
    pass

setup(ext_modules=ext_modules)
