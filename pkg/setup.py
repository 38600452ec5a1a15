"""Build script: compiles the optional fast elimination kernel.

The package is pure Python plus one optional Cython extension
(periplectic.exact._speedups).  If Cython or a C compiler is missing the
install still succeeds and the library falls back to the pure-Python
kernels at import time.
"""

from setuptools import setup, Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "periplectic.exact._speedups",
                ["src/periplectic/exact/_speedups.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"periplectic: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
