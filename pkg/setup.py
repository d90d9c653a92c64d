"""Build script.

The package is pure Python; a small Cython extension accelerates the
Laurent-polynomial determinant kernel.  The extension is optional: when
Cython (or a C compiler) is unavailable the install falls back to the
pure implementation in surgeon._poly_pure.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/surgeon/_poly_speed.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
