"""Build script.

The package is pure Python except for one optional Cython extension,
``covexkl._speedups``, which accelerates the signed-permutation kernels
(length, descents, Bruhat comparison).  If Cython or a C compiler is
missing the build silently skips the extension; ``covexkl.kernels``
falls back to the pure-Python twin at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("covexkl._speedups", sources=["src/covexkl/_speedups.pyx"])],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
