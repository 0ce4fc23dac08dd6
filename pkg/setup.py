"""Build script.

The compiled kernel extension is optional: if Cython or a C compiler is
missing the build still succeeds and the package falls back to the pure
Python kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("raylab._kernels", ["src/raylab/_kernels.pyx"], optional=True)],
        language_level="3",
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
