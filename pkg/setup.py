import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or with GWSV_SKIP_EXT=1)
# the package falls back to the pure-NumPy kernels at import time.
ext_modules = []
if os.environ.get("GWSV_SKIP_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gwsv._ckernels", ["src/gwsv/_ckernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
