import os

import numpy as np
from setuptools import Extension, setup

# The compiled kernels are an optimization, not a requirement: if Cython or a
# C compiler is missing the package falls back to the pure-Python kernels in
# fragopt._kernels._pykern (same results, slower).
ext_modules = []
if os.environ.get("FRAGOPT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fragopt._kernels._ckern",
                    sources=["src/fragopt/_kernels/_ckern.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
