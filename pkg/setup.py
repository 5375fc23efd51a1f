"""Builds the optional compiled kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("KNOTORDER_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("knotorder.kernels._ckernels", ["src/knotorder/kernels/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
