"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is
selected at import time); building it just makes BFS sweeps and
random-walk simulation much faster.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GROWTREE_SKIP_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "growtree._ckernels",
                    ["src/growtree/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
