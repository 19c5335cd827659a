"""Build script for the optional compiled walk kernels.

The package works without the extension (a pure-Python implementation of the
same kernels is selected at import time), so a missing compiler or Cython
only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    # No -ffast-math: the compiled kernels must be bit-identical to the
    # pure-Python fallback.
    ext_modules = cythonize(
        [
            Extension(
                "lexiwalk._kernels",
                ["src/lexiwalk/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
