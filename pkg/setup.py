"""Build script. The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package installs pure-Python and selects the
NumPy backend at import time."""
import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("ENTROPART_NO_EXTENSION") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "entropart.backends._fastkern",
                    sources=["src/entropart/backends/_fastkern.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError as exc:
        print("entropart: building without compiled kernels (%s)" % exc,
              file=sys.stderr)

setup(ext_modules=ext_modules)
