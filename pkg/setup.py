import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: install the pure-Python kernels only
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("SUBCOL_NO_EXT", "") in ("", "0"):
    ext_modules = cythonize(
        [Extension("subcol._ckernels", ["src/subcol/_ckernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
