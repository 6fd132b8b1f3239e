import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: install the pure-Python fallback only
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("KFCRIT_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "kfcrit._ckernels",
                ["src/kfcrit/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
