"""Build script: compiles the optional Cython kernel core.

Set KEMPELAB_NO_EXT=1 to skip the extension entirely; the package then
runs on the pure-Python kernel backend.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KEMPELAB_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("kempelab._core", ["src/kempelab/_core.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
