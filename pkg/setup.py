"""Build the optional Cython kernel; the package falls back to pure Python without it."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HBSUM_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("hbsum._ckernel", ["src/hbsum/_ckernel.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
