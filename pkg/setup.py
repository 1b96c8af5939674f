"""Builds the optional C kernel extension.

The package is fully functional without it: planebranch.kernels falls back
to the pure-Python bitset backend when the compiled module is missing.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Tolerate a failing extension build instead of aborting the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the C kernels failed ({exc}); "
            "falling back to the pure-Python backend",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available, skipping the C kernels", file=sys.stderr)
        return []
    ext = Extension(
        "planebranch.kernels._cbits",
        ["src/planebranch/kernels/_cbits.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level="3")


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
