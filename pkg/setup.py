"""Build script: compiles the optional geometry kernel extension.

The package works without the extension (a pure-Python backend is selected
at import time), so compilation failures only cost speed, not features.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the extension instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: extension build skipped ({exc}); "
                  "falling back to the pure-Python kernels", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernels", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the "
              "compiled kernels", file=sys.stderr)
        return []
    # -ffp-contract=off: fused multiply-add would round differently from
    # the pure backend and break the bit-for-bit kernel contract.
    ext = Extension(
        "slicetype.kernels._geomcore",
        ["src/slicetype/kernels/_geomcore.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
