"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python backend is selected
at import time); set MEDUSA_NO_EXT=1 to skip compilation entirely.
"""
import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the speedup extension, but never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernels skipped ({exc}); "
                  "falling back to pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure-Python backend")


ext_modules = []
if not os.environ.get("MEDUSA_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "medusa.kernels._ckernels",
                    ["src/medusa/kernels/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available; compiled kernels skipped")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
