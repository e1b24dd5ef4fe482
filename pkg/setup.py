"""Build script: compiles the optional partition-search extension.

The package works without the extension (a pure-Python twin of the search
kernel is selected at import time), so any failure here is demoted to a
warning rather than aborting the install.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if we can; fall back to pure Python if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: extension build skipped ({exc}); "
                  "pure-Python kernel will be used", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: building {ext.name} failed ({exc}); "
                  "pure-Python kernel will be used", file=sys.stderr)


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/setrep/_partition_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # pragma: no cover - Cython not installed
    print("warning: Cython not available; pure-Python kernel will be used",
          file=sys.stderr)

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": optional_build_ext},
)
