"""Build script: compiles the optional speedup extension when possible.

The package is pure Python plus one optional Cython extension holding the
hot arithmetic kernels.  If Cython or a C compiler is unavailable (or
CHEBIDENT_NO_EXT is set), installation proceeds without the extension and
the pure-Python kernels are used at runtime.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install over the speedup extension."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, broken toolchain, ...
            print(f"warning: skipping optional extension build ({exc})")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"warning: skipping optional extension {ext.name} ({exc})")


ext_modules = []
cmdclass = {}
if not os.environ.get("CHEBIDENT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "chebident._kernels_c",
                    ["src/chebident/_kernels_c.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print("warning: Cython not available, building without the speedup extension")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
