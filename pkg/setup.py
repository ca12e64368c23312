"""Build the optional compiled arithmetic kernel.

``qhopf/_kernel.py`` is compiled by Cython in pure-Python mode.  If Cython or
a C compiler is missing, the package installs without the extension and
``qhopf.backend`` falls back to the source module.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as e:  # compiler or Cython problems
            print(f"warning: compiled kernel not built ({e}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as e:
            print(f"warning: failed to build {ext.name} ({e}); using pure Python")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(["src/qhopf/_kernel.py"], language_level=3, quiet=True,
                     compiler_directives={"binding": True})


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
