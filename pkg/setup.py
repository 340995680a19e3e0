"""Build script: compiles the optional integer-kernel extension.

The package is fully functional without the extension (a pure-Python
fallback with identical semantics ships alongside it), so any failure to
cythonize or compile is tolerated and the install proceeds.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "torelli_screen._kernels",
        ["src/torelli_screen/_kernels.pyx"],
        extra_compile_args=["-O2"],
    )
    ext.optional = True
    extensions = cythonize(ext, compiler_directives={"language_level": "3"})
    for e in extensions:
        e.optional = True
except ImportError:
    pass

setup(ext_modules=extensions)
