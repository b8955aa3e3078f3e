"""Builds the optional Cython kernel; the package works without it."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    setup()
else:
    extensions = [
        Extension(
            "fusscat._kernels",
            ["src/fusscat/_kernels.pyx"],
            extra_compile_args=["-O3"],
            optional=True,
        )
    ]
    setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
