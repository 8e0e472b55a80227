from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "flagsplit._kernels._speedups",
                ["src/flagsplit/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The package falls back to the pure-Python kernels at import time.
    extensions = []

setup(ext_modules=extensions)
