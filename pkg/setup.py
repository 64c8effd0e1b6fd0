import sys

from setuptools import Extension, setup

extensions = [
    Extension(
        "quadperfect._scan",
        sources=["src/quadperfect/_scan.pyx"],
        extra_compile_args=["-O3"],
    )
]

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(extensions, compiler_directives={"language_level": 3})
except ImportError:
    # Pure-Python backend takes over at import time; the extension is optional.
    print("warning: Cython unavailable, building without the scan kernel", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
