from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/techsched/kernels/_ckern.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the kernels
    # package falls back automatically at import.
    ext_modules = []

setup(ext_modules=ext_modules)
