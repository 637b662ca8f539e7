from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("rispaces._signdist", ["src/rispaces/_signdist.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package falls back to rispaces._signdist_py at import time
    ext_modules = []

setup(ext_modules=ext_modules)
