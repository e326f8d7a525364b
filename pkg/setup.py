from Cython.Build import cythonize
from setuptools import Extension, setup

# The compiled secular-equation kernel is optional: if the extension fails to
# build, the package falls back to the pure-Python twin at import time.
extensions = [
    Extension(
        "roipca._secular",
        ["src/roipca/_secular.pyx"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
