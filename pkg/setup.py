"""Build script for the optional compiled partition-function kernel.

The package is fully functional without the extension; qweights.qkostant
falls back to the pure-Python twin when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("qweights._partition_cy", ["src/qweights/_partition_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
