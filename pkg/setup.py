"""Build script for the optional compiled kernel.

The package works without it: ``rhoghn.kernel`` falls back to pure Python
when the extension is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("rhoghn._kernel", ["src/rhoghn/_kernel.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
