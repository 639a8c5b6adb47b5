from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension("twistbialg._kernels", ["src/twistbialg/_kernels.pyx"]),
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
