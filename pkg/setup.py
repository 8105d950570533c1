# Optional compiled kernel.  The package is pure Python; building the
# Cython extension speeds up the large exhaustive sweeps (H(6), osp(6|2)):
#   python setup.py build_ext --inplace
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("supercomin._kernel", ["src/supercomin/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
