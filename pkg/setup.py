import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QSHUFFLE_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("qshuffle._kernel", ["src/qshuffle/_kernel.pyx"], language="c++",
                       extra_compile_args=["-O3", "-std=c++17"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
