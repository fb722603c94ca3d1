from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The extension is optional: without Cython the package runs on the
# pure-Python kernels.
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "gaussquartic._ckernels",
                ["src/gaussquartic/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
