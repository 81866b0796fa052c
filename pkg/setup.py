from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython at build time: install pure-Python only, the package falls
    # back to cnomial._kernels_py at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "cnomial._kernels",
                ["src/cnomial/_kernels.pyx"],
                # -ffp-contract=off keeps the compiled kernels bit-identical
                # to the pure-Python backend (no FMA contraction, no
                # fast-math reassociation that would break compensated sums).
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
