"""Build script: compiles the Cython simplex kernel when possible.

The package works without the extension (a NumPy fallback is selected at
import time), so any compilation failure downgrades to a pure-Python install
instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "lpstruct._kernels._simplex_cy",
                ["src/lpstruct/_kernels/_simplex_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                # -ffp-contract=off keeps the compiled kernel bit-identical to
                # the NumPy fallback (no fused multiply-add contraction).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"lpstruct: skipping Cython kernel build ({exc}); "
          "falling back to the pure-Python kernel")

setup(ext_modules=ext_modules)
