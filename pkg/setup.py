# Builds the optional compiled point-counting core.  If Cython or a C
# compiler is unavailable the install proceeds without it and the package
# falls back to the pure-Python kernel at import time.

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qsieve._counting",
                ["src/qsieve/_counting.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"qsieve: skipping compiled kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
