from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "playlab.engine._fastcore",
        ["src/playlab/engine/_fastcore.pyx"],
        # -ffp-contract=off: UCB scores must match the pure backend bit for bit
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
)
