from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "trineg._core",
    sources=[
        "src/syntax.cpp",
        "src/semantics.cpp",
        "src/alternating.cpp",
        "src/equations.cpp",
        "src/procedure.cpp",
        "src/generate.cpp",
        "src/bindings.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
