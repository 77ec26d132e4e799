from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "gapvec._core",
    [
        "src/pybind_module.cpp",
        "src/field.cpp",
        "src/matrix.cpp",
        "src/polynomial.cpp",
        "src/variety.cpp",
        "src/dims.cpp",
        "src/properties.cpp",
        "src/report_io.cpp",
        "src/variety_io.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
