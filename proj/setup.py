from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "crossfree._core",
    sources=["bindings/module.cpp", *sorted(glob("src/*.cpp"))],
    include_dirs=["include", "vendor"],
    libraries=["fmt"],
    cxx_std=20,
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    packages=["crossfree"],
    package_dir={"": "python"},
)
