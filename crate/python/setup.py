"""Builds the fanham_py extension module by delegating to cargo.

The compiled crate is a ready-made CPython extension; this shim only
compiles it in release mode and copies the shared library to wherever
setuptools expects the extension artifact.
"""

import shutil
import subprocess
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

REPO_ROOT = Path(__file__).resolve().parent.parent


class CargoBuildExt(build_ext):
    def build_extension(self, ext):
        subprocess.run(
            [
                "cargo",
                "build",
                "--release",
                "-p",
                "fanham-py",
                "--features",
                "extension-module",
            ],
            cwd=REPO_ROOT,
            check=True,
        )
        built = REPO_ROOT / "target" / "release" / "libfanham_py.so"
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(built, dest)


setup(
    ext_modules=[Extension("fanham_py", sources=[])],
    cmdclass={"build_ext": CargoBuildExt},
)
