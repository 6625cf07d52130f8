"""Make the package importable from a plain CMake build.

A wheel build places the compiled module inside the package; for in-tree runs
we copy the freshly built extension next to python/rqit/__init__.py and put
python/ on sys.path.
"""

import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parents[2]
PKG = ROOT / "python"

built = sorted((ROOT / "build").glob("_core*.so"), key=lambda p: p.stat().st_mtime)
if built:
    target = PKG / "rqit" / built[-1].name
    if not target.exists() or target.stat().st_mtime < built[-1].stat().st_mtime:
        shutil.copy2(built[-1], target)

sys.path.insert(0, str(PKG))
