"""Regenerate the JSON golden files under tests/golden from the bundled fan files."""
import contextlib
import io
import sys
from importlib import resources
from pathlib import Path

from toricqh.cli import main
from toricqh.fixtures import names

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

# (suffix, extra arguments)
REPORTS = [("ordinary", ["--ordinary"]), ("quantum", ["--quantum", "ample"])]
Z0_POLY = ["p2", "f1"]


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    if code != 0:
        sys.exit(f"{argv} exited with {code}")
    return buf.getvalue()


def golden_runs():
    for name in names():
        path = str(resources.files("toricqh") / "data" / f"{name}.fan")
        for suffix, extra in REPORTS:
            yield f"{name}.{suffix}.json", ["--machine", "cohomology", path] + extra
        if name in Z0_POLY:
            yield f"{name}.z0poly.json", ["--machine", "cohomology", path, "--quantum", "ample",
                                          "--z0", "poly"]
        yield f"{name}.validate.json", ["--machine", "validate", path]


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for fname, argv in golden_runs():
        (GOLDEN / fname).write_text(run(argv))
        print("wrote", fname)
