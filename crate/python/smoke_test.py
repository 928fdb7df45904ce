#!/usr/bin/env python3
"""Smoke test for the divide_knots_py extension module.

Build the extension first, then run this script from the repository root:

    cargo build -p divide-knots-py
    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from pathlib import Path

LEHMER = [1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1]


def locate_cdylib() -> Path:
    root = Path(__file__).resolve().parents[1]
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in (
            "libdivide_knots_py.so",
            "libdivide_knots_py.dylib",
            "divide_knots_py.dll",
        )
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    sys.exit("extension not built; run `cargo build -p divide-knots-py` first")


def check(dk) -> None:
    region = dk.Region(3, 5, 3, 4)
    assert str(region) == "[3,5;3,4]"
    assert region.area() == 18
    assert region.double_points() == 5
    assert region.braid() == "W(5)^3 W(3)"

    trace = region.trace()
    assert trace.immersed_arc
    assert trace.arcs == 1 and trace.circles == 0
    assert trace.double_points == 5

    svg = region.svg()
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 5

    assert dk.alexander("W(5)^3 W(3)") == LEHMER
    assert dk.genus("W(5)^3 W(3)") == 5

    pretzel = dk.Knot("III", eps=1, big_a=2)
    assert repr(pretzel) == "K_III(-1,+1,2,0,0)"
    assert pretzel.coef == 18
    assert pretzel.area == 18 and pretzel.gap == 0
    assert str(pretzel.region()) == "[3,5;3,4]"
    assert pretzel.genus == 5
    assert pretzel.braid == "W(5)^3 W(3)"
    assert pretzel.alexander == LEHMER
    assert pretzel.passes_checks()
    assert pretzel.mirrored().coef == -18

    big = dk.Knot("III", eps=1, big_a=2, k=2, t=1)
    assert (big.big_b, big.b, big.coef) == (13, 17, 219)
    assert big.braid == "W(13)^16 W(11)"
    assert big.genus == 95
    assert big.alexander is not None and len(big.alexander) == 191

    assert dk.torus_alexander(2, 3) == [1, -1, 1]
    assert dk.alexander("W(3)^2") == [1, -1, 1]

    rect = dk.rect_trace(6, 5)
    assert (rect.arcs, rect.circles, rect.double_points) == (1, 0, 10)
    hopf = dk.rect_trace(2, 2)
    assert (hopf.arcs, hopf.circles, hopf.double_points) == (2, 0, 1)

    rows = dk.sweep(grid="A=2..4,k=0..1,t=-1..1", types="III")
    assert len(rows) == 36
    assert repr(rows[0]) == "K_III(+1,+1,2,0,-1)"
    assert all(row.passes_checks() for row in rows)

    for bad in (
        lambda: dk.Knot("VII", 1, 2),
        lambda: dk.Knot("IV", 1, 4),
        lambda: dk.Region(5, 3, 3, 4),
        lambda: dk.alexander("w5^3"),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")


def main() -> None:
    lib = locate_cdylib()
    with tempfile.TemporaryDirectory() as tmp:
        suffix = ".pyd" if lib.suffix == ".dll" else ".so"
        shutil.copy2(lib, Path(tmp) / f"divide_knots_py{suffix}")
        sys.path.insert(0, tmp)
        import divide_knots_py as dk

        check(dk)
        print(f"divide_knots_py {dk.__version__}: all smoke checks passed")


if __name__ == "__main__":
    main()
