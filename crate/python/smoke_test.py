"""Smoke test for the plumbtrace extension module.

Build and run from the repository root:

    cargo build -p plumbing-trace-py --features extension-module
    cp target/debug/libplumbtrace.so python/plumbtrace.so
    python3 python/smoke_test.py
"""

import cmath
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import plumbtrace as pt


def main():
    s04 = pt.Surface.builtin("s04")
    assert s04.xi == 1 and s04.genus == 0 and s04.boundary == 4
    assert pt.trace(s04, [2], [0]) == ["4*t1^2 - 8*t1 + 6"]

    s11 = pt.Surface.builtin("s11")
    tr, mat = pt.eval_word(pt.word(s11, [1], [0])[0])
    assert mat == "[[-i*t1 + i, -i], [-i, 0]]", mat

    here = os.path.dirname(os.path.abspath(__file__))
    s20 = pt.Surface.from_file(os.path.join(here, "..", "surfaces", "sigma20.surf"))
    assert pt.dt_to_penner(s20, [0, 1, 1], [0, 1, -1]) == [0, 0, 0]
    assert pt.penner_to_dt(s20, [0, 1, 1], [0, 0, 0]) == [0, 1, -1]

    for q, p in pt.random_coords(s20, seed=1, count=20):
        r = pt.verify(s20, q, p)
        assert r["pass"], (q, p, r)
        ours, oracle = pt.component_count(s20, q, p)
        assert ours == oracle == 1

    assert pt.dt_from_flp(*pt.flp_from_dt(3, -4)) == (3, -4)
    tau = 0.3 + 1.2j
    assert abs(pt.kra_tau(pt.kra_tk(tau)) - tau) < 1e-12
    assert abs(pt.kra_tk(tau) - cmath.exp(1j * cmath.pi * tau)) < 1e-12

    try:
        pt.trace(s04, [1], [0])
    except ValueError:
        pass
    else:
        raise AssertionError("odd intersection accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
