"""Time the compiled and pure-Python refinement kernels on the same searches.

    python3 benchmarks/bench_refine.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from hatlab.autgroup import automorphism_group
from hatlab.families import build, parse_params
from hatlab.kernel import backends

GRAPHS = ["Y(4,48;13,44)", "Z(20,5;9,2)", "Y(8,64;9,56)", "Y(4,240;61,44)", "Y(4,336;253,284)"]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("graphs", nargs="*", default=GRAPHS)
    args = ap.parse_args()
    kernels = backends()
    print(f"{'graph':<20} {'order':>6} " + " ".join(f"{k + ' s':>10}" for k in kernels) + "   speedup")
    for text in args.graphs:
        g = build(parse_params(text))
        times = {}
        forms = set()
        for name, fn in kernels.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                res = automorphism_group(g, refine=fn)
                best = min(best, time.perf_counter() - t0)
            forms.add(res.canonical_form)
            times[name] = best
        assert len(forms) == 1, "kernels disagree on the canonical form"
        cols = " ".join(f"{times[k]:>10.4f}" for k in kernels)
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{text:<20} {g.order:>6} {cols}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
