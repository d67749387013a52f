"""Compare the compiled and pure-Python echelon kernels.

Rows for each germ are built once at the truncation degree that certifies
it, so only the elimination itself is timed.  End-to-end ``milnor_number``
timings are reported too; there row construction in Python dominates.

    python3 benchmarks/bench_milnor.py [--repeat N]
"""

import argparse
import time

from fspectrum.milnor import COMPILED_AVAILABLE, local_algebra, milnor_number, parse_poly
from fspectrum.milnor.kernel import echelon_pivots
from fspectrum.milnor.local_algebra import ideal_generators, quotient_rows

GERMS = [
    "x^2 + y^2 + z^11",
    "x^3 + y^5 + z^2",
    "x^2*y + y^7 + z^2",
    "x^3 + y^3 + z^3 + w^3",
    "x^4 + y^4 + z^4",
    "x^5 + y^5 + x^2*y^2 + z^2",
    "x^3 + y^4 + z^5 + w^2",
    "x^4 + y^4 + z^4 + w^2 + x*y*z*w",
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not COMPILED_AVAILABLE:
        print("compiled kernel not built; only the Python kernel is timed")
    backends = ["python"] + (["compiled"] if COMPILED_AVAILABLE else [])

    header = f"{'germ':<34}{'mu':>5}{'rows':>8}{'cols':>8}"
    header += "".join(f"{'kernel ' + b:>17}" for b in backends)
    header += "".join(f"{'total ' + b:>16}" for b in backends)
    print(header)
    for text in GERMS:
        f = parse_poly(text)
        degree = local_algebra(f).degree
        monos, rows = quotient_rows(ideal_generators(f), f.num_vars, degree)
        kernel = [best_of(lambda b=b: echelon_pivots(rows, len(monos), b), args.repeat) for b in backends]
        total = [best_of(lambda b=b: milnor_number(f, backend=b), args.repeat) for b in backends]
        line = f"{text:<34}{milnor_number(f):>5}{len(rows):>8}{len(monos):>8}"
        line += "".join(f"{t * 1000:>14.1f} ms" for t in kernel)
        line += "".join(f"{t * 1000:>13.1f} ms" for t in total)
        if len(kernel) == 2:
            line += f"   x{kernel[0] / kernel[1]:.1f}"
        print(line)


if __name__ == "__main__":
    main()
