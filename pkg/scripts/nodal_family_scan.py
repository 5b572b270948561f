"""Scan the one-node family over a degree range and print the per-degree checks."""

import argparse
import time

from bourbaki.curve import family_conjecture_scan


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="lo", type=int, default=2)
    ap.add_argument("--to", dest="hi", type=int, default=6)
    args = ap.parse_args(argv)
    start = time.perf_counter()
    for v in family_conjecture_scan(args.lo, args.hi):
        failed = [k for k, ok in v.checks.items() if not ok]
        print(f"d={v.d} e={v.e} Bour={v.bour} polar={v.polar_degree} syz={v.syzygy_degrees} "
              f"rel={v.relation_degrees} {'all checks hold' if not failed else 'failed: ' + ', '.join(failed)}")
    print(f"elapsed {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
