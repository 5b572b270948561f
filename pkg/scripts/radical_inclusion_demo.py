"""Compare sqrt(H) with sqrt(I_eps) for each initial-degree syzygy choice."""

import argparse

from bourbaki.curve import CurveInput, bourbaki, initial_choices, radical_inclusion

DEFAULT = "x^2*y^2+x^2*z^2+y^2*z^2+2*x*y*z*(1/2*x+y+z)"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-f", "--polynomial", default=DEFAULT)
    args = ap.parse_args(argv)
    inp = CurveInput.from_text(args.polynomial)
    for c in initial_choices(inp):
        r = radical_inclusion(inp, c)
        b = bourbaki(inp, c)
        rel = "equal" if r.equal else ("strict" if r.included else "not included")
        print(f"choice {c}: Bour={b.bour} generators of degree {b.generator_degrees()} inclusion {rel}")


if __name__ == "__main__":
    main()
