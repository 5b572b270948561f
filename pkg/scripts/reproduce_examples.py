"""Analyze every curve in the bundled example corpus and print a summary table."""

import argparse
from importlib import resources

from bourbaki.curve import CurveInput, classify


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="q", help="q or fp:<prime>")
    args = ap.parse_args(argv)
    corpus = resources.files("bourbaki") / "data" / "examples.txt"
    print(f"{'curve':52} {'D':>2} {'e':>2} {'tau':>4} {'mu':>4} {'#Sing':>5} {'Bour':>5}")
    for line in corpus.read_text().splitlines():
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        r = classify(CurveInput.from_text(text, args.field))
        print(f"{text[:52]:52} {r.D:>2} {r.e:>2} {r.tau:>4} {r.mu:>4} {r.sing_count:>5} {r.bour:>5}")


if __name__ == "__main__":
    main()
