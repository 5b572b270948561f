"""Command-line interface: analyze one curve, a corpus, or the nodal family."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .curve import (
    CurveError,
    CurveInput,
    CurveReport,
    InputRejected,
    bourbaki,
    classify,
    initial_choices,
    family_conjecture_scan,
)
from .polyring import PolynomialError, field_from_spec, is_prime
from .resolution import BettiTable

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_REJECTED = 2

SUMMARY_FIELDS = ["input", "status", "D", "e", "tau", "mu", "sing", "bour", "flags"]


@dataclass
class RunConfig:
    command: str
    poly: str | None = None
    path: str | None = None
    field: str = "q"
    json: bool = False
    seed: int = 0
    choice: int | None = None
    assume_irreducible: bool = False
    allow_noninitial_choice: bool = False
    jobs: int = 1
    d_from: int | None = None
    d_to: int | None = None


def _field_arg(text):
    try:
        fld = field_from_spec(text)
    except (ValueError, PolynomialError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if fld.p and not is_prime(fld.p):
        raise argparse.ArgumentTypeError(f"{fld.p} is not prime")
    return text


def build_parser():
    p = argparse.ArgumentParser(prog="bourbaki", description="Bourbaki degree and related invariants of plane curves")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one curve")
    a.add_argument("-f", "--poly", required=True, help="homogeneous polynomial in x, y, z")
    a.add_argument("--field", type=_field_arg, default="q", help="q (rationals) or fp:<prime>")
    a.add_argument("--json", action="store_true")
    a.add_argument("--choice", type=int, default=None, help="index of the syzygy generator used for the Bourbaki ideal")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--assume-irreducible", action="store_true")
    a.add_argument("--allow-noninitial-choice", action="store_true")

    b = sub.add_parser("batch", help="analyze a corpus file, one polynomial per line")
    b.add_argument("path")
    b.add_argument("--field", type=_field_arg, default="q")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("scan-family", help="check the nodal family f_d for a range of d")
    s.add_argument("--from", dest="d_from", type=int, required=True)
    s.add_argument("--to", dest="d_to", type=int, required=True)
    s.add_argument("--json", action="store_true")
    return p


def config_from_args(ns):
    return RunConfig(
        command=ns.command,
        poly=getattr(ns, "poly", None),
        path=getattr(ns, "path", None),
        field=getattr(ns, "field", "q"),
        json=getattr(ns, "json", False),
        seed=getattr(ns, "seed", 0),
        choice=getattr(ns, "choice", None),
        assume_irreducible=getattr(ns, "assume_irreducible", False),
        allow_noninitial_choice=getattr(ns, "allow_noninitial_choice", False),
        jobs=getattr(ns, "jobs", 1),
        d_from=getattr(ns, "d_from", None),
        d_to=getattr(ns, "d_to", None),
    )


# ---------------------------------------------------------------------------
# rendering


def _flags(rep):
    out = []
    if rep.smooth:
        out.append("smooth")
    if rep.free:
        out.append("free" + "(%d,%d)" % tuple(rep.free_exponents))
    if rep.nearly_free:
        out.append("nearly_free" + "(%d,%d)" % tuple(rep.nearly_free_exponents))
    for name in ("three_syzygy", "bour_two_shape", "nodal", "quasi_homogeneous_total", "homaloidal"):
        if getattr(rep, name):
            out.append(name)
    return out


def render_text(rep: CurveReport):
    lines = [
        f"f = {rep.polynomial}  over {rep.field}",
        f"D = {rep.D}  d = {rep.d}  e = {rep.e}",
        f"syzygy degrees {rep.syzygy_degrees}  relation degrees {rep.relation_degrees}",
        "Betti table of R/J_f:",
        BettiTable.from_json(rep.betti).to_grid(),
        f"tau = {rep.tau}  mu = {rep.mu}  #Sing = {rep.sing_count}  polar degree = {rep.polar_degree}",
    ]
    if rep.jacobian_length is not None:
        lines.append(f"length of R/J_f = {rep.jacobian_length} (m-primary)")
    lines.append(f"Bour = {rep.bour}  (d^2 + e(e-d) - tau = {rep.bour_formula})")
    if rep.bourbaki_generator_degrees:
        lines.append(
            f"Bourbaki ideal generator degrees {rep.bourbaki_generator_degrees}, "
            f"Hilbert numerator {rep.bourbaki_numerator}"
        )
    lines.append("flags: " + (", ".join(_flags(rep)) or "none"))
    lines.append(
        f"saturation number {rep.saturation_number}, indeg H^0 = {rep.local_cohomology_indeg}, "
        f"3(d-3) - sat = {rep.saturation_identity_rhs}"
    )
    for b in rep.bounds:
        tag = " [conditional]" if b.conditional else ""
        eq = "" if b.equality is None else (" (equality)" if b.equality else " (strict)")
        verdict = "holds" if b.holds else "FAILS"
        lines.append(f"bound {b.statement}: {b.lhs} {b.relation} {b.rhs} {verdict}{eq}{tag}")
    if rep.characteristic_caveat:
        lines.append("caveat: " + rep.characteristic_caveat)
    return "\n".join(lines)


def analyze_one(text, field="q", seed=0, choice=None, assume_irreducible=False, allow_noninitial=False):
    """(exit code, report dict or None, message).

    A non-initial ``choice`` (allowed only with ``allow_noninitial``) is
    reported separately; the report itself always uses an initial-degree
    generator.
    """
    try:
        inp = CurveInput.from_text(text, field, seed, assume_irreducible)
        extra = None
        if choice is not None and choice not in initial_choices(inp):
            b = bourbaki(inp, choice, allow_noninitial)
            extra = {"choice": choice, "degree": b.bour, "generator_degrees": b.generator_degrees()}
            choice = None
        data = classify(inp, choice).to_dict()
        if extra:
            data["noninitial_choice"] = extra
        return EXIT_OK, data, ""
    except (InputRejected, PolynomialError) as exc:
        return EXIT_REJECTED, None, f"{type(exc).__name__}: {exc}"
    except Exception as exc:  # batch lines must not abort the run
        return EXIT_INTERNAL, None, f"{type(exc).__name__}: {exc}"


def cmd_analyze(cfg: RunConfig, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    code, data, msg = analyze_one(
        cfg.poly, cfg.field, cfg.seed, cfg.choice, cfg.assume_irreducible, cfg.allow_noninitial_choice
    )
    if data is None:
        print(msg, file=err)
        return code
    if cfg.json:
        print(json.dumps(data, sort_keys=True), file=out)
        return EXIT_OK
    extra = data.pop("noninitial_choice", None)
    print(render_text(CurveReport.from_dict(data)), file=out)
    if extra:
        print(
            f"non-initial choice {extra['choice']}: deg R/I = {extra['degree']}, "
            f"generator degrees {extra['generator_degrees']}",
            file=out,
        )
    return EXIT_OK


def read_corpus(path):
    with open(path, encoding="utf-8") as fh:
        lines = []
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
    return lines


def _batch_worker(args):
    text, field, seed = args
    code, data, msg = analyze_one(text, field, seed)
    return text, code, data, msg


def cmd_batch(cfg: RunConfig, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    try:
        lines = read_corpus(cfg.path)
    except OSError as exc:
        print(f"cannot read {cfg.path}: {exc}", file=err)
        return EXIT_REJECTED
    tasks = [(t, cfg.field, cfg.seed) for t in lines]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_batch_worker, tasks))
    else:
        results = [_batch_worker(t) for t in tasks]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_FIELDS)
    for text, code, data, msg in results:
        if data is None:
            status = "rejected" if code == EXIT_REJECTED else "error"
            w.writerow([text, f"{status}: {msg}", "", "", "", "", "", "", ""])
            continue
        rep = CurveReport.from_dict(data)
        w.writerow([text, "ok", rep.D, rep.e, rep.tau, rep.mu, rep.sing_count, rep.bour, " ".join(_flags(rep))])
    out.write(buf.getvalue())
    return EXIT_OK


def cmd_scan_family(cfg: RunConfig, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    if cfg.d_from < 2 or cfg.d_from > cfg.d_to:
        print("scan-family needs 2 <= --from <= --to", file=err)
        return EXIT_REJECTED
    try:
        verdicts = family_conjecture_scan(cfg.d_from, cfg.d_to)
    except CurveError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL
    if cfg.json:
        recs = [v.to_dict() for v in verdicts]
        print(json.dumps(recs[0] if len(recs) == 1 else recs, sort_keys=True), file=out)
        return EXIT_OK
    header = f"{'d':>3} {'e':>3} {'tau':>4} {'mu':>3} {'#Sing':>5} {'Bour':>5} {'polar':>5}  syzygies        relations  theorem  conjecture"
    print(header, file=out)
    for v in verdicts:
        print(
            f"{v.d:>3} {v.e:>3} {v.tau:>4} {v.mu:>3} {v.sing_count:>5} {v.bour:>5} {v.polar_degree:>5}  "
            f"{str(v.syzygy_degrees):<15} {str(v.relation_degrees):<10} {str(v.theorem_ok):<8} {v.conjecture_ok}",
            file=out,
        )
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "batch": cmd_batch, "scan-family": cmd_scan_family}


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_REJECTED if exc.code else EXIT_OK
    cfg = config_from_args(ns)
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
