"""Command-line entry point: ``qchar {char,screen,graph,bethe,dsred,sl2}``.

Exit codes: 0 success, 1 usage error, 2 algorithmic failure report.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from dataclasses import dataclass, field, fields
from typing import Any, Sequence

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str = ""
    series: str = "A"
    rank: int = 1
    fundamental: int | None = None
    pos: int = 0
    roots: str | None = None
    table: bool = False
    input: str | None = None
    out: str | None = None
    dot: str | None = None
    kernel: bool = False
    max_terms: int = 20_000
    max_iterations: int = 200_000
    rs: str = "1,1"
    bs: str = "1,0.7+0.4j"
    m: int = 1
    q: float = 0.3
    seeds: int = 40
    seed: int = 0
    tol: float = 1e-10
    constant: str = "pole"
    zs: str = "0.3+0.2j,1.7-0.5j,-0.8+1.1j,0.5-0.9j,2.2+0.3j"
    csv: str | None = None
    perturb: float | None = None
    min_solutions: int = 1
    max_n: int = 5
    n: int | None = None
    i: int | None = None
    mukhin: bool = False

    @classmethod
    def keys(cls) -> set[str]:
        return {f.name for f in fields(cls)}

    def merged(self, data: dict[str, Any]) -> "RunConfig":
        unknown = set(data) - self.keys()
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        out = dataclasses.replace(self)
        for k, v in data.items():
            setattr(out, k, v)
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qchar", description="q-characters of quantum affine algebras")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, cartan: bool = True):
        sp.add_argument("--config", help="JSON file with run parameters")
        sp.add_argument("--out", help="output file (default: stdout)")
        if cartan:
            sp.add_argument("--series", choices=list("ABCD"))
            sp.add_argument("--rank", type=int)

    c = sub.add_parser("char", help="compute a q-character")
    common(c)
    c.add_argument("--fundamental", type=int, help="node of a fundamental representation")
    c.add_argument("--pos", type=int, help="lattice position of the fundamental")
    c.add_argument("--roots", help='Drinfeld roots, e.g. "1:[0,2];2:[1]" or JSON')
    c.add_argument("--table", action="store_true", default=None, help="use the closed-form table (node 1 only)")
    c.add_argument("--dot", help="also write the string graph as DOT")
    c.add_argument("--kernel", action="store_true", default=None, help="report the screening kernel test")
    c.add_argument("--max-terms", type=int, dest="max_terms")
    c.add_argument("--max-iterations", type=int, dest="max_iterations")

    s = sub.add_parser("screen", help="screening-kernel test of a polynomial")
    common(s)
    s.add_argument("--input", help="polynomial JSON file, '-' for stdin")

    g = sub.add_parser("graph", help="string graph of a polynomial as DOT")
    common(g)
    g.add_argument("--input", help="polynomial JSON file, '-' for stdin")

    b = sub.add_parser("bethe", help="solve sl2 Bethe equations and compare with the six-vertex model")
    common(b, cartan=False)
    b.add_argument("--rs", help="comma separated site lengths")
    b.add_argument("--bs", help="comma separated inhomogeneities (Python complex syntax)")
    b.add_argument("--m", type=int, help="number of Bethe roots")
    b.add_argument("--q", type=float, help="value of q, 0 < q < 1")
    b.add_argument("--seeds", type=int, help="number of Newton seeds")
    b.add_argument("--seed", type=int, help="random seed")
    b.add_argument("--tol", type=float, help="residual tolerance")
    b.add_argument("--constant", help="'pole', 'printed' or a number")
    b.add_argument("--zs", help="comma separated sample points")
    b.add_argument("--csv", help="write the eigenvalue-ratio table as CSV")
    b.add_argument("--perturb", type=float, help="also report residues of roots shifted by this amount")
    b.add_argument("--min-solutions", type=int, dest="min_solutions")

    d = sub.add_parser("dsred", help="difference Drinfeld-Sokolov cross-check for sl_N")
    common(d, cartan=False)
    d.add_argument("--max-n", type=int, dest="max_n")
    d.add_argument("--n", type=int, help="single N")
    d.add_argument("--i", type=int, help="single component")

    l = sub.add_parser("sl2", help="sl2 segment analysis")
    common(l, cartan=False)
    l.add_argument("--roots", help="comma separated positions")
    l.add_argument("--mukhin", action="store_true", default=None, help="print the Mukhin polynomial")
    return p


def build_config(argv: Sequence[str]) -> RunConfig:
    ns = _parser().parse_args(list(argv))
    if not ns.command:
        raise UsageError("missing subcommand")
    cfg = RunConfig(command=ns.command)
    if getattr(ns, "config", None):
        try:
            with open(ns.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        cfg = cfg.merged(data)
    cli = {k: v for k, v in vars(ns).items() if k not in ("config", "command") and v is not None}
    return cfg.merged(cli)


def _write(path: str | None, text: str, stdout) -> None:
    if path is None or path == "-":
        stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_poly(path: str | None, stdin):
    from qchar.ypoly import YPolynomial

    if path is None:
        raise UsageError("--input is required")
    try:
        text = stdin.read() if path == "-" else open(path).read()
        return YPolynomial.loads(text)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read polynomial: {exc}") from exc


def _cartan(cfg: RunConfig):
    from qchar.cartan import build_cartan

    try:
        return build_cartan(cfg.series, int(cfg.rank))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_char(cfg: RunConfig, stdout) -> int:
    from qchar.charbuild import FMFailure, FMLimits, HighestWeight, build_graph, export_dot, fm_expand, fundamental_table, parse_roots
    from qchar.screening import kernel_witness

    cd = _cartan(cfg)
    if cfg.roots is not None and cfg.fundamental is not None:
        raise UsageError("give either --roots or --fundamental")
    if cfg.roots is not None:
        try:
            hw = parse_roots(cfg.roots)
            hw.validate(cd)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif cfg.fundamental is not None:
        if not 1 <= cfg.fundamental <= cd.rank:
            raise UsageError("fundamental node out of range")
        hw = HighestWeight.fundamental(cfg.fundamental, cfg.pos)
    else:
        raise UsageError("give --roots or --fundamental")
    if cfg.table:
        if hw.roots != ((1, (cfg.pos,)),):
            raise UsageError("--table covers the first fundamental only")
        p = fundamental_table(cd, cfg.pos)
    else:
        try:
            p = fm_expand(cd, hw, FMLimits(cfg.max_terms, cfg.max_iterations))
        except FMFailure as exc:
            _write(cfg.out, _dumps(exc.report()), stdout)
            return EXIT_FAILURE
    record = p.to_json()
    status = EXIT_OK
    if cfg.kernel:
        wit = kernel_witness(cd, p)
        record["kernel"] = {str(i): ("FAIL" if i in wit else "PASS") for i in cd.nodes}
        if wit:
            status = EXIT_FAILURE
    _write(cfg.out, _dumps(record), stdout)
    if cfg.dot:
        _write(cfg.dot, export_dot(build_graph(p, cd, hw.monomial())), stdout)
    return status


def cmd_screen(cfg: RunConfig, stdout, stdin) -> int:
    from qchar.screening import kernel_witness
    from qchar.sl2theory import NotACharacter, grothendieck_decomposition

    cd = _cartan(cfg)
    p = _read_poly(cfg.input, stdin)
    try:
        wit = kernel_witness(cd, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report: dict[str, Any] = {
        "nodes": {str(i): ("FAIL" if i in wit else "PASS") for i in cd.nodes},
        "in_kernel": not wit,
    }
    if wit:
        report["witness"] = {str(i): s.to_json() for i, s in wit.items()}
    elif cd.rank == 1:
        try:
            mult = grothendieck_decomposition(p)
            if any(v < 0 for v in mult.values()):
                report["note"] = "in the kernel, but a virtual combination: some Grothendieck multiplicity is negative"
            report["multiplicities"] = [{"roots": list(k), "mult": v} for k, v in mult.items()]
        except NotACharacter as exc:
            report["note"] = f"in the kernel, but not a combination of characters: {exc}"
    _write(cfg.out, _dumps(report), stdout)
    return EXIT_OK if not wit else EXIT_FAILURE


def cmd_graph(cfg: RunConfig, stdout, stdin) -> int:
    from qchar.charbuild import build_graph, export_dot

    cd = _cartan(cfg)
    p = _read_poly(cfg.input, stdin)
    try:
        g = build_graph(p, cd)
    except ValueError as exc:
        sys.stderr.write(f"graph: {exc}\n")
        return EXIT_FAILURE
    _write(cfg.out, export_dot(g), stdout)
    return EXIT_OK


def _complex_list(text: str) -> list[complex]:
    try:
        return [complex(x.strip().replace(" ", "")) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad complex list {text!r}") from exc


def cmd_bethe(cfg: RunConfig, stdout) -> int:
    import numpy as np

    from qchar.bethe import EigenvalueSL2, baxter_eigenvalue, generate_sl2, residue_check, sixvertex_oracle, solve_sl2

    try:
        rs = [int(x) for x in str(cfg.rs).split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError("bad --rs") from exc
    bs = _complex_list(str(cfg.bs))
    zs = _complex_list(str(cfg.zs))
    if len(rs) != len(bs) or not rs:
        raise UsageError("--rs and --bs need the same positive length")
    if not 0 < cfg.q < 1 or cfg.m < 0 or cfg.tol <= 0:
        raise UsageError("need 0 < q < 1, m >= 0 and tol > 0")
    constant = cfg.constant
    if constant not in ("pole", "printed"):
        try:
            constant = float(constant)
        except ValueError as exc:
            raise UsageError("--constant must be 'pole', 'printed' or a number") from exc
    system = generate_sl2(rs, bs, cfg.m, constant)
    sols = solve_sl2(system, cfg.q, seeds=cfg.seeds, tolerance=cfg.tol, seed=cfg.seed)
    records = []
    for s in sols:
        rec = s.to_json()
        e = EigenvalueSL2(s.roots, rs, bs, cfg.q)
        rec["residues"] = [float(x) for x in residue_check(e)]
        rec["truncation_order"] = e.order
        if cfg.perturb is not None:
            ep = EigenvalueSL2(s.roots + cfg.perturb, rs, bs, cfg.q)
            rec["perturbed_residues"] = [float(x) for x in residue_check(ep)]
        records.append(rec)
    _write(cfg.out, _dumps({"m": cfg.m, "solutions": records}), stdout)
    if cfg.csv:
        if all(r == 1 for r in rs) and len(rs) <= 8:
            samples = sixvertex_oracle(len(rs), bs, cfg.q, zs)
            ref = EigenvalueSL2([], rs, bs, cfg.q)
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["solution", "z", "baxter_ratio", "oracle_ratio", "abs_error"])
            for k, s in enumerate(sols):
                e = EigenvalueSL2(s.roots, rs, bs, cfg.q)
                for smp in samples:
                    r = baxter_eigenvalue(e, smp.z) / baxter_eigenvalue(ref, smp.z)
                    rat = smp.ratios()
                    best = rat[int(np.argmin(np.abs(rat - r)))]
                    w.writerow([k, repr(smp.z), repr(complex(r)), repr(complex(best)), f"{abs(best - r):.3e}"])
            _write(cfg.csv, buf.getvalue(), stdout)
        else:
            sys.stderr.write("bethe: oracle comparison needs r_j = 1 and N <= 8; CSV skipped\n")
    return EXIT_OK if len(sols) >= cfg.min_solutions else EXIT_FAILURE


def cmd_dsred(cfg: RunConfig, stdout) -> int:
    from qchar.dsred import compare_with_qcharacter

    if cfg.n is not None:
        pairs = [(cfg.n, i) for i in ([cfg.i] if cfg.i is not None else range(1, cfg.n))]
    else:
        pairs = [(N, i) for N in range(2, cfg.max_n + 1) for i in range(1, N)]
    rows = []
    try:
        for N, i in pairs:
            rows.append(compare_with_qcharacter(N, i).as_row())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = ["N i terms shift result"]
    for r in rows:
        lines.append(f"{r['N']} {r['i']} {r['terms']} {r['shift']} {'PASS' if r['ok'] else 'FAIL'}")
    _write(cfg.out, "\n".join(lines) + "\n", stdout)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAILURE


def cmd_sl2(cfg: RunConfig, stdout) -> int:
    from qchar.sl2theory import chi_irreducible, decompose_into_segments, has_extra_dominant, is_irregular, mukhin_counterexample

    if cfg.mukhin:
        _write(cfg.out, _dumps(mukhin_counterexample().to_json()), stdout)
        return EXIT_OK
    if cfg.roots is None:
        raise UsageError("give --roots or --mukhin")
    try:
        roots = [int(x) for x in str(cfg.roots).strip("[]").split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError("bad --roots") from exc
    segs = decompose_into_segments(roots)
    rec = {
        "segments": [{"center": s.center, "length": s.length} for s in segs],
        "irregular": is_irregular(roots),
        "extra_dominant": has_extra_dominant(roots),
        "character": chi_irreducible(roots).to_json(),
    }
    _write(cfg.out, _dumps(rec), stdout)
    return EXIT_OK


def main(argv: Sequence[str] | None = None, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    try:
        cfg = build_config(sys.argv[1:] if argv is None else argv)
        if cfg.command == "char":
            return cmd_char(cfg, stdout)
        if cfg.command == "screen":
            return cmd_screen(cfg, stdout, stdin)
        if cfg.command == "graph":
            return cmd_graph(cfg, stdout, stdin)
        if cfg.command == "bethe":
            return cmd_bethe(cfg, stdout)
        if cfg.command == "dsred":
            return cmd_dsred(cfg, stdout)
        if cfg.command == "sl2":
            return cmd_sl2(cfg, stdout)
        raise UsageError(f"unknown command {cfg.command}")
    except UsageError as exc:
        sys.stderr.write(f"qchar: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
