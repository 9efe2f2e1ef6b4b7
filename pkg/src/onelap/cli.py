"""``onelap`` command line.

Exit codes: 0 success, 1 input/usage errors, 2 graph too large for
enumeration, 3 compare found mu_2 != h, 4 verify found no certificate.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .cheeger import cheeger_exact, cheeger_inequality_check, mu2_via_pi_min
from .errors import OnelapError, TooLarge
from .graph import Graph, from_spec, parse_edge_list, serialize_edge_list
from .rational import fmt_float, fmt_rat, parse_rat
from .spectrum import EnumConfig, default_threads, enumerate_spectrum, second_eigenvalue
from .verify import is_eigenvector, verify_eigenpair

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_TOO_LARGE = 2
EXIT_MISMATCH = 3
EXIT_NOT_EIGEN = 4


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    source: str
    graph: Graph
    fmt: str
    enum: EnumConfig
    out: Optional[str]


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(args) -> tuple[str, Graph]:
    if bool(args.input) == bool(args.gen):
        raise CliError("give exactly one of --in FILE or --gen SPEC")
    if args.gen:
        return args.gen, from_spec(args.gen)
    return args.input, parse_edge_list(_read_text(args.input))


def read_vector(path: str):
    values = []
    for lineno, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(parse_rat(line))
        except (ValueError, ZeroDivisionError):
            raise CliError(f"{path}:{lineno}: not a rational number: {line!r}") from None
    return values


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- commands -----------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig, args) -> tuple[int, str]:
    report = enumerate_spectrum(cfg.graph, cfg.enum)
    if cfg.fmt == "json":
        return EXIT_OK, report.dumps(cfg.graph)
    if cfg.fmt == "csv":
        return EXIT_OK, report.to_csv()
    lines = [f"n={report.n} m={report.m} components={report.components}"]
    for e in report.entries:
        lines.append(f"mu={fmt_rat(e.mu)}  ({fmt_float(float(e.mu))})  patterns={e.pattern_count}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_cheeger(cfg: RunConfig, args) -> tuple[int, str]:
    h, cut = cheeger_exact(cfg.graph)
    if cfg.fmt == "json":
        return EXIT_OK, _json(cut.to_json())
    if cfg.fmt == "csv":
        rows = [["h", "subset", "boundary", "vol_s", "vol_sbar"],
                [fmt_rat(h), " ".join(map(str, cut.subset)), cut.boundary_size, cut.vol_s, cut.vol_sbar]]
        return EXIT_OK, _csv(rows)
    return EXIT_OK, (
        f"h = {fmt_rat(h)}  subset={list(cut.subset)}  boundary={cut.boundary_size}"
        f"  vol={cut.vol_s}/{cut.vol_sbar}\n"
    )


def cmd_mu2(cfg: RunConfig, args) -> tuple[int, str]:
    if args.method == "pi":
        mu2, pattern = mu2_via_pi_min(cfg.graph, cfg.enum)
    else:
        report = enumerate_spectrum(cfg.graph, cfg.enum)
        mu2 = second_eigenvalue(report)
        pattern = report.entry(mu2).patterns[0]
    if cfg.fmt == "json":
        return EXIT_OK, _json({"mu2": fmt_rat(mu2), "mu2_float": round(float(mu2), 12),
                               "pattern": list(pattern), "method": args.method})
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([["mu2", "pattern"], [fmt_rat(mu2), " ".join(map(str, pattern))]])
    return EXIT_OK, f"{fmt_rat(mu2)}\n"


def cmd_compare(cfg: RunConfig, args) -> tuple[int, str]:
    g = cfg.graph
    mu2 = second_eigenvalue(enumerate_spectrum(g, cfg.enum))
    lam2, h, ineq_ok = cheeger_inequality_check(g)
    equal = mu2 == h
    code = EXIT_OK if equal else EXIT_MISMATCH
    row = {
        "graph": cfg.source,
        "n": g.n,
        "m": g.m,
        "mu2": fmt_rat(mu2),
        "h": fmt_rat(h),
        "lambda2": fmt_float(lam2),
        "cheeger_ineq_ok": ineq_ok,
    }
    if cfg.fmt == "json":
        return code, _json({**row, "mu2_equals_h": equal})
    if cfg.fmt == "csv":
        return code, _csv([list(row), [str(v).lower() if isinstance(v, bool) else v for v in row.values()]])
    verdict = "ok" if equal and ineq_ok else "VIOLATION"
    return code, (
        f"mu2={row['mu2']} h={row['h']} lambda2={row['lambda2']} "
        f"cheeger_ineq={'ok' if ineq_ok else 'FAIL'} {verdict}\n"
    )


def cmd_verify(cfg: RunConfig, args) -> tuple[int, str]:
    if not args.vec:
        raise CliError("verify needs --vec FILE")
    x = read_vector(args.vec)
    g = cfg.graph
    if args.mu is not None:
        mu = parse_rat(args.mu)
        cert = verify_eigenpair(g, mu, x)
    else:
        hit = is_eigenvector(g, x)
        cert = hit[1] if hit else None
    if cert is None:
        if cfg.fmt == "json":
            return EXIT_NOT_EIGEN, _json({"result": "NOT-EIGEN"})
        return EXIT_NOT_EIGEN, "NOT-EIGEN\n"
    if cfg.fmt == "json":
        return EXIT_OK, _json(cert.to_json(g))
    if cfg.fmt == "csv":
        rows = [["u", "v", "z"]] + [[*d["edge"], d["value"]] for d in cert.to_json(g)["z"]]
        return EXIT_OK, f"# mu={fmt_rat(cert.mu)}\n" + _csv(rows)
    lines = [f"mu {fmt_rat(cert.mu)}"]
    lines += [f"z {d['edge'][0]} {d['edge'][1]} {d['value']}" for d in cert.to_json(g)["z"]]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_gen(cfg: RunConfig, args) -> tuple[int, str]:
    text = serialize_edge_list(cfg.graph)
    if cfg.fmt == "json":
        g = cfg.graph
        return EXIT_OK, _json({"n": g.n, "m": g.m, "edges": [list(e) for e in sorted(g.edges)]})
    return EXIT_OK, text


COMMANDS = {
    "spectrum": cmd_spectrum,
    "cheeger": cmd_cheeger,
    "mu2": cmd_mu2,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="FILE", help="edge-list file")
    common.add_argument("--gen", metavar="SPEC",
                        help="path:N, cycle:N, complete:N, star:N or petersen")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default $ONELAP_THREADS or 1)")
    common.add_argument("--max-n", type=int, default=16, help="enumeration size guard")

    parser = argparse.ArgumentParser(
        prog="onelap", description="Exact spectrum of the graph 1-Laplacian."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="all eigenvalues and normal eigenvectors")
    sub.add_parser("cheeger", parents=[common], help="exact Cheeger constant")
    p = sub.add_parser("mu2", parents=[common], help="second eigenvalue")
    p.add_argument("--method", choices=("enum", "pi"), default="enum")
    sub.add_parser("compare", parents=[common], help="mu2 vs h vs lambda2")
    p = sub.add_parser("verify", parents=[common], help="certify a vector as an eigenvector")
    p.add_argument("--vec", metavar="FILE", help="one rational per line")
    p.add_argument("--mu", help="eigenvalue to test (default: the vector's energy)")
    sub.add_parser("gen", parents=[common], help="print a generated graph as an edge list")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        threads = args.threads if args.threads is not None else default_threads()
        if threads < 1:
            raise CliError("--threads must be >= 1")
        source, graph = load_graph(args)
        cfg = RunConfig(
            command=args.command,
            source=source,
            graph=graph,
            fmt=args.fmt,
            enum=EnumConfig(max_n=args.max_n, threads=threads),
            out=args.out,
        )
        code, text = COMMANDS[args.command](cfg, args)
    except CliError as exc:
        print(f"onelap: {exc}", file=sys.stderr)
        return exc.code
    except TooLarge as exc:
        print(f"onelap: too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (OnelapError, ValueError) as exc:
        print(f"onelap: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"onelap: cannot write {cfg.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
