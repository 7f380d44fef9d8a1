"""Command line interface: file formats and the pd/check/verify/oracle/fixtures commands.

Exit codes: 0 ok, 1 parse error, 2 unsupported shape, 3 oracle cap,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .core import Hypergraph, MonomialIdeal, from_ideal, is_separated, to_standard_ideal
from .errors import (CharacteristicDisagreement, MinimalityError, NeedsOracle, OracleTooLarge,
                     ParseError, UnsupportedShape)

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3, 4

FORMATS = ("hypergraph-text", "ideal-text", "json")
CONDITIONS = ("star", "starstar", "sharp", "ferrers", "babyF")
POPULATIONS = ("strings", "cycles", "unicyclic", "bipartite", "all")


# -- parsing -----------------------------------------------------------------

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _guess_format(text: str) -> str:
    body = [_strip_comment(ln).strip() for ln in text.splitlines()]
    body = [ln for ln in body if ln]
    if body and body[0].startswith("{"):
        return "json"
    for ln in body:
        if re.fullmatch(r"mu\s*=?\s*\d+", ln):
            continue
        if re.search(r"[^\d,\s-]", ln):
            return "ideal-text"
    return "hypergraph-text"


def parse_hypergraph_text(text: str, zero_indexed: bool = False) -> Hypergraph:
    """One face per line, comma-separated vertices; an optional ``mu N`` line fixes |V|."""
    faces = []
    mu = None
    where = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = re.fullmatch(r"\s*mu\s*=?\s*(\d+)\s*", line)
        if m:
            if mu is not None or faces:
                raise ParseError("the mu line must come first and only once", lineno, 1)
            mu = int(m.group(1))
            continue
        face = []
        col = 1
        for tok in line.split(","):
            lead = len(tok) - len(tok.lstrip())
            item = tok.strip()
            if not item:
                raise ParseError("empty vertex entry", lineno, col + lead)
            if not re.fullmatch(r"\d+", item):
                raise ParseError(f"not a vertex number: {item!r}", lineno, col + lead)
            v = int(item) + (1 if zero_indexed else 0)
            if v == 0:
                raise ParseError("vertices are numbered from 1 (use --zero-indexed)", lineno, col + lead)
            if mu is not None and v > mu:
                raise ParseError(f"vertex {item} exceeds mu = {mu}", lineno, col + lead)
            face.append(v)
            col += len(tok) + 1
        faces.append(face)
        where.append(lineno)
    if not faces:
        raise ParseError("no faces found", 1, 1)
    top = max(max(f) for f in faces)
    mu = top if mu is None else mu
    covered = set().union(*map(set, faces))
    missing = sorted(set(range(1, mu + 1)) - covered)
    if missing:
        shown = missing[0] - (1 if zero_indexed else 0)
        raise ParseError(f"vertex {shown} lies in no face", where[-1], 1)
    labels = list(range(mu)) if zero_indexed else None
    return Hypergraph.from_faces(faces, mu=mu, labels=labels)


def parse_ideal_text(text: str) -> MonomialIdeal:
    """One generator per line, whitespace-separated variable names."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        for m in re.finditer(r"\S+", line):
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", m.group()):
                raise ParseError(f"bad variable name {m.group()!r}", lineno, m.start() + 1)
        gens.append(line.split())
    if not gens:
        raise ParseError("no generators found", 1, 1)
    return MonomialIdeal.from_names(gens)


def parse_json(text: str, zero_indexed: bool = False) -> Hypergraph | MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("expected a json object", 1, 1)
    if "faces" in data:
        faces = data["faces"]
        if not isinstance(faces, list) or not all(isinstance(f, list) for f in faces):
            raise ParseError("faces must be a list of lists", 1, 1)
        lines = []
        for i, f in enumerate(faces):
            if not f:
                raise ParseError(f"face {i} is empty", 1, 1)
            if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in f):
                raise ParseError(f"face {i} has a non-integer vertex", 1, 1)
            lines.append(",".join(map(str, f)))
        head = f"mu {data['mu']}\n" if "mu" in data else ""
        H = parse_hypergraph_text(head + "\n".join(lines), zero_indexed)
        if "labels" in data:
            H = H.with_labels(data["labels"])
        return H
    if "gens" in data:
        try:
            return MonomialIdeal.from_names(data["gens"], data.get("vars"))
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc), 1, 1) from None
    raise ParseError('expected "faces" or "gens"', 1, 1)


def parse(source, fmt: str | None = None, zero_indexed: bool = False) -> Hypergraph | MonomialIdeal:
    """Parse a path, an open stream, or ``fixture:NAME``."""
    if isinstance(source, (str, Path)) and str(source).startswith("fixture:"):
        from .fixtures import fixtures
        name = str(source)[len("fixture:"):]
        table = fixtures()
        if name not in table:
            raise ParseError(f"unknown fixture {name!r}")
        return table[name].hypergraph
    if hasattr(source, "read"):
        text = source.read()
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    if fmt is None:
        fmt = "json" if str(source).endswith(".json") else _guess_format(text)
    if fmt == "json":
        return parse_json(text, zero_indexed)
    if fmt == "ideal-text":
        return parse_ideal_text(text)
    if fmt == "hypergraph-text":
        return parse_hypergraph_text(text, zero_indexed)
    raise ValueError(f"unknown format {fmt!r}")


def as_hypergraph(obj) -> Hypergraph:
    if isinstance(obj, Hypergraph):
        return obj
    try:
        return from_ideal(obj)
    except MinimalityError as exc:
        raise ParseError(f"ideal generators are not minimal: {exc}") from None


def to_text(H: Hypergraph) -> str:
    lines = [f"mu {H.mu}"] + [",".join(map(str, f)) for f in H.sorted_faces()]
    return "\n".join(lines) + "\n"


def to_json(H: Hypergraph) -> dict:
    out = {"mu": H.mu, "faces": [list(f) for f in H.sorted_faces()]}
    if tuple(H.labels) != tuple(range(1, H.mu + 1)):
        out["labels"] = [x if isinstance(x, (int, str)) else str(x) for x in H.labels]
    return out


# -- formatting helpers ------------------------------------------------------

def _fmt_set(H: Hypergraph, vs) -> str:
    labs = sorted((H.label(v) for v in vs), key=lambda x: (isinstance(x, str), x))
    return "{" + ",".join(map(str, labs)) + "}"


def _out(text: str = "") -> None:
    print(text)


# -- commands ----------------------------------------------------------------

def cmd_pd(args) -> int:
    from .reduce import compute_pd
    H = as_hypergraph(parse(args.file, args.format, args.zero_indexed))
    val, trace = compute_pd(H, args.method, args.fallback)
    if args.json:
        rec = {"pd": val, "method": args.method, "vertices": H.mu}
        if args.trace:
            rec["trace"] = [s.as_dict() for s in trace.steps]
        _out(json.dumps(rec))
        return EXIT_OK
    if args.trace:
        for s in trace.steps:
            _out(json.dumps(s.as_dict()))
    _out(f"pd = {val}")
    return EXIT_OK


def check_condition(H: Hypergraph, condition: str) -> tuple[bool, str]:
    """Evaluate one condition and describe its evidence."""
    from .highpd import (babyF_witness, check_sharp, check_star, check_star_star,
                         find_spanning_ferrers)
    if condition == "star":
        ok, ev = check_star(H)
        if not ok:
            return False, "false"
        detail = ev.clause
        if ev.vertex is not None:
            detail += f" vertex={H.label(ev.vertex)}"
        if ev.parts:
            detail += " parts=" + " ".join(_fmt_set(H, p) for p in ev.parts)
        return True, f"true, {detail}"
    if condition == "starstar":
        ok = check_star_star(H)
        return ok, "true" if ok else "false"
    if condition == "sharp":
        wit = check_sharp(H)
        if wit is None:
            return False, "false"
        return True, f"true, V1={_fmt_set(H, wit.V1)} V2={_fmt_set(H, wit.V2)}"
    if condition == "ferrers":
        found = find_spanning_ferrers(H)
        if found is None:
            return False, "false"
        rows, cols = found
        return True, (f"true, rows={','.join(str(H.label(v)) for v in rows)} "
                      f"columns={','.join(str(H.label(v)) for v in cols)}")
    if condition == "babyF":
        wit = babyF_witness(H)
        if wit is None:
            return False, "false"
        return True, (f"true, pd = |V|-2 = {H.mu - 2}, "
                      f"V1={_fmt_set(H, wit.V1)} V2={_fmt_set(H, wit.V2)}")
    raise ValueError(f"unknown condition {condition!r}")


def cmd_check(args) -> int:
    H = as_hypergraph(parse(args.file, args.format, args.zero_indexed))
    _, line = check_condition(H, args.condition)
    _out(line)
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .oracle import betti_tables
    H = as_hypergraph(parse(args.file, args.format, args.zero_indexed))
    chars = tuple(int(c) for c in args.char.split(","))
    tables = betti_tables(to_standard_ideal(H), chars, engine=args.engine)
    values = {}
    for p, t in tables.items():
        values[p] = t.pd
        betti = " ".join(f"b{i}={b}" for i, b in t.graded().items())
        _out(f"char {p}: pd = {t.pd}  {betti}")
    if len(set(values.values())) > 1:
        raise CharacteristicDisagreement(values)
    _out(f"pd = {next(iter(values.values()))}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    from .fixtures import fixtures
    table = fixtures()
    if args.dump:
        if args.dump not in table:
            _out(f"unknown fixture {args.dump!r}")
            return EXIT_PARSE
        H = table[args.dump].hypergraph
        _out(json.dumps(to_json(H)) if args.json else to_text(H).rstrip("\n"))
        return EXIT_OK
    for f in table.values():
        pd = "-" if f.pd is None else str(f.pd)
        _out(f"{f.name:18s} |V|={f.hypergraph.mu:<3d} faces={len(f.hypergraph.faces):<3d} pd={pd:<3s} {f.note}")
    return EXIT_OK


# -- verification harness ----------------------------------------------------

def population(name: str, max_vertices: int, min_vertices: int = 1):
    """Instances of a named population, one per isomorphism class."""
    from .enumeration import all_hypergraphs, cycle_rank, cycles, one_dimensional, strings

    def at_most_one_cycle(n, edges):
        return cycle_rank(n, edges) <= 1

    for n in range(min_vertices, max_vertices + 1):
        if name == "strings":
            yield from strings(n)
        elif name == "cycles":
            if n >= 3:
                yield from cycles(n)
        elif name == "unicyclic":
            yield from one_dimensional(n, connected=True, edge_filter=at_most_one_cycle)
        elif name == "bipartite":
            yield from one_dimensional(n, "bipartite")
        elif name == "all":
            yield from all_hypergraphs(n, separated=True)
        else:
            raise ValueError(f"unknown population {name!r}")


def evaluate(name: str, H: Hypergraph) -> dict:
    """Every evaluator relevant to the population, next to the oracle.

    Returns {"oracle": pd, evaluator: value, ...}; evaluators that do not
    apply are left out.
    """
    from .highpd import check_sharp, check_star, check_star_star
    from .oracle import pd_bruteforce
    from .reduce import (algpd_connected, cycle_closed_form, pd_cycle, pd_recursive,
                         pd_string, pd_unique_cycle)
    out = {"oracle": pd_bruteforce(H)}
    n = H.mu
    if name == "strings":
        out["pd_string"] = pd_string(H)
    elif name == "cycles":
        out["pd_cycle"] = pd_cycle(H)
        if not any(H.is_closed(u) and H.is_closed(v) for f in H.faces if len(f) == 2
                   for u, v in [tuple(f)]):
            out["cycle_closed_form"] = cycle_closed_form(H)
    elif name == "unicyclic":
        out["pd_unique_cycle"] = pd_unique_cycle(H)[0]
        out["algpd_connected"] = algpd_connected(H)[0]
        out["pd_recursive"] = pd_recursive(H)
    elif name in ("bipartite", "all"):
        p = out["oracle"]
        # the conditions are compared as truth values against the oracle pd
        out["star"] = (check_star(H)[0], p == n - 1)
        out["starstar"] = (check_star_star(H), p <= n - 2)
        sharp = check_sharp(H) is not None
        out["sharp"] = (sharp, p == n - 2) if name == "bipartite" else (sharp, sharp and p == n - 2)
        if name == "all":
            try:
                out["recursive"] = pd_recursive(H)
            except NeedsOracle:
                pass
    return out


def mismatches(record: dict) -> list[str]:
    bad = []
    oracle = record["oracle"]
    for key, val in record.items():
        if key == "oracle":
            continue
        if isinstance(val, tuple):
            if val[0] != val[1]:
                bad.append(key)
        elif val != oracle:
            bad.append(key)
    return bad


def _verify_one(job):
    name, mu, faces = job
    H = Hypergraph.from_faces(faces, mu=mu)
    try:
        rec = evaluate(name, H)
    except (UnsupportedShape, NeedsOracle) as exc:
        return mu, faces, None, str(exc)
    return mu, faces, rec, None


def cmd_verify(args) -> int:
    if args.population in ("strings", "cycles", "unicyclic", "bipartite") and args.max_vertices > 9:
        _out("population too large: --max-vertices must be at most 9")
        return EXIT_UNSUPPORTED
    if args.population == "all" and args.max_vertices > 4:
        _out("population too large: the any-dimension population is exhaustive only up to 4 vertices")
        return EXIT_UNSUPPORTED
    jobs = [(args.population, H.mu, [sorted(f) for f in H.faces])
            for H in population(args.population, args.max_vertices)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs, chunksize=64))
    else:
        results = [_verify_one(j) for j in jobs]
    checked = 0
    skipped = []
    found = []
    for mu, faces, rec, err in results:
        if rec is None:
            skipped.append((mu, faces, err))
            continue
        checked += 1
        bad = mismatches(rec)
        if bad:
            found.append((mu, faces, rec, bad))
    label = "counterexamples" if args.population == "bipartite" else "mismatches"
    _out(f"population={args.population} max_vertices={args.max_vertices} "
         f"instances={len(results)} checked={checked} skipped={len(skipped)} {label}={len(found)}")
    for mu, faces, rec, bad in found:
        _out(json.dumps({"mu": mu, "faces": sorted(faces), "failed": bad,
                         "values": {k: list(v) if isinstance(v, tuple) else v for k, v in rec.items()}}))
    for mu, faces, err in skipped[: args.show_skipped]:
        _out(json.dumps({"mu": mu, "faces": sorted(faces), "skipped": err}))
    return EXIT_MISMATCH if found else EXIT_OK


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .reduce import METHODS
    ap = argparse.ArgumentParser(prog="hpd", description="Projective dimension of dual hypergraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def instance(p):
        p.add_argument("file", help="instance file, '-' for stdin, or fixture:NAME")
        p.add_argument("--format", choices=FORMATS, default=None)
        p.add_argument("--zero-indexed", action="store_true", help="vertices in the file start at 0")

    p = sub.add_parser("pd", help="compute pd(H)")
    instance(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--trace", action="store_true", help="print reduction steps as json lines")
    p.add_argument("--json", action="store_true")
    p.add_argument("--fallback", choices=("oracle",), default=None)
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("check", help="evaluate a high-pd condition")
    instance(p)
    p.add_argument("--condition", choices=CONDITIONS, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="compare evaluators with the oracle on a population")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--population", choices=POPULATIONS, required=True)
    p.add_argument("--against", choices=("oracle",), default="oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--show-skipped", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="Betti numbers by brute-force homology")
    instance(p)
    p.add_argument("--char", default="2,32003", help="comma-separated characteristics")
    p.add_argument("--engine", choices=("nerve", "hochster"), default="nerve")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fixtures", help="list or dump the bundled examples")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--dump", metavar="NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "file", None) == "-":
        args.file = sys.stdin
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedShape as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except NeedsOracle as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OracleTooLarge as exc:
        print(f"oracle cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CharacteristicDisagreement as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())


__all__ = [
    "parse",
    "parse_hypergraph_text",
    "parse_ideal_text",
    "parse_json",
    "as_hypergraph",
    "to_text",
    "to_json",
    "check_condition",
    "population",
    "evaluate",
    "mismatches",
    "build_parser",
    "main",
]
