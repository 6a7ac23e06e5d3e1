"""Command-line interface: ``nakayama-cy <command> ...``.

Exit codes: 0 success, 1 verification discrepancy, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from . import homspace
from .algebra import AlgebraParams, IndecModule, StableObject, shift_order_global
from .classify import (
    ClassificationResult,
    category_report,
    cy_dimension,
    cy_params,
    minimal_cy_modules,
)
from .orbits import all_orbits
from .verify import CHECKS, SCHEMA_VERSION, verify_point

CACHE_ENV = "NAKAYAMA_CY_CACHE"
DEFAULT_CACHE = "cy-cache.jsonl"

CSV_COLUMNS = {
    "classify": ["n", "t", "d", "case_tag", "bigN", "object", "summands", "cy_dimension"],
    "category": ["n", "t", "is_cy_category", "cydim", "witness_m", "module", "cy_dimension"],
    "cydim": ["n", "t", "object", "cy_dimension"],
    "orbits": ["n", "t", "d", "representative", "size", "elements"],
    "homcheck": ["n", "t", "field", "X", "Y", "passed"],
}


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    params: dict
    payload: dict
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls(**json.loads(text))


# ---------------------------------------------------------------------------
# payloads


def _obj_payload(X: StableObject) -> dict:
    return {"text": str(X), "summands": [list(x) for x in X], "count": len(X)}


def classify_payload(result: ClassificationResult) -> dict:
    A = result.algebra
    params = cy_params(A, result.d)
    objects = []
    for M in result.minimal_objects:
        entry = _obj_payload(M)
        entry["cy_dimension"] = cy_dimension(A, M)
        objects.append(entry)
    return {"case_tag": result.case_tag, "bigN": result.bigN, "dt": str(params.dt), "objects": objects}


def classification_from_record(record: OutputRecord) -> ClassificationResult:
    """Rebuild a :class:`ClassificationResult` from a ``classify`` record."""
    p = record.params
    objs = [StableObject(IndecModule(*x) for x in o["summands"]) for o in record.payload["objects"]]
    return ClassificationResult(
        AlgebraParams(p["n"], p["t"]), p["d"], record.payload["case_tag"], record.payload["bigN"], objs
    )


def category_payload(A: AlgebraParams) -> dict:
    rep = category_report(A)
    return {
        "is_cy_category": rep.is_cy_category,
        "cydim": rep.cydim,
        "witness_m": rep.witness_m,
        "naturality_checked": rep.naturality_checked,
        "o_shift": shift_order_global(A),
        "indecomposable_cy": [{"module": list(X), "text": str(X), "cy_dimension": d} for X, d in rep.indecomposable_cy],
        "decomposable_minimal_cy_case_ii": [_obj_payload(M) for M in rep.decomposable_minimal_cy_case_ii],
    }


def parse_object_spec(A: AlgebraParams, spec: str) -> StableObject:
    """Parse ``"i,l;i,l;..."``; indices must already be in range."""
    summands = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            i, l = (int(x) for x in part.split(","))
        except ValueError:
            raise UsageError(f"malformed summand {part!r}; expected 'i,l'") from None
        if not 0 <= i < A.n:
            raise UsageError(f"vertex index {i} out of range [0, {A.n - 1}]")
        if not 1 <= l <= A.t - 1:
            raise UsageError(f"Loewy length {l} out of range [1, {A.t - 1}]")
        summands.append(IndecModule(i, l))
    if not summands:
        raise UsageError("empty object spec")
    return StableObject(summands)


# ---------------------------------------------------------------------------
# rendering


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[("-" if c is None else str(c)) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def _csv(command: str, rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS[command], lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r)
    return buf.getvalue().rstrip("\n")


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return record.to_json()
    cmd, p, pl = record.command, record.params, record.payload
    n, t = p["n"], p["t"]
    if cmd == "classify":
        if fmt == "csv":
            rows = [
                dict(n=n, t=t, d=p["d"], case_tag=pl["case_tag"], bigN=pl["bigN"], object=o["text"],
                     summands=o["count"], cy_dimension=o["cy_dimension"])
                for o in pl["objects"]
            ]
            return _csv(cmd, rows)
        head = f"Lambda({n},{t})  d={p['d']}  case={pl['case_tag']}  N={pl['bigN']}  d(t)={pl['dt']}"
        rows = [[o["text"], o["count"], o["cy_dimension"]] for o in pl["objects"]]
        return head + "\n" + _table(rows, ["object", "summands", "cydim"])
    if cmd == "category":
        if fmt == "csv":
            rows = [
                dict(n=n, t=t, is_cy_category=pl["is_cy_category"], cydim=pl["cydim"], witness_m=pl["witness_m"],
                     module=e["text"], cy_dimension=e["cy_dimension"])
                for e in pl["indecomposable_cy"]
            ]
            return _csv(cmd, rows)
        lines = [f"Lambda({n},{t})  o([1])={pl['o_shift']}"]
        if pl["is_cy_category"]:
            lines.append(f"Calabi-Yau category of CY dimension {pl['cydim']}"
                         f" (m={pl['witness_m']}, naturality on irreducible maps: {'ok' if pl['naturality_checked'] else 'FAILED'})")
        else:
            lines.append("not a Calabi-Yau category")
        if pl["indecomposable_cy"]:
            lines.append("indecomposable CY modules:")
            lines.append(_table([[e["text"], e["cy_dimension"]] for e in pl["indecomposable_cy"]], ["module", "cydim"]))
        else:
            lines.append("no indecomposable CY modules")
        if pl["decomposable_minimal_cy_case_ii"]:
            lines.append(f"decomposable minimal {2 * pl['witness_m']}-CY modules:")
            lines.extend("  " + o["text"] for o in pl["decomposable_minimal_cy_case_ii"])
        return "\n".join(lines)
    if cmd == "cydim":
        value = pl["cy_dimension"]
        if fmt == "csv":
            return _csv(cmd, [dict(n=n, t=t, object=pl["text"], cy_dimension=value)])
        return str(value) if value is not None else "not Calabi-Yau"
    if cmd == "orbits":
        if fmt == "csv":
            rows = [
                dict(n=n, t=t, d=p["d"], representative=o["representative"], size=o["size"], elements="+".join(o["elements"]))
                for o in pl["orbits"]
            ]
            return _csv(cmd, rows)
        head = f"Lambda({n},{t})  d={p['d']}  {len(pl['orbits'])} orbits"
        rows = [[o["representative"], o["size"], " -> ".join(o["elements"])] for o in pl["orbits"]]
        return head + "\n" + _table(rows, ["representative", "size", "orbit"])
    if cmd == "homcheck":
        mods, matrix = pl["modules"], pl["matrix"]
        if fmt == "csv":
            rows = [
                dict(n=n, t=t, field=pl["field"], X=mods[a], Y=mods[b], passed=matrix[a][b])
                for a in range(len(mods)) for b in range(len(mods))
            ]
            return _csv(cmd, rows)
        width = max(len(m) for m in mods)
        lines = [f"Lambda({n},{t})  Serre duality over {pl['field']}: rows X, columns Y ('.' pass, 'X' fail)"]
        for a, m in enumerate(mods):
            lines.append(m.ljust(width) + "  " + "".join("." if ok else "X" for ok in matrix[a]))
        lines.append("all pass" if pl["all_pass"] else "FAILURES")
        return "\n".join(lines)
    raise ValueError(cmd)


# ---------------------------------------------------------------------------
# commands


def _algebra(args) -> AlgebraParams:
    try:
        return AlgebraParams(args.n, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_classify(args) -> tuple[OutputRecord, int]:
    A = _algebra(args)
    result = minimal_cy_modules(A, args.d)
    return OutputRecord("classify", {"n": A.n, "t": A.t, "d": result.d}, classify_payload(result)), 0


def cmd_category(args) -> tuple[OutputRecord, int]:
    A = _algebra(args)
    return OutputRecord("category", {"n": A.n, "t": A.t, "d": None}, category_payload(A)), 0


def cmd_cydim(args) -> tuple[OutputRecord, int]:
    A = _algebra(args)
    X = parse_object_spec(A, args.object)
    payload = _obj_payload(X)
    payload["cy_dimension"] = cy_dimension(A, X)
    return OutputRecord("cydim", {"n": A.n, "t": A.t, "d": None}, payload), 0


def cmd_orbits(args) -> tuple[OutputRecord, int]:
    A = _algebra(args)
    orbs = [
        {"representative": str(o.representative), "size": len(o), "elements": [str(x) for x in o.elements]}
        for o in all_orbits(A, args.d)
    ]
    return OutputRecord("orbits", {"n": A.n, "t": A.t, "d": args.d}, {"orbits": orbs}), 0


def cmd_homcheck(args) -> tuple[OutputRecord, int]:
    A = _algebra(args)
    ind = A.indecomposables()
    p = args.prime
    if p is not None and (p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1))):
        raise UsageError(f"--prime must be a prime, got {p}")
    matrix = [[homspace.serre_duality_check(A, X, Y, p) for Y in ind] for X in ind]
    ok = all(all(r) for r in matrix)
    payload = {
        "field": "Q" if p is None else f"GF({p})",
        "modules": [str(X) for X in ind],
        "matrix": matrix,
        "all_pass": ok,
    }
    return OutputRecord("homcheck", {"n": A.n, "t": A.t, "d": None}, payload), 0 if ok else 1


def _cache_path(args) -> Path:
    return Path(args.cache or os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def load_cache(path: Path) -> dict[tuple[int, int, int], dict]:
    out = {}
    if not path.exists():
        return out
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue
            if rec.get("schema_version") == SCHEMA_VERSION:
                out[(rec["n"], rec["t"], rec["d"])] = rec
    return out


def _verify_job(job):
    n, t, degrees, hom_max = job
    return verify_point(n, t, degrees, hom_max)


def cmd_verify(args) -> int:
    if args.n_max < 1 or args.t_max < 2 or args.jobs < 1 or args.hom_max < 0:
        raise UsageError("need --n-max >= 1, --t-max >= 2, --jobs >= 1, --hom-max >= 0")
    path = _cache_path(args)
    cached = load_cache(path)
    jobs = []
    for n in range(1, args.n_max + 1):
        for t in range(2, args.t_max + 1):
            o = shift_order_global(AlgebraParams(n, t))
            todo = [d for d in range(o) if (n, t, d) not in cached]
            if todo:
                jobs.append((n, t, todo, args.hom_max))

    records: dict[tuple[int, int, int], dict] = dict(cached)
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(_verify_job, jobs, chunksize=1)
            _append_results(path, results, records)
    else:
        _append_results(path, map(_verify_job, jobs), records)

    points = [
        (n, t, d)
        for n in range(1, args.n_max + 1)
        for t in range(2, args.t_max + 1)
        for d in range(shift_order_global(AlgebraParams(n, t)))
    ]
    bad = [records[k] for k in points if records[k]["discrepancies"]]
    n_cached = sum(1 for k in points if k in cached)
    check_counts = {c: sum(1 for k in points if records[k].get(c) is not None) for c in CHECKS}
    print(f"verified {len(points)} points ({n_cached} from cache {path})")
    print("checks run: " + ", ".join(f"{c}={check_counts[c]}" for c in CHECKS))
    n_disc = sum(len(r["discrepancies"]) for r in bad)
    print(f"{n_disc} discrepancies")
    if bad:
        first = bad[0]
        print(f"first counterexample at n={first['n']} t={first['t']} d={first['d']}: {first['discrepancies'][0]}")
        return 1
    return 0


def _append_results(path: Path, results, records: dict) -> None:
    # single writer: only the parent process touches the cache file
    with path.open("a") as fh:
        for batch in results:
            for rec in batch:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
                records[(rec["n"], rec["t"], rec["d"])] = rec
            fh.flush()


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama-cy",
        description="Calabi-Yau objects of the stable categories of self-injective Nakayama algebras Lambda(n,t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_args(p, with_format=True):
        p.add_argument("--n", type=int, required=True, help="number of vertices of the cyclic quiver")
        p.add_argument("--t", type=int, required=True, help="Loewy length of the projectives")
        if with_format:
            p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("classify", help="minimal d-CY objects")
    algebra_args(p)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("category", help="CY category test and indecomposable CY modules")
    algebra_args(p)

    p = sub.add_parser("cydim", help="CY dimension of an object")
    algebra_args(p)
    p.add_argument("--object", required=True, help='summands as "i,l;i,l;..."')

    p = sub.add_parser("orbits", help="G_d-orbit partition of the indecomposables")
    algebra_args(p)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("homcheck", help="Serre duality on stable Hom dimensions")
    algebra_args(p)
    p.add_argument("--prime", type=int, default=None, help="work over GF(prime) instead of Q")

    p = sub.add_parser("verify", help="sweep every cross-check over a parameter box")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--hom-max", type=int, default=8, help="largest n and t for the exact Hom-space checks")
    p.add_argument("--cache", default=None, help=f"cache file (default ${CACHE_ENV} or ./{DEFAULT_CACHE})")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "category": cmd_category,
    "cydim": cmd_cydim,
    "orbits": cmd_orbits,
    "homcheck": cmd_homcheck,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        record, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"nakayama-cy {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(render(record, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
