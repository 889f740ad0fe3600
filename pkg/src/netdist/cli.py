"""Command-line front end: distance queries, geodesic paths, oracle
cross-checks, SVG rendering and a small benchmark.

Queries are JSON records, one per line in batch mode:

    {"polyhedron": "cube",
     "p1": {"home": "F1", "shared": "F2", "x": 0.5, "y": 0.1},
     "p2": {"home": "F6", "shared": "F2", "x": 0.9, "y": 0.5}}

Exit codes: 0 success, 2 parse/validation error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .model import CUBE, SQRT3, TETRAHEDRON, DomainError, InternalError, build_model
from .coords import SurfacePoint, validate_point
from .distance import geodesics, surface_distance
from .oracle import mesh_distance, unfold_distance
from .svgout import render_svg


class QueryError(ValueError):
    """A query record failed to parse or validate."""


@dataclass
class Query:
    polyhedron: str
    p1: SurfacePoint
    p2: SurfacePoint


def _face(value, field: str, face_count: int) -> int:
    if not isinstance(value, str) or not value.startswith("F"):
        raise QueryError(f"{field}: face label must look like 'F1', got {value!r}")
    try:
        num = int(value[1:])
    except ValueError:
        raise QueryError(f"{field}: face label must look like 'F1', got {value!r}") from None
    if not 1 <= num <= face_count:
        raise QueryError(f"{field}: face index {num} outside 1..{face_count}")
    return num


def _number(value, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise QueryError(f"{field}: expected a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise QueryError(f"{field}: number must be finite")
    return v


def _point(record, field: str, model) -> SurfacePoint:
    if not isinstance(record, dict):
        raise QueryError(f"{field}: expected an object")
    missing = {"home", "shared", "x", "y"} - record.keys()
    if missing:
        raise QueryError(f"{field}: missing keys {sorted(missing)}")
    p = SurfacePoint(
        _face(record["home"], f"{field}.home", model.face_count),
        _face(record["shared"], f"{field}.shared", model.face_count),
        _number(record["x"], f"{field}.x"),
        _number(record["y"], f"{field}.y"),
    )
    msg = validate_point(model, p)
    if msg is not None:
        raise QueryError(f"{field}: {msg}")
    return p


def parse_query(text) -> Query:
    """Parse one record (JSON text or an already-decoded dict)."""
    if isinstance(text, str):
        try:
            record = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QueryError(f"record is not valid JSON: {exc}") from None
    else:
        record = text
    if not isinstance(record, dict):
        raise QueryError("record must be a JSON object")
    kind = record.get("polyhedron")
    if kind not in (TETRAHEDRON, CUBE):
        raise QueryError(
            f"polyhedron: expected 'tetrahedron' or 'cube', got {kind!r}")
    model = build_model(kind)
    return Query(kind, _point(record.get("p1"), "p1", model),
                 _point(record.get("p2"), "p2", model))


def _faces_json(faces) -> list[str]:
    return [f"F{f}" for f in faces]


def run_query(query: Query, mode: str, tolerance: float = 1e-9,
              max_faces: int = 6, mesh_n: int = 64,
              diagnostics: bool = False) -> dict:
    """Execute one query; returns the output record for one JSON line."""
    model = build_model(query.polyhedron)
    if mode in ("path", "svg"):
        res = geodesics(model, query.p1, query.p2, tolerance)
    else:
        res = surface_distance(model, query.p1, query.p2, tolerance)

    out: dict = {
        "distance": res.distance,
        "minimizers": [
            {"id": m.ident, "faces": _faces_json(m.faces)} for m in res.minimizers
        ],
    }
    if mode in ("path", "svg"):
        out["paths"] = [
            [
                {
                    "face": f"F{s.face}",
                    "x1": s.start[0], "y1": s.start[1],
                    "x2": s.end[0], "y2": s.end[1],
                }
                for s in segs
            ]
            for segs in res.geodesics
        ]
    if mode == "oracle":
        max_faces = min(max_faces, model.face_count)
        u, argmin = unfold_distance(model, query.p1, query.p2, max_faces, tolerance)
        m = mesh_distance(model, query.p1, query.p2, mesh_n)
        out["oracle_unfold"] = u
        out["oracle_unfold_argmin"] = [_faces_json(p) for p in argmin]
        out["oracle_mesh"] = m
        out["delta_unfold"] = u - res.distance
        out["delta_mesh"] = m - res.distance
    if diagnostics:
        out["diagnostics"] = dict(sorted(res.values.items(),
                                         key=lambda kv: _ident_rank(kv[0])))
    return out


def _ident_rank(ident: str) -> int:
    return 0 if ident == "SAME_FACE" else int(ident[1:])


def _records(args) -> list[str]:
    if args.query is not None:
        return [args.query]
    if args.input is not None:
        lines = Path(args.input).read_text(encoding="utf-8").splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    return [line for line in lines if line.strip()]


def _emit(args, lines: list[str]) -> None:
    text = "".join(line + "\n" for line in lines)
    if args.out is not None:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _run_bench(args) -> int:
    model = build_model(args.polyhedron)
    rng = random.Random(args.seed)

    def rand_point() -> SurfacePoint:
        home = rng.choice(model.faces)
        shared = rng.choice(model.neighbors_ccw(home))
        while True:
            x, y = rng.random(), rng.random()
            if model.kind == CUBE or y <= SQRT3 * min(x, 1.0 - x):
                return SurfacePoint(home, shared, x, y)

    pairs = [(rand_point(), rand_point()) for _ in range(args.count)]
    t0 = time.perf_counter()
    acc = 0.0
    for p1, p2 in pairs:
        acc += surface_distance(model, p1, p2).distance
    dt = time.perf_counter() - t0
    print(json.dumps({
        "polyhedron": args.polyhedron,
        "count": args.count,
        "seconds": round(dt, 6),
        "queries_per_second": round(args.count / dt, 1),
        "mean_distance": acc / args.count,
    }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netdist",
        description="surface geodesic distances on unit tetrahedra and cubes",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    for name, help_text in (
        ("dist", "surface distance and minimizing face paths"),
        ("path", "distance plus reconstructed per-face geodesic segments"),
        ("oracle", "distance cross-checked against both oracles"),
        ("svg", "render minimizing unfoldings with the geodesic overlay"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("query", nargs="?", default=None,
                        help="single JSON query record")
        sp.add_argument("--input", type=Path, default=None,
                        help="batch file, one JSON record per line")
        sp.add_argument("--out", type=Path, default=None,
                        help="output file (default stdout)")
        sp.add_argument("--tolerance", type=float, default=1e-9,
                        help="tie tolerance for minimizers")
        if name != "svg":
            sp.add_argument("--diagnostics", action="store_true",
                            help="include per-face-path formula values")
        if name == "oracle":
            sp.add_argument("--max-faces", type=int, default=6,
                            help="face-path length bound for the honest search")
            sp.add_argument("--mesh-n", type=int, default=64,
                            help="mesh refinement for the Dijkstra oracle")
    bench = sub.add_parser("bench", help="time the closed-form dispatcher")
    bench.add_argument("--polyhedron", choices=(TETRAHEDRON, CUBE), default=CUBE)
    bench.add_argument("--count", type=int, default=1000)
    bench.add_argument("--seed", type=int, default=0)
    return parser


def _run_svg(args, queries: list[Query]) -> int:
    docs = []
    for query in queries:
        model = build_model(query.polyhedron)
        res = geodesics(model, query.p1, query.p2, args.tolerance)
        docs.append(render_svg(model, res))
    if args.out is None:
        if len(docs) > 1:
            raise QueryError("batch svg output needs --out")
        sys.stdout.write(docs[0])
        return 0
    if len(docs) == 1:
        Path(args.out).write_text(docs[0], encoding="utf-8")
        return 0
    for i, doc in enumerate(docs):
        target = args.out.with_name(f"{args.out.stem}-{i:03d}{args.out.suffix}")
        target.write_text(doc, encoding="utf-8")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.mode == "bench":
            return _run_bench(args)
        queries = [parse_query(text) for text in _records(args)]
        if not queries:
            raise QueryError("no query records supplied")
        if args.mode == "svg":
            return _run_svg(args, queries)
        lines = []
        for query in queries:
            out = run_query(
                query, args.mode,
                tolerance=args.tolerance,
                max_faces=getattr(args, "max_faces", 6),
                mesh_n=getattr(args, "mesh_n", 64),
                diagnostics=getattr(args, "diagnostics", False),
            )
            lines.append(json.dumps(out))
        _emit(args, lines)
        return 0
    except (QueryError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
