"""Census of resonance over the catalog: |R_1|, |R_2|, constituents, timings.

    python scripts/resonance_census.py --fields 2 3 5 --out census.json
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from modres import field as ff
from modres import neighborly as nb
from modres import resonance as rs
from modres.matroid import catalog


@dataclass
class CensusConfig:
    matroids: list[str] = field(default_factory=lambda: ["braid", "nonfano", "deletedB3", "hessian",
                                                         "pencil(3)", "pencil(4)", "pencil(5)"])
    fields: list[str] = field(default_factory=lambda: ["2", "3", "5"])
    cap_points: int = 10**8


@dataclass
class CensusRow:
    matroid: str
    field: str
    r1: int
    r2: int
    structures: int
    maximal: int
    essential: int
    nonlinear: int
    decomposition_equal: bool
    seconds: float


def census(cfg: CensusConfig) -> list[CensusRow]:
    rows = []
    for name in cfg.matroids:
        m = catalog(name)
        for spec in cfg.fields:
            f = ff.parse_field(spec)
            t0 = time.perf_counter()
            r1 = rs.enumerate_resonance(m, f, 1, cfg.cap_points)
            r2 = rs.enumerate_resonance(m, f, 2, cfg.cap_points)
            gs = nb.enumerate_neighborly(m, f)
            cs = nb.constituents(m, f, cfg.cap_points)
            union = set().union(*(r.points for r in cs)) if cs else set()
            rows.append(CensusRow(
                name, str(f), len(r1), len(r2), len(gs), len(cs),
                sum(1 for r in cs if r.essential), sum(1 for r in cs if not r.is_linear(f)),
                union == r1, round(time.perf_counter() - t0, 2)))
            print(rows[-1])
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--matroids", nargs="+")
    ap.add_argument("--fields", nargs="+")
    ap.add_argument("--cap-points", type=int)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = CensusConfig()
    for key in ("matroids", "fields", "cap_points"):
        if getattr(args, key) is not None:
            setattr(cfg, key, getattr(args, key))
    rows = census(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
