"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 an enumeration cap refused the request.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import field as ff
from . import geometry as geo
from . import matroid as mt
from . import neighborly as nb
from . import resonance as rs
from . import schubert as sc
from .graphs import NeighborlyStructure

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    matroid: str | None = None
    field_spec: str = "2"
    cap_points: int = rs.DEFAULT_POINT_CAP
    cap_lines: int = geo.DEFAULT_LINE_CAP
    json: bool = False
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.cap_points <= 0 or self.cap_lines <= 0:
            raise ValueError("caps must be positive")


class UsageError(ValueError):
    pass


def _emit(cfg: RunConfig, data: dict, text: list[str]) -> None:
    if cfg.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(text))


def _vec(f: ff.Field, v) -> str:
    return ff.format_vector(f, v)


def _load(cfg: RunConfig) -> tuple[mt.Matroid, ff.Field]:
    return mt.load(cfg.matroid), ff.parse_field(cfg.field_spec)


# -- subcommands -------------------------------------------------------------------------

def cmd_catalog(cfg: RunConfig) -> int:
    entries = mt.catalog_entries()
    data = {"matroids": [m.to_json() for m in entries], "families": ["pencil(k)"]}
    text = [str(m) for m in entries] + ["pencil(k): one line of size k, for any k >= 3"]
    _emit(cfg, data, text)
    return EXIT_OK


def cmd_resonance(cfg: RunConfig) -> int:
    m, f = _load(cfg)
    k = cfg.params["stratum"]
    dims = rs.resonance_dims(m, f, k, cfg.cap_points)
    pts = sorted(p for p, d in dims.items() if d >= k + 1)
    data = {"matroid": m.name, "field": str(f), "stratum": k, "count": len(pts),
            "points": [{"weight": _vec(f, p), "depth": dims[p] - 1} for p in pts]}
    text = [_vec(f, p) for p in pts]
    if not cfg.json:
        print(f"# R_{k}({m.name}, {f}): {len(pts)} projective points", file=sys.stderr)
    _emit(cfg, data, text)
    return EXIT_OK


def cmd_zmap(cfg: RunConfig) -> int:
    m, f = _load(cfg)
    lam = ff.parse_vector(f, cfg.params["weight"], m.n)
    z = rs.z_of(m, f, lam)
    data = {"matroid": m.name, "field": str(f), "weight": _vec(f, lam), "dim": len(z),
            "basis": [_vec(f, v) for v in z], "gamma": None}
    text = [f"dim Z = {len(z)}", "basis:"] + [f"  {_vec(f, v)}" for v in z]
    if len(z) >= 2 and any(lam):
        g = rs.gamma_lambda(m, f, lam)
        data["gamma"] = g.format(m.labels)
        data["gamma_cliques"] = g.paper_format(m.labels)
        data["depth"] = len(z) - 1
        text += [f"Gamma_lambda = {g.format(m.labels)}  ({g.paper_format(m.labels)})", f"depth = {len(z) - 1}"]
    else:
        text.append("not resonant")
    _emit(cfg, data, text)
    return EXIT_OK


def _report_json(f: ff.Field, m: mt.Matroid, r: nb.ConstituentReport) -> dict:
    return {
        "structure": r.structure.format(m.labels),
        "cliques": r.structure.paper_format(m.labels),
        "essential": r.essential,
        "dim_K": r.dim_K,
        "dim_K0": r.dim_K0,
        "is_maximal": r.is_maximal,
        "linear": r.is_linear(f),
        "span_dim": r.span_dim(f),
        "strata": {str(k): [_vec(f, p) for p in sorted(v)] for k, v in sorted(r.strata.items())},
        "contained_in": [s.format(m.labels) for s in r.contained_in],
        "same_as": [s.format(m.labels) for s in r.same_as],
    }


def cmd_constituents(cfg: RunConfig) -> int:
    m, f = _load(cfg)
    reports = nb.constituents(m, f, cfg.cap_points, include_all=cfg.params.get("all", False))
    items = [_report_json(f, m, r) for r in reports]
    data = {"matroid": m.name, "field": str(f), "constituents": items}
    text = []
    for it in items:
        sizes = ", ".join(f"V_{k}: {len(v)}" for k, v in it["strata"].items())
        flags = [] if it["is_maximal"] else ["not maximal"]
        flags.append("linear" if it["linear"] else "nonlinear")
        text.append(f"{it['structure']:<28} dim K={it['dim_K']} K0={it['dim_K0']}  {sizes}  [{', '.join(flags)}]")
    text.append(f"{sum(r.is_maximal for r in reports)} maximal constituents")
    _emit(cfg, data, text)
    return EXIT_OK


def cmd_carrier(cfg: RunConfig) -> int:
    m, f = _load(cfg)
    g = NeighborlyStructure.parse(cfg.params["gamma"], m.n, m.labels)
    if not nb.is_neighborly(m, g):
        raise UsageError(f"{g.format(m.labels)} is not neighborly for {m.name}")
    ds, cx, car = geo.structure_carrier(m, f, g, cfg.cap_lines)
    hyp = geo.interpolate_hypersurface(car.points, cx.space, cfg.params.get("max_deg", 4), cfg.cap_points) \
        if car.points else None
    rep = geo.directrix_geometry_report(f, ds, m.n) if len(ds) >= 2 else None
    data = geo.carrier_json(f, car, hyp)
    data.update({
        "matroid": m.name, "field": str(f), "structure": g.format(m.labels),
        "directrices": [{"clique": m.fmt_set(d.block), "dim": d.dim, "basis": [_vec(f, v) for v in d.basis]}
                        for d in ds],
        "complex_size": len(cx),
    })
    text = [f"structure {g.format(m.labels)} in P(K0) of dimension {cx.space.dim}", "directrices:"]
    for d in ds:
        text.append(f"  D_{m.fmt_set(d.block)}: dim {d.dim}  " + " ".join(_vec(f, v) for v in d.basis))
    if rep is not None:
        data["directrix_report"] = {
            "pair_dims": {f"{a},{b}": v for (a, b), v in sorted(rep.pair_dims.items())},
            "points": [_vec(f, p) for p in rep.points],
            "points_span_dim": rep.points_span_dim,
            "collinear_on": {str(a): v for a, v in sorted(rep.collinear_on.items())},
        }
        text.append(f"pairwise intersection points: {len(rep.points)}, span dim {rep.points_span_dim}")
    text.append(f"line complex: {len(cx)} lines")
    text.append(f"carrier: {len(car.points)} points")
    for k in sorted(set(car.depth.values())):
        text.append(f"  depth {k}: {sum(1 for d in car.depth.values() if d == k)} points")
    if hyp is None:
        text.append("hypersurface: none up to the degree cap")
    else:
        flags = ("exact zero set" if hyp.exact else "zero set larger than carrier") + \
            (", vanishes on every rational point" if hyp.all_points else "")
        text.append(f"hypersurface: degree {hyp.degree}, solution space dim {hyp.dim} ({flags})")
        text.append(f"  {hyp.format(f)}")
    _emit(cfg, data, text)
    return EXIT_OK


def _parse_codims(text: str) -> list[int]:
    text = text.strip().strip("[]")
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"cannot parse codimension list {text!r}") from None


def cmd_schubert(cfg: RunConfig) -> int:
    k = cfg.params["k"]
    data: dict = {"k": k}
    text = []
    if cfg.params.get("expr"):
        cls = sc.evaluate(cfg.params["expr"], k)
        data["expr"] = cfg.params["expr"]
        data["class"] = {f"W({a},{b})": c for (a, b), c in cls.coeffs}
        data["class_str"] = str(cls)
        text.append(str(cls))
    if cfg.params.get("degree"):
        codims_s, depth_s = cfg.params["degree"]
        try:
            depth = int(depth_s)
        except ValueError:
            raise UsageError(f"depth must be an integer, got {depth_s!r}") from None
        res = sc.carrier_degree(k, _parse_codims(codims_s), depth)
        data["degree"] = {"degree": res.degree, "s": res.s, "sigma": list(res.sigma),
                          "expansions": [str(e) for e in res.expansions], "proper_asserted": True}
        text += [f"s = {res.s}, sigma = W{res.sigma}"] + [f"  {e}" for e in res.expansions]
        text.append(f"degree = {res.degree} (assuming a proper intersection)")
        if res.note:
            text.append(res.note)
    if len(data) == 1:
        raise UsageError("schubert needs --expr and/or --degree")
    _emit(cfg, data, text)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    m, f = _load(cfg)
    k = cfg.params["k"]
    rep = nb.verify_decomposition(m, f, k, cfg.cap_points)
    bad_carriers = []
    for g in nb.enumerate_neighborly(m, f):
        V = nb.v_stratum(m, f, g, 1, cfg.cap_points)
        if nb.k_space(m, f, g).dim_K0 == 0:
            if V:
                bad_carriers.append(g.format(m.labels))
            continue
        _, _, car = geo.structure_carrier(m, f, g, cfg.cap_lines)
        if car.points != V:
            bad_carriers.append(g.format(m.labels))
    ok = rep.equal and not bad_carriers
    data = {"matroid": m.name, "field": str(f), "k": k, "decomposition_equal": rep.equal,
            "resonance_points": len(rep.resonance), "union_points": len(rep.union),
            "missing": [_vec(f, p) for p in sorted(rep.missing)],
            "extra": [_vec(f, p) for p in sorted(rep.extra)],
            "carrier_mismatches": bad_carriers, "ok": ok}
    text = [
        f"R_{k}: {len(rep.resonance)} points, union of V_{k}(Gamma): {len(rep.union)} points -> "
        + ("equal" if rep.equal else f"{len(rep.missing)} missing, {len(rep.extra)} extra"),
        "carriers equal V(Gamma) for every structure" if not bad_carriers
        else "carrier mismatch: " + ", ".join(bad_carriers),
        "OK" if ok else "MISMATCH",
    ]
    _emit(cfg, data, text)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "catalog": cmd_catalog, "resonance": cmd_resonance, "zmap": cmd_zmap,
    "constituents": cmd_constituents, "carrier": cmd_carrier, "schubert": cmd_schubert,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="modres", description="Resonance varieties of matroids over finite fields.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, matroid=True):
        if matroid:
            sp.add_argument("matroid", help="catalog name or path to a matroid JSON file")
            sp.add_argument("--field", default="2", help="p or p^e (default 2)")
        sp.add_argument("--cap-points", type=int, default=rs.DEFAULT_POINT_CAP)
        sp.add_argument("--cap-lines", type=int, default=geo.DEFAULT_LINE_CAP)
        sp.add_argument("--json", action="store_true", help="emit JSON")

    common(sub.add_parser("catalog", help="list built-in matroids"), matroid=False)
    sp = sub.add_parser("resonance", help="points of R_k by brute force")
    common(sp)
    sp.add_argument("--stratum", type=int, default=1)
    sp = sub.add_parser("zmap", help="Z(lambda), its dimension and Gamma_lambda")
    common(sp)
    sp.add_argument("--weight", required=True)
    sp = sub.add_parser("constituents", help="maximal V(Gamma) over enumerated structures")
    common(sp)
    sp.add_argument("--all", action="store_true", help="include non-maximal constituents")
    sp = sub.add_parser("carrier", help="directrices, line complex and carrier of a structure")
    common(sp)
    sp.add_argument("--gamma", required=True, help="e.g. 127|3|4|5|6 or '145|2|3|6|8 cones=7'")
    sp.add_argument("--max-deg", type=int, default=4)
    sp = sub.add_parser("schubert", help="Pieri products and carrier degrees in G(2,k)")
    common(sp, matroid=False)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--expr", help='e.g. "s(1)^4 * s(2)"')
    sp.add_argument("--degree", nargs=2, metavar=("CODIMS", "DEPTH"), help='e.g. --degree 1,1,1,1 1')
    sp = sub.add_parser("verify", help="decomposition and carrier oracles")
    common(sp)
    sp.add_argument("--k", type=int, default=1)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    skip = {"command", "matroid", "field", "cap_points", "cap_lines", "json"}
    params = {k: v for k, v in vars(ns).items() if k not in skip}
    return RunConfig(ns.command, getattr(ns, "matroid", None), getattr(ns, "field", "2"),
                     ns.cap_points, ns.cap_lines, ns.json, params)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except rs.CapExceeded as exc:
        print(f"modres: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError) as exc:
        # FieldError, MatroidError, SchubertError, ResonanceError and UsageError are ValueErrors
        print(f"modres: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
