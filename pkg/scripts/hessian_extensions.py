"""The Hessian constituent over GF(3^e): point counts and the cubic.

Over GF(3) the carrier of 123|456|789|abc is the zero set of a cubic in
P^4.  Rational points over larger fields are evidence (not proof) that the
same cubic cuts out the constituent over the algebraic closure: the script
interpolates over GF(3), then checks that the constituent over GF(3^e)
is exactly the zero set of that form among the points of P(K0).

    python scripts/hessian_extensions.py --degrees 1 2
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from modres import field as ff
from modres import geometry as geo
from modres import neighborly as nb
from modres.graphs import NeighborlyStructure
from modres.matroid import catalog
from modres.resonance import embedding


@dataclass
class HessianConfig:
    degrees: list[int] = field(default_factory=lambda: [1, 2])
    structure: str = "123|456|789|abc"
    cap_points: int = 10**6


def run(cfg: HessianConfig) -> None:
    m = catalog("hessian")
    g = NeighborlyStructure.parse(cfg.structure, m.n)
    f3 = ff.make_field(3)
    _, cx, car = geo.structure_carrier(m, f3, g)
    cubic = geo.interpolate_hypersurface(car.points, cx.space, max_deg=3)
    print(f"GF(3): cubic {cubic.format(f3)}")
    for e in cfg.degrees:
        t0 = time.perf_counter()
        f = ff.make_field(3, e)
        space = geo.ambient_space(m, f, g)
        if space.count_points() > cfg.cap_points:
            print(f"GF(3^{e}): P^{space.dim} has {space.count_points()} points, above the cap; skipped")
            continue
        depths = nb.v_depths(m, f, g, cfg.cap_points)
        emb = embedding(f3, f)
        coeffs = [emb[c] for c in cubic.coeffs]
        # K0 over GF(3) has a basis defined over the prime field, so local coordinates agree
        zeros = {p for p in space.points(cfg.cap_points)
                 if geo.evaluate(f, cubic.monomials, coeffs, space.coords(p)) == 0}
        hist: dict[int, int] = {}
        for d in depths.values():
            hist[d] = hist.get(d, 0) + 1
        print(f"GF(3^{e}): |V| = {len(depths)}, depth histogram {dict(sorted(hist.items()))}, "
              f"V equals the cubic's zero set: {set(depths) == zeros}  ({time.perf_counter() - t0:.1f}s)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", nargs="+", type=int)
    ap.add_argument("--cap-points", type=int)
    args = ap.parse_args()
    cfg = HessianConfig()
    if args.degrees:
        cfg.degrees = args.degrees
    if args.cap_points:
        cfg.cap_points = args.cap_points
    run(cfg)


if __name__ == "__main__":
    main()
