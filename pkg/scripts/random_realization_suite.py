"""Realization isomorphism over several rings on seeded random digraphs."""

import argparse
import random
import time
from dataclasses import dataclass

from pathhom.core import path_complex_of_digraph, random_digraph
from pathhom.linalg import RingSpec
from pathhom.realization import verify_realization_isomorphism


@dataclass
class SuiteConfig:
    count: int = 200
    seed: int = 0
    max_vertices: int = 6
    density: float = 0.3
    top_dim: int = 3
    rings: tuple = ("Z", "Q", "Zp:2")


def run(cfg: SuiteConfig) -> int:
    rng = random.Random(cfg.seed)
    rings = [RingSpec.parse(r) for r in cfg.rings]
    bad = 0
    t0 = time.perf_counter()
    for i in range(cfg.count):
        pc = path_complex_of_digraph(random_digraph(rng, cfg.max_vertices, cfg.density), cfg.top_dim + 2)
        for ring in rings:
            rep = verify_realization_isomorphism(pc, ring, cfg.top_dim)
            if not rep.ok:
                bad += 1
                print(f"digraph {i} over {ring}: {rep.mismatches()}")
    print(f"{cfg.count} digraphs x {len(rings)} rings: {bad} mismatches in {time.perf_counter() - t0:.1f}s")
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--top-dim", type=int, default=3)
    ap.add_argument("--rings", nargs="+", default=["Z", "Q", "Zp:2"])
    a = ap.parse_args()
    cfg = SuiteConfig(a.count, a.seed, a.max_vertices, a.density, a.top_dim, tuple(a.rings))
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
