"""How often realization needs closure cells, and where geometric admissibility differs from Z-admissibility.

Closure cells are faces of admissible cells that are not themselves paths of
the complex.  Each one is reported as a diagnostic; this script tallies them
over seeded random digraphs.
"""

import argparse
import random
from collections import Counter

from pathhom.core import path_complex_of_digraph, random_digraph
from pathhom.linalg import Z
from pathhom.omega import build_omega
from pathhom.realization import build_realization, geometric_admissible


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--top-dim", type=int, default=3)
    ap.add_argument("--show", type=int, default=5, help="print this many example diagnostics")
    a = ap.parse_args()

    rng = random.Random(a.seed)
    with_closure = 0
    closure_by_dim = Counter()
    geo_differs = Counter()
    shown = 0
    for _ in range(a.count):
        pc = path_complex_of_digraph(random_digraph(rng, a.max_vertices, a.density), a.top_dim)
        oc = build_omega(pc, Z, a.top_dim)
        cc = build_realization(pc, oc)
        if cc.closure_cells:
            with_closure += 1
            for c in cc.closure_cells:
                closure_by_dim[c.dim] += 1
            for d in cc.diagnostics:
                if shown < a.show:
                    print(" ", d)
                    shown += 1
        for n in range(oc.top_dim + 1):
            if geometric_admissible(pc, n) != set(oc[n].admissible):
                geo_differs[n] += 1
    print(f"{with_closure}/{a.count} digraphs need closure cells; by dimension: {dict(sorted(closure_by_dim.items()))}")
    print(f"geometric vs Z-admissible sets differ (digraph count by degree): {dict(sorted(geo_differs.items()))}")


if __name__ == "__main__":
    main()
