"""Hochschild (co)homology of A_S next to simplicial and path (co)homology.

Prints the comparison table for a few small complexes, plus the two
degree-0 invariants that explain the outcome: the centre of A_S (which gives
HH^0) and the commutator quotient A/[A,A] (which gives HH_0).
"""

import argparse

from pathhom.cli import format_comparison
from pathhom.core import BudgetExceeded
from pathhom.hochschild import SimplicialComplex, verify_hochschild_comparison
from pathhom.linalg import RingSpec

COMPLEXES = {
    "point": [["p"]],
    "edge": [["a", "b"]],
    "triangle boundary": [["a", "b"], ["b", "c"], ["a", "c"]],
    "two points": [["a"], ["b"]],
    "filled triangle": [["a", "b", "c"]],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ring", default="Q")
    ap.add_argument("--max-deg", type=int, default=3)
    a = ap.parse_args()
    ring = RingSpec.parse(a.ring)
    for name, facets in COMPLEXES.items():
        s = SimplicialComplex.from_facets(facets)
        print(f"== {name}")
        try:
            print(format_comparison(verify_hochschild_comparison(s, ring, a.max_deg), "simplicial", "other"), end="")
        except BudgetExceeded as exc:
            print(f"  skipped: {exc}")


if __name__ == "__main__":
    main()
