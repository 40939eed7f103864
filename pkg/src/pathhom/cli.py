"""Command-line front end.

Exit codes: 0 success, 1 a check found a mismatch, 2 bad input (parse
error, unsupported ring, overlapping join vertices), 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .core import BudgetExceeded, Digraph, PathComplex, default_budget, path_complex_of_digraph, random_digraph
from .hochschild import (RingNotSupported, SimplicialComplex, build_A_S, center_dimension, commutator_quotient_dimension,
                         cubical_digraph, hochschild_cohomology, hochschild_homology, verify_hochschild_comparison)
from .homology import cohomology_of_complex, homology_of_complex
from .io import ParseError, dump_json, read_structure, write_structure
from .linalg import RingSpec, Z
from .omega import NonRegularComplex, build_omega
from .product_join import NonDisjointVertices, cartesian_product, join, verify_kunneth
from .realization import ComparisonReport, build_realization, verify_realization_isomorphism

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DIGRAPH_TOP_DIM_CAP = 3


class InputError(ValueError):
    pass


@dataclass
class JobConfig:
    ring: RingSpec = Z
    top_dim: Optional[int] = None
    inputs: List[str] = field(default_factory=list)
    format: str = "text"
    seed: int = 0
    budget: int = field(default_factory=default_budget)
    max_deg: int = 3
    out: Optional[str] = None

    def __post_init__(self):
        if self.top_dim is not None and self.top_dim < 0:
            raise InputError("--top-dim must be >= 0")
        if self.budget <= 0:
            raise InputError("--budget must be positive")
        if self.max_deg < 0:
            raise InputError("--max-deg must be >= 0")
        if self.format not in ("text", "json"):
            raise InputError("--format is text or json")


def _top_for(struct, cfg: JobConfig) -> int:
    if cfg.top_dim is not None:
        return cfg.top_dim
    if isinstance(struct, PathComplex):
        return max(struct.top, 0)
    return min(max(len(struct.vertex_set) - 1, 0), DIGRAPH_TOP_DIM_CAP)


def as_path_complex(struct, cfg: JobConfig, extra: int = 1) -> PathComplex:
    """Digraphs are expanded ``extra`` dimensions past top_dim so the top degree can be flagged."""
    if isinstance(struct, PathComplex):
        return struct
    if isinstance(struct, Digraph):
        return path_complex_of_digraph(struct, _top_for(struct, cfg) + extra, cfg.budget)
    raise InputError("expected a digraph or path-complex file, got a simplicial complex")


def as_simplicial(struct) -> SimplicialComplex:
    if not isinstance(struct, SimplicialComplex):
        raise InputError("expected a simplicial-complex file (JSON facet list)")
    return struct


def _emit(text: str, cfg: JobConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def format_comparison(rep: ComparisonReport, left: str, right: str) -> str:
    lines = []
    for kind, per in rep.equal.items():
        for n in rep.degrees:
            a = rep.left[kind][n].describe(rep.ring)
            b = rep.right[kind][n].describe(rep.ring)
            lines.append(f"{kind:<16} degree {n}: {left} {a:<10} {right} {b:<10} {'ok' if per[n] else 'MISMATCH'}")
    for name, ok in rep.checks.items():
        lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
    lines += [f"note: {x}" for x in rep.notes]
    lines.append("result: " + ("ok" if rep.ok else "MISMATCH"))
    return "\n".join(lines) + "\n"


def cmd_homology(cfg: JobConfig, cohomology: str = "no") -> int:
    struct = read_structure(cfg.inputs[0])
    top = _top_for(struct, cfg)
    pc = as_path_complex(struct, cfg)
    oc = build_omega(pc, cfg.ring, top)
    ocZ = oc if cfg.ring.kind == "Z" else build_omega(pc, Z, top)
    hom = homology_of_complex(oc.boundaries(), cfg.ring, oc.truncated)
    coh = cohomology_of_complex(ocZ.boundaries(), cfg.ring, ocZ.truncated)
    show_h = cohomology != "only"
    show_c = cohomology != "no"
    if cfg.format == "json":
        doc = {"command": "cohomology" if cohomology == "only" else "homology", "ring": str(cfg.ring),
               "top_dim": top, "omega_ranks": oc.ranks}
        if show_h:
            doc["homology"] = hom.to_json()
        if show_c:
            doc["cohomology"] = coh.to_json()
        _emit(dump_json(doc), cfg)
    else:
        out = []
        if show_h:
            out.append(hom.format())
        if show_c:
            out.append(coh.format())
        _emit("\n".join(out) + "\n", cfg)
    return EXIT_OK


def cmd_realize(cfg: JobConfig, coords: bool = False) -> int:
    struct = read_structure(cfg.inputs[0])
    top = _top_for(struct, cfg)
    pc = as_path_complex(struct, cfg, extra=0)
    oc = build_omega(pc, Z, top)
    cc = build_realization(pc, oc)
    summary = "cells: " + ", ".join(str(c) for c in cc.counts())
    if cc.closure_cells:
        summary += f" ({len(cc.closure_cells)} closure cells)"
    doc = cc.to_json(coords)
    if cfg.out:
        _emit(dump_json(doc), cfg)
        print(summary)
        for d in cc.diagnostics:
            print(d)
    elif cfg.format == "json":
        sys.stdout.write(dump_json(doc))
    else:
        print(summary)
        for d in cc.diagnostics:
            print(d)
    return EXIT_OK


def cmd_combine(cfg: JobConfig, how: str) -> int:
    a, b = (read_structure(p) for p in cfg.inputs[:2])
    pa, pb = as_path_complex(a, cfg, 0), as_path_complex(b, cfg, 0)
    pz = cartesian_product(pa, pb) if how == "product" else join(pa, pb)
    _emit(write_structure(pz), cfg)
    return EXIT_OK


def cmd_cubical(cfg: JobConfig) -> int:
    s = as_simplicial(read_structure(cfg.inputs[0]))
    _emit(write_structure(cubical_digraph(s)), cfg)
    return EXIT_OK


def cmd_hochschild(cfg: JobConfig) -> int:
    s = as_simplicial(read_structure(cfg.inputs[0]))
    A = build_A_S(s, cfg.ring)
    hh = hochschild_homology(A, cfg.max_deg, cfg.ring, cfg.budget)
    hc = hochschild_cohomology(A, cfg.max_deg, cfg.ring, cfg.budget)
    if cfg.format == "json":
        _emit(dump_json({"command": "hochschild", "ring": str(cfg.ring), "dim_A": A.dim,
                         "homology": hh.to_json(), "cohomology": hc.to_json()}), cfg)
    else:
        _emit(f"dim A_S = {A.dim}\nHH: {hh.format()}\nHH: {hc.format()}\n"
              f"A/[A,A] dimension {commutator_quotient_dimension(A, cfg.ring)}, "
              f"centre dimension {center_dimension(A, cfg.ring)}\n", cfg)
    return EXIT_OK


def _expanded(struct, max_dim: int, cfg: JobConfig) -> PathComplex:
    if isinstance(struct, Digraph):
        return path_complex_of_digraph(struct, max_dim, cfg.budget)
    return as_path_complex(struct, cfg)


def _check_doc(which: str, ok: bool, report: dict, cfg: JobConfig) -> str:
    return dump_json({"command": "check", "which": which, "ring": str(cfg.ring), "ok": ok, "report": report})


def cmd_check(cfg: JobConfig, which: str, random_count: int = 0) -> int:
    if which == "realization":
        top = 3 if cfg.top_dim is None else cfg.top_dim
        if random_count:
            rng = random.Random(cfg.seed)
            failures = []
            for i in range(random_count):
                g = random_digraph(rng)
                pc = path_complex_of_digraph(g, top + 2, cfg.budget)
                rep = verify_realization_isomorphism(pc, cfg.ring, top)
                if not rep.ok:
                    failures.append({"instance": i, "edges": [list(g.vertex_set.labels(e)) for e in g.sorted_edges()],
                                     "mismatches": rep.mismatches()})
            ok = not failures
            if cfg.format == "json":
                _emit(_check_doc(which, ok, {"instances": random_count, "seed": cfg.seed, "failures": failures}, cfg), cfg)
            else:
                lines = [f"random realization suite: {random_count} digraphs, seed {cfg.seed}, "
                         f"ring {cfg.ring}, top_dim {top}: {len(failures)} mismatches"]
                lines += [f"  instance {f['instance']}: {'; '.join(f['mismatches'])}" for f in failures]
                _emit("\n".join(lines) + "\n", cfg)
            return EXIT_OK if ok else EXIT_MISMATCH
        struct = read_structure(cfg.inputs[0])
        pc = _expanded(struct, top + 2, cfg)
        rep = verify_realization_isomorphism(pc, cfg.ring, top)
        text = format_comparison(rep, "path", "cellular")
        ok = rep.ok
        doc = rep.to_json()
    elif which in ("kunneth-product", "kunneth-join"):
        a, b = (read_structure(p) for p in cfg.inputs[:2])
        top = 2 if cfg.top_dim is None else cfg.top_dim
        pa, pb = (_expanded(x, top + 2, cfg) for x in (a, b))
        rep = verify_kunneth(pa, pb, cfg.ring, top, "product" if which == "kunneth-product" else "join")
        text = rep.table() + "\nresult: " + ("ok" if rep.ok else "MISMATCH") + "\n"
        ok = rep.ok
        doc = rep.to_json()
    elif which == "hochschild":
        s = as_simplicial(read_structure(cfg.inputs[0]))
        rep = verify_hochschild_comparison(s, cfg.ring, cfg.max_deg, cfg.budget)
        text = format_comparison(rep, "simplicial", "other")
        ok = rep.ok
        doc = rep.to_json()
    else:
        raise InputError(f"unknown check {which!r}")
    _emit(_check_doc(which, ok, doc, cfg) if cfg.format == "json" else text, cfg)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default=None, help="Z, Q or Zp:<prime>")
    common.add_argument("--top-dim", type=int, default=None)
    common.add_argument("--max-deg", type=int, default=3)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="cap on basis sizes (default $PATHHOM_BUDGET or 300000)")
    common.add_argument("--out", default=None, help="write the main output here instead of stdout")

    p = argparse.ArgumentParser(prog="pathhom", description="Path homology, realizations and comparison checks.")
    sub = p.add_subparsers(dest="command", required=True)
    h = sub.add_parser("homology", parents=[common], help="path homology of a digraph or path complex")
    h.add_argument("input")
    h.add_argument("--cohomology", action="store_true", help="also print cohomology")
    c = sub.add_parser("cohomology", parents=[common], help="path cohomology")
    c.add_argument("input")
    r = sub.add_parser("realize", parents=[common], help="build the cell complex S(P)")
    r.add_argument("input")
    r.add_argument("--coords", action="store_true", help="add barycenter coordinates for cells up to dim 3")
    for name in ("product", "join"):
        q = sub.add_parser(name, parents=[common], help=f"{name} of two path complexes")
        q.add_argument("left")
        q.add_argument("right")
    cu = sub.add_parser("cubical", parents=[common], help="cubical digraph of a simplicial complex")
    cu.add_argument("input")
    hh = sub.add_parser("hochschild", parents=[common], help="Hochschild (co)homology of A_S")
    hh.add_argument("input")
    ch = sub.add_parser("check", parents=[common], help="verify an isomorphism theorem by computing both sides")
    ch.add_argument("which", choices=("realization", "kunneth-product", "kunneth-join", "hochschild"))
    ch.add_argument("inputs", nargs="*")
    ch.add_argument("--random", type=int, default=0, metavar="N", help="realization: run N random digraphs instead")
    return p


def _config(args) -> JobConfig:
    fielded = args.command == "hochschild" or (args.command == "check" and args.which == "hochschild")
    ring = RingSpec.parse(args.ring) if args.ring else (RingSpec.parse("Q") if fielded else Z)
    inputs = [getattr(args, k) for k in ("input", "left", "right") if hasattr(args, k)] + list(getattr(args, "inputs", []))
    return JobConfig(ring=ring, top_dim=args.top_dim, inputs=inputs, format=args.format, seed=args.seed,
                     budget=args.budget if args.budget is not None else default_budget(),
                     max_deg=args.max_deg, out=args.out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        cmd = args.command
        if cmd == "check":
            need = {"realization": 0 if args.random else 1, "kunneth-product": 2, "kunneth-join": 2, "hochschild": 1}[args.which]
            if len(cfg.inputs) != need:
                raise InputError(f"check {args.which} takes {need} input file(s)")
            return cmd_check(cfg, args.which, args.random)
        if cmd == "homology":
            return cmd_homology(cfg, "both" if args.cohomology else "no")
        if cmd == "cohomology":
            return cmd_homology(cfg, "only")
        if cmd == "realize":
            return cmd_realize(cfg, args.coords)
        if cmd in ("product", "join"):
            return cmd_combine(cfg, cmd)
        if cmd == "cubical":
            return cmd_cubical(cfg)
        return cmd_hochschild(cfg)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, NonDisjointVertices, RingNotSupported, NonRegularComplex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        # RingSpec.parse and invalid-complex validation land here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
