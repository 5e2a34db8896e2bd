"""Command-line front end.

One job per invocation: pick exactly one input source, one computation
subcommand, and get a JSON artifact on stdout (or --output, written
atomically).  Module errors exit 1 with an error JSON; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from itertools import product

from .corpus import corpus as corpus_entry, corpus_names
from .bergman import amoeba_sample, bergman_fan, support_deviations
from .errors import MfkError
from .jsonio import (amoeba_to_json, bergman_to_json, circuits_to_json,
                     comparison_to_json, degeneration_to_json, facets_to_json,
                     graph_from_json, lattice_to_json, matrix_from_json,
                     matroid_from_json, matroid_to_json, nested_fan_to_json,
                     polytope_to_json)
from .lattice import FlatLattice, moebius, order_complex
from .complexes import reduced_homology_ranks
from .errors import EmptyInterval, LoopsPresent
from .geometry import face_lattice
from .linalg import frac
from .matroid import LinearRealization, Matroid, from_graph, uniform
from .nested import building_set, compare_fans, max_building, min_building, \
    nested_fan
from .polytope import degeneration, facets, polytope
from .reciprocal import reciprocal_generators


@dataclass
class JobSpec:
    """Everything one invocation needs; fixed seed means identical bytes."""

    computation: str
    source_kind: str  # matrix | bases | graph | uniform | corpus
    source_value: object
    output: str | None = None
    grid: int | None = None
    weight: list | None = None
    building: str = "min"
    t: float = 1000.0
    count: int = 100
    seed: int = 0
    options: dict = field(default_factory=dict)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _resolve_input(job: JobSpec) -> tuple[Matroid, LinearRealization | None]:
    kind, value = job.source_kind, job.source_value
    if kind == "matrix":
        return matrix_from_json(_load_json(value))
    if kind == "bases":
        return matroid_from_json(_load_json(value)), None
    if kind == "graph":
        vertices, edges = graph_from_json(_load_json(value))
        matroid = from_graph(vertices, edges)
        return matroid, None
    if kind == "uniform":
        d, n = value
        return uniform(d, n), corpus_entry(f"uniform_{d}_{n}").realization
    if kind == "corpus":
        entry = corpus_entry(value)
        return entry.matroid, entry.realization
    raise MfkError(f"unknown input source {kind}")


def _require_realization(realization) -> LinearRealization:
    if realization is None:
        raise MfkError("this computation needs a realization "
                       "(matrix, uniform, or corpus input)")
    return realization


def _building_for(job: JobSpec, lattice: FlatLattice):
    if job.building == "min":
        return min_building(lattice)
    if job.building == "max":
        return max_building(lattice)
    flats = _load_json(job.building)
    return building_set(lattice, [frozenset(f) for f in flats])


def run(job: JobSpec) -> tuple[int, dict]:
    """Execute one job; returns (exit status, artifact)."""
    try:
        artifact = _dispatch(job)
        return 0, artifact
    except MfkError as err:
        return 1, {"error": type(err).__name__, "message": str(err)}


def _dispatch(job: JobSpec) -> dict:
    matroid, realization = _resolve_input(job)
    computation = job.computation

    if computation == "matroid":
        return matroid_to_json(matroid)

    if computation == "lattice":
        lattice = FlatLattice(matroid)
        data = lattice_to_json(lattice)
        if not matroid.loops():
            data["mu_top"] = moebius(matroid, lattice).mu_top
            try:
                complex_ = order_complex(lattice, matroid.closure(set()),
                                         matroid.ground)
                betti, euler = reduced_homology_ranks(complex_)
                data["betti_proper_part"] = betti
                data["reduced_euler"] = euler
            except EmptyInterval:
                data["betti_proper_part"] = []
                data["reduced_euler"] = -1
        return data

    if computation == "polytope":
        hull = polytope(matroid)
        return polytope_to_json(hull, face_lattice(hull))

    if computation == "facets":
        return facets_to_json(facets(matroid))

    if computation == "degenerate":
        weight = [frac(x) for x in job.weight or []]
        if len(weight) != matroid.n:
            raise MfkError(f"weight needs {matroid.n} entries")
        return degeneration_to_json(degeneration(matroid, weight))

    if computation == "bergman":
        fan = bergman_fan(matroid)
        data = bergman_to_json(fan)
        if job.grid:
            radius = job.grid
            agrees = all(
                fan.contains(w) == fan.any_coarse_contains(w)
                for w in product(range(-radius, radius + 1),
                                 repeat=matroid.n))
            data["support_grid_radius"] = radius
            data["support_grid_agrees"] = agrees
        return data

    if computation == "nested":
        lattice = FlatLattice(matroid)
        fan = nested_fan(matroid, _building_for(job, lattice))
        return nested_fan_to_json(fan)

    if computation == "compare-fans":
        lattice = FlatLattice(matroid)
        nfan = nested_fan(matroid, min_building(lattice))
        bfan = bergman_fan(matroid, lattice)
        return comparison_to_json(compare_fans(nfan, bfan))

    if computation == "circuits":
        return circuits_to_json(
            reciprocal_generators(_require_realization(realization)))

    if computation == "amoeba":
        real = _require_realization(realization)
        if real.matroid.loops():
            raise LoopsPresent("amoeba sampling needs a loop-free matroid")
        sample = amoeba_sample(real, job.t, job.count, seed=job.seed)
        fan = bergman_fan(real.matroid)
        return amoeba_to_json(sample, support_deviations(sample, fan),
                              job.seed)

    raise MfkError(f"unknown computation {computation}")


def _emit(artifact: dict, output: str | None) -> None:
    text = json.dumps(artifact, sort_keys=True, indent=2) + "\n"
    if output is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, output)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _add_input_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", metavar="FILE",
                       help="rational matrix JSON file")
    group.add_argument("--bases", metavar="FILE",
                       help="matroid JSON file (n and bases)")
    group.add_argument("--graph", metavar="FILE",
                       help="graph JSON file (vertices and edges)")
    group.add_argument("--uniform", nargs=2, type=int, metavar=("D", "N"),
                       help="uniform matroid parameters")
    group.add_argument("--corpus", metavar="NAME",
                       help="built-in example name")
    parser.add_argument("--output", metavar="PATH",
                        help="write the artifact here instead of stdout")


def _source_of(args) -> tuple[str, object]:
    if args.matrix:
        return "matrix", args.matrix
    if args.bases:
        return "bases", args.bases
    if args.graph:
        return "graph", args.graph
    if args.uniform:
        return "uniform", tuple(args.uniform)
    return "corpus", args.corpus


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mfk",
        description="exact matroid polytopes, Bergman fans, nested-set fans")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
            ("matroid", "canonical matroid JSON"),
            ("lattice", "lattice of flats with Moebius data"),
            ("polytope", "matroid polytope with f-vector"),
            ("facets", "classified facet list"),
            ("degenerate", "degeneration along a weight vector"),
            ("bergman", "coarse Bergman fan"),
            ("nested", "nested-set fan"),
            ("compare-fans", "nested fan versus Bergman fan"),
            ("circuits", "reciprocal-plane circuit generators"),
            ("amoeba", "numeric amoeba sample against the Bergman support")]:
        p = sub.add_parser(name, help=help_text)
        _add_input_arguments(p)
        if name == "degenerate":
            p.add_argument("--u", required=True, metavar="W",
                           help="comma-separated weight entries, e.g. 1,0,-2")
        if name == "bergman":
            p.add_argument("--grid", type=int, metavar="K",
                           help="verify support equality on the grid {-K..K}^n")
        if name == "nested":
            p.add_argument("--building", default="min",
                           help="min, max, or a JSON file of flats")
        if name == "amoeba":
            p.add_argument("--t", type=float, default=1000.0,
                           help="logarithm base")
            p.add_argument("--count", type=int, default=100,
                           help="number of sampled points")
            p.add_argument("--seed", type=int, default=0,
                           help="random seed")

    corpus_parser = sub.add_parser("corpus", help="example registry")
    corpus_parser.add_argument("action", choices=["list"])
    corpus_parser.add_argument("--output", metavar="PATH")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "corpus":
        names = corpus_names()
        _emit({"corpus": names}, args.output)
        return 0

    job = JobSpec(
        computation=args.command,
        source_kind=_source_of(args)[0],
        source_value=_source_of(args)[1],
        output=args.output,
        grid=getattr(args, "grid", None),
        weight=([frac(x) for x in args.u.split(",")]
                if getattr(args, "u", None) else None),
        building=getattr(args, "building", "min"),
        t=getattr(args, "t", 1000.0),
        count=getattr(args, "count", 100),
        seed=getattr(args, "seed", 0),
    )
    status, artifact = run(job)
    _emit(artifact, job.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
