"""Command-line facade.

Exit codes: 0 success, 2 validation or domain error, 64 unknown
subcommand.  Every result is one canonical-JSON document on stdout; the
HTTP service emits the identical bytes for the identical request.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jobs
from .derived import AutoWord
from .hereditary import InternalInconsistencyError
from .quiver import Quiver, QuiverError
from .recognize import RecognitionInput
from .schemas import canonical_json
from .search import SearchLimits
from .seeds import BUILTIN_SEEDS, builtin_seed

USAGE = """usage: quiverlab <command> [options]

commands:
  mutate            mutate a quiver at one vertex
  mutation-class    bounded closure of a seed under mutation
  find-acyclic      search the mutation class for an acyclic quiver
  build-model       build an orbit-category model and dump it
  cy-check          Calabi-Yau duality check on a model
  cluster-tilting   check or enumerate cluster-tilting objects
  negative-ext      negative-extension vanishing check
  endo-quiver       endomorphism quiver of a tilting candidate
  recognize         run the recognition procedure on a Hom table
  kronecker-survey  rigidity survey over the 3-Kronecker quiver
  ar-window         translation-quiver window of a Dynkin quiver

run 'quiverlab <command> --help' for options; seeds are file paths or
builtin:<name> with names: """ + ", ".join(sorted(BUILTIN_SEEDS))


def _load_quiver(spec: str) -> Quiver:
    if spec.startswith("builtin:"):
        return builtin_seed(spec)
    try:
        with open(spec, encoding="utf-8") as handle:
            return Quiver.from_json(json.load(handle))
    except OSError as err:
        raise QuiverError(f"cannot read seed file {spec!r}: {err}") from err
    except json.JSONDecodeError as err:
        raise QuiverError(f"seed file {spec!r} is not valid JSON: {err}") from err


def _limits(args) -> SearchLimits:
    return SearchLimits(max_depth=args.max_depth, max_nodes=args.max_nodes)


def _model_from_args(store: jobs.ModelStore, args):
    if args.model:
        return store.get(args.model), args.model
    quiver = _load_quiver(args.seed)
    auto = AutoWord(args.tau, args.s)
    return store.build(quiver, auto), None


def _add_model_source(parser: argparse.ArgumentParser):
    parser.add_argument("--model", help="named preset, e.g. a2-cluster or a6-tau4")
    parser.add_argument("--seed", help="quiver JSON file or builtin:<name>")
    parser.add_argument("--tau", type=int, default=-1, help="tau power of the automorphism")
    parser.add_argument("--s", type=int, default=1, help="suspension power of the automorphism")


def _add_summands(parser: argparse.ArgumentParser):
    parser.add_argument("--summands", help="comma-separated object indices; "
                                           "default: the projective slice")


def _summands(args):
    if getattr(args, "summands", None):
        return [int(x) for x in args.summands.split(",")]
    return None


def _emit(document: dict) -> int:
    sys.stdout.write(canonical_json(document) + "\n")
    return 0


def run_cli(argv) -> int:
    argv = list(argv)
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(USAGE + "\n")
        return 0
    command, rest = argv[0], argv[1:]
    handlers = {
        "mutate": _cmd_mutate,
        "mutation-class": _cmd_mutation_class,
        "find-acyclic": _cmd_find_acyclic,
        "build-model": _cmd_build_model,
        "cy-check": _cmd_cy_check,
        "cluster-tilting": _cmd_cluster_tilting,
        "negative-ext": _cmd_negative_ext,
        "endo-quiver": _cmd_endo_quiver,
        "recognize": _cmd_recognize,
        "kronecker-survey": _cmd_survey,
        "ar-window": _cmd_ar_window,
    }
    handler = handlers.get(command)
    if handler is None:
        sys.stderr.write(f"unknown command {command!r}\n{USAGE}\n")
        return 64
    try:
        return handler(rest)
    except (QuiverError, ValueError) as err:
        sys.stdout.write(canonical_json(jobs.error_document(str(err))) + "\n")
        sys.stderr.write(f"error: {err}\n")
        return 2
    except InternalInconsistencyError as err:
        sys.stderr.write(f"internal inconsistency: {err}\n")
        return 70


def _parser(name: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=f"quiverlab {name}", add_help=True)
    return parser


def _cmd_mutate(rest) -> int:
    parser = _parser("mutate")
    parser.add_argument("--seed", required=True)
    parser.add_argument("--vertex", type=int, required=True)
    args = parser.parse_args(rest)
    return _emit(jobs.mutate_document(_load_quiver(args.seed), args.vertex))


def _cmd_mutation_class(rest) -> int:
    parser = _parser("mutation-class")
    parser.add_argument("--seed", required=True)
    parser.add_argument("--max-depth", type=int, default=10)
    parser.add_argument("--max-nodes", type=int, default=100_000)
    args = parser.parse_args(rest)
    return _emit(jobs.mutation_class_document(_load_quiver(args.seed), _limits(args)))


def _cmd_find_acyclic(rest) -> int:
    parser = _parser("find-acyclic")
    parser.add_argument("--seed", required=True)
    parser.add_argument("--max-depth", type=int, default=10)
    parser.add_argument("--max-nodes", type=int, default=100_000)
    args = parser.parse_args(rest)
    return _emit(jobs.find_acyclic_document(_load_quiver(args.seed), _limits(args)))


def _cmd_build_model(rest) -> int:
    parser = _parser("build-model")
    _add_model_source(parser)
    args = parser.parse_args(rest)
    store = jobs.ModelStore()
    model, name = _model_from_args(store, args)
    return _emit(jobs.model_document(model, name))


def _cmd_cy_check(rest) -> int:
    parser = _parser("cy-check")
    _add_model_source(parser)
    parser.add_argument("--d", type=int, required=True)
    args = parser.parse_args(rest)
    model, _ = _model_from_args(jobs.ModelStore(), args)
    return _emit(jobs.cy_check_document(model, args.d))


def _cmd_cluster_tilting(rest) -> int:
    parser = _parser("cluster-tilting")
    _add_model_source(parser)
    _add_summands(parser)
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--enumerate", action="store_true")
    args = parser.parse_args(rest)
    model, _ = _model_from_args(jobs.ModelStore(), args)
    return _emit(jobs.cluster_tilting_document(model, args.d, _summands(args),
                                               args.enumerate))


def _cmd_negative_ext(rest) -> int:
    parser = _parser("negative-ext")
    _add_model_source(parser)
    _add_summands(parser)
    parser.add_argument("--d", type=int, required=True)
    args = parser.parse_args(rest)
    model, _ = _model_from_args(jobs.ModelStore(), args)
    return _emit(jobs.negative_ext_document(model, args.d, _summands(args)))


def _cmd_endo_quiver(rest) -> int:
    parser = _parser("endo-quiver")
    _add_model_source(parser)
    _add_summands(parser)
    parser.add_argument("--d", type=int, default=2)
    args = parser.parse_args(rest)
    model, _ = _model_from_args(jobs.ModelStore(), args)
    return _emit(jobs.endo_quiver_document(model, _summands(args), args.d))


def _cmd_recognize(rest) -> int:
    parser = _parser("recognize")
    parser.add_argument("--model", required=True, help="recognition-input JSON file")
    args = parser.parse_args(rest)
    try:
        with open(args.model, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise QuiverError(f"cannot read {args.model!r}: {err}") from err
    except json.JSONDecodeError as err:
        raise QuiverError(f"{args.model!r} is not valid JSON: {err}") from err
    return _emit(jobs.recognize_document(RecognitionInput.from_json(data)))


def _cmd_survey(rest) -> int:
    parser = _parser("kronecker-survey")
    parser.add_argument("--depth", type=int, required=True)
    args = parser.parse_args(rest)
    return _emit(jobs.survey_document(args.depth))


def _cmd_ar_window(rest) -> int:
    parser = _parser("ar-window")
    parser.add_argument("--seed", required=True)
    parser.add_argument("--slices", type=int, required=True)
    parser.add_argument("--format", choices=["json", "dot"], default="json")
    args = parser.parse_args(rest)
    quiver = _load_quiver(args.seed)
    if args.format == "dot":
        sys.stdout.write(jobs.ar_window_dot_text(quiver, args.slices))
        return 0
    return _emit(jobs.ar_window_document(quiver, args.slices))


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
