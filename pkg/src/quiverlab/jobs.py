"""Document builders shared by the CLI and the HTTP service."""

from __future__ import annotations

import threading

from .derived import AutoWord, ar_window_dot, derived_category, object_label
from .mesh import MeshComputation, endo_quiver, mesh_hom
from .orbit import (
    OrbitModel,
    TiltingCandidate,
    build_orbit_model,
    cy_check,
    enumerate_cluster_tilting,
    is_cluster_tilting,
    negative_ext_check,
)
from .quiver import Quiver, QuiverError
from .recognize import RecognitionInput, recognize_cluster_category
from .schemas import SCHEMA_VERSION, validate_document
from .search import SearchLimits, find_acyclic, mutation_class_size
from .seeds import MODEL_PRESETS, model_preset
from .survey import kronecker_rigidity_survey


def quiver_document(quiver: Quiver) -> dict:
    return validate_document("quiver", {
        "schema": SCHEMA_VERSION,
        "quiver": quiver.to_json(),
        "admissible": quiver.is_admissible(),
        "acyclic": quiver.is_acyclic(),
    })


def mutate_document(quiver: Quiver, vertex: int) -> dict:
    return quiver_document(quiver.mutate(vertex))


def mutation_class_document(quiver: Quiver, limits: SearchLimits) -> dict:
    size, truncated = mutation_class_size(quiver, limits)
    return validate_document("mutation-class", {
        "schema": SCHEMA_VERSION,
        "class_size": size,
        "truncated": truncated,
        "limits": {"max_depth": limits.max_depth, "max_nodes": limits.max_nodes},
    })


def find_acyclic_document(quiver: Quiver, limits: SearchLimits) -> dict:
    result = find_acyclic(quiver, limits)
    return validate_document("find-acyclic", {
        "schema": SCHEMA_VERSION,
        "found": result.found,
        "witness_word": list(result.word) if result.word is not None else None,
        "truncated": result.truncated,
        "class_size": result.class_size,
        "verdict": result.verdict(),
        "limits": {"max_depth": limits.max_depth, "max_nodes": limits.max_nodes},
    })


class ModelStore:
    """Named models, built once; get-or-build is atomic."""

    def __init__(self):
        self._models: dict[str, OrbitModel] = {}
        self._lock = threading.Lock()

    def get(self, name: str) -> OrbitModel:
        with self._lock:
            if name not in self._models:
                quiver, auto = model_preset(name)
                self._models[name] = build_orbit_model(quiver, AutoWord(*auto))
            return self._models[name]

    def build(self, quiver: Quiver, auto: AutoWord, name: str | None = None) -> OrbitModel:
        if name is None:
            return build_orbit_model(quiver, auto)
        with self._lock:
            if name not in self._models:
                self._models[name] = build_orbit_model(quiver, auto)
            return self._models[name]

    @staticmethod
    def known() -> list[str]:
        return sorted(MODEL_PRESETS)


def model_document(model: OrbitModel, name: str | None = None) -> dict:
    return validate_document("model", model.to_json(name))


def _candidate(model: OrbitModel, summands, d: int) -> TiltingCandidate:
    if summands is None or summands == "projective-slice":
        return TiltingCandidate(model.projective_slice(), d)
    return TiltingCandidate(tuple(model._resolve(s) for s in summands), d)


def cy_check_document(model: OrbitModel, d: int) -> dict:
    result = cy_check(model, d)
    counterexample = None
    if not result.holds:
        source, target = result.witness
        counterexample = {"source": object_label(model.dc, source),
                          "target": object_label(model.dc, target)}
    return validate_document("cy-check", {
        "schema": SCHEMA_VERSION,
        "d": d,
        "holds": result.holds,
        "counterexample": counterexample,
    })


def cluster_tilting_document(model: OrbitModel, d: int, summands=None,
                             enumerate_all: bool = False) -> dict:
    labels = model.object_labels()
    if enumerate_all:
        candidates = enumerate_cluster_tilting(model, d)
        return validate_document("cluster-tilting", {
            "schema": SCHEMA_VERSION,
            "d": d,
            "mode": "enumerate",
            "count": len(candidates),
            "candidates": [[labels[s] for s in cand.summands] for cand in candidates],
        })
    candidate = _candidate(model, summands, d)
    result = is_cluster_tilting(model, candidate)
    return validate_document("cluster-tilting", {
        "schema": SCHEMA_VERSION,
        "d": d,
        "mode": "check",
        "summands": [labels[s] for s in candidate.summands],
        "holds": result.holds,
        "reason": result.reason,
    })


def negative_ext_document(model: OrbitModel, d: int, summands=None) -> dict:
    candidate = _candidate(model, summands, d)
    result = negative_ext_check(model, candidate)
    witness = None
    if not result.holds:
        source, degree, target = result.witness
        witness = {"source": object_label(model.dc, source),
                   "degree": degree,
                   "target": object_label(model.dc, target)}
    return validate_document("negative-ext", {
        "schema": SCHEMA_VERSION,
        "d": d,
        "holds": result.holds,
        "witness": witness,
        "reason": result.reason,
    })


def endo_quiver_document(model: OrbitModel, summands=None, d: int = 2) -> dict:
    candidate = _candidate(model, summands, d)
    result = endo_quiver(model, candidate)
    return validate_document("endo-quiver", {
        "schema": SCHEMA_VERSION,
        "quiver": result.quiver.to_json(),
        "opposite_quiver": result.opposite.to_json(),
        "convention": result.convention,
    })


def recognize_document(inp: RecognitionInput) -> dict:
    verdict = recognize_cluster_category(inp)
    return validate_document("recognize", {
        "schema": SCHEMA_VERSION,
        "verdict": verdict.verdict,
        "failed_hypothesis": verdict.failed_hypothesis,
        "detail": verdict.detail,
        "witness": list(verdict.witness_pair) if verdict.witness_pair else None,
        "quiver": verdict.quiver.to_json() if verdict.quiver else None,
        "bijection": [list(pair) for pair in verdict.bijection] if verdict.bijection else None,
    })


def survey_document(depth: int) -> dict:
    return validate_document("kronecker-survey", kronecker_rigidity_survey(depth).to_json())


def ar_window_document(quiver: Quiver, slices: int) -> dict:
    dc = derived_category(quiver)
    window = dc.ar_window(slices)
    return validate_document("ar-window", {
        "schema": SCHEMA_VERSION,
        "vertices": [
            {"row": i, "slice": t, "root": list(obj.root), "shift": obj.shift,
             "label": object_label(dc, obj)}
            for i, t, obj in window.vertices
        ],
        "arrows": [[list(src), list(dst)] for src, dst in window.arrows],
        "translations": [[list(src), list(dst)] for src, dst in window.translations],
    })


def ar_window_dot_text(quiver: Quiver, slices: int) -> str:
    return ar_window_dot(quiver, slices)


def model_ar_dot(model: OrbitModel, name: str = "model_ar") -> str:
    """DOT text of the model's own AR quiver (the orbit translation quiver)."""
    mesh = MeshComputation(model)
    labels = model.object_labels()
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for idx, label in enumerate(labels):
        lines.append(f'  o{idx} [label="{label}"];')
    for arrow in mesh.arrows:
        lines.append(f"  o{arrow.source} -> o{arrow.target};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def error_document(message: str) -> dict:
    return validate_document("error", {"schema": SCHEMA_VERSION, "error": message})
