"""Regenerate the golden model dumps and the recognition self-test fixture.

Run from the repository root:  python3 scripts/generate_golden.py

Every table is cross-checked against the independent mesh-category oracle
before being written; a discrepancy aborts the run.
"""

from __future__ import annotations

import json
import pathlib

from quiverlab.jobs import ModelStore
from quiverlab.mesh import mesh_hom
from quiverlab.recognize import RecognitionInput
from quiverlab.schemas import canonical_json

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "src" / "quiverlab" / "golden"

MODELS = ["a2-cluster", "a3-cluster", "a3-cluster3", "a6-tau4"]


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    store = ModelStore()
    for name in MODELS:
        model = store.get(name)
        if mesh_hom(model).hom_table() != model.hom:
            raise SystemExit(f"mesh oracle disagrees for {name}; refusing to freeze")
        path = GOLDEN / f"{name}.json"
        path.write_text(canonical_json(model.to_json(name)) + "\n", encoding="utf-8")
        print(f"wrote {path} ({len(model.objects)} objects)")
    model = store.get("a3-cluster")
    fixture = RecognitionInput.from_model(model, model.projective_slice(), 2)
    path = GOLDEN / "selftest-a3.json"
    path.write_text(canonical_json(fixture.to_json()) + "\n", encoding="utf-8")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
