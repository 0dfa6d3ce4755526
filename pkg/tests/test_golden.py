from __future__ import annotations

import json
from importlib import resources

from quiverlab.jobs import ModelStore
from quiverlab.recognize import RecognitionInput, recognize_cluster_category
from quiverlab.schemas import canonical_json, validate_document

GOLDEN_MODELS = ["a2-cluster", "a3-cluster", "a3-cluster3", "a6-tau4"]


def load_golden(name: str) -> dict:
    text = resources.files("quiverlab").joinpath(f"golden/{name}.json").read_text("utf-8")
    return json.loads(text)


class TestGoldenModels:
    def test_fresh_builds_match_shipped_dumps(self):
        store = ModelStore()
        for name in GOLDEN_MODELS:
            golden = load_golden(name)
            fresh = store.get(name).to_json(name)
            assert canonical_json(fresh) == canonical_json(golden), name

    def test_goldens_validate(self):
        for name in GOLDEN_MODELS:
            validate_document("model", load_golden(name))

    def test_expected_sizes(self):
        sizes = {"a2-cluster": 5, "a3-cluster": 9, "a3-cluster3": 15, "a6-tau4": 24}
        for name, size in sizes.items():
            golden = load_golden(name)
            assert len(golden["objects"]) == size
            assert len(golden["hom"]) == size

    def test_selftest_fixture_accepted(self):
        data = json.loads(resources.files("quiverlab")
                          .joinpath("golden/selftest-a3.json").read_text("utf-8"))
        verdict = recognize_cluster_category(RecognitionInput.from_json(data))
        assert verdict.accepted
