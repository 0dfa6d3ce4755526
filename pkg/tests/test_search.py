from __future__ import annotations

import itertools

import pytest

from quiverlab.quiver import Quiver, QuiverError, canonical_key
from quiverlab.search import SearchLimits, find_acyclic, mutation_class, mutation_class_size
from quiverlab.seeds import builtin_seed


def exhaustive_class_oracle(seed: Quiver, max_steps: int = 4000) -> set:
    """Independent closure: plain BFS on labeled quivers, dedup by iso key."""
    seen = {canonical_key(seed)}
    frontier = [seed]
    steps = 0
    while frontier:
        nxt = []
        for q in frontier:
            for k in range(q.n):
                child = q.mutate(k)
                key = canonical_key(child)
                steps += 1
                if steps > max_steps:
                    raise RuntimeError("oracle budget exceeded")
                if key not in seen:
                    seen.add(key)
                    nxt.append(child)
        frontier = nxt
    return seen


class TestMutationClass:
    def test_a2_class_of_one(self):
        result = mutation_class(builtin_seed("a2-linear"))
        assert result.class_size == 1
        assert not result.truncated

    def test_a3_class_of_four(self):
        result = mutation_class(builtin_seed("a3-linear"))
        assert result.class_size == 4
        assert not result.truncated
        assert result.canonical_set() == exhaustive_class_oracle(builtin_seed("a3-linear"))

    def test_single_vertex(self):
        result = mutation_class(Quiver.from_matrix([[0]]))
        assert result.class_size == 1 and not result.truncated

    def test_words_replay(self):
        seed = builtin_seed("a3-linear")
        for node in mutation_class(seed).nodes:
            replayed = seed.mutate_word(node.word)
            assert canonical_key(replayed) == node.canonical.key

    def test_determinism(self):
        seed = builtin_seed("d4-preprojective")
        limits = SearchLimits(max_depth=3, max_nodes=200)
        first = mutation_class(seed, limits)
        second = mutation_class(seed, limits)
        assert first.canonical_set() == second.canonical_set()
        assert first.truncated == second.truncated

    def test_monotone_in_limits(self):
        seed = builtin_seed("d4-preprojective")
        small = mutation_class(seed, SearchLimits(max_depth=2, max_nodes=60))
        large = mutation_class(seed, SearchLimits(max_depth=3, max_nodes=240))
        assert small.canonical_set() <= large.canonical_set()

    def test_dynkin_rank_le_4_exhausts(self):
        for seed in [builtin_seed("a2-linear"), builtin_seed("a3-linear"),
                     Quiver.from_arrows(4, [(0, 1), (1, 2), (2, 3)]),
                     Quiver.from_arrows(4, [(0, 2), (1, 2), (2, 3)])]:
            result = mutation_class(seed)
            assert not result.truncated

    def test_inadmissible_rejected(self):
        with pytest.raises(QuiverError):
            mutation_class(Quiver.from_arrows(2, [(0, 1), (1, 0)]))

    def test_size_only_matches(self):
        seed = builtin_seed("a3-linear")
        size, truncated = mutation_class_size(seed)
        assert size == 4 and not truncated


class TestFindAcyclic:
    def test_cycle_killed_in_one(self):
        result = find_acyclic(builtin_seed("cycle3"))
        assert result.found and len(result.word) == 1

    def test_already_acyclic(self):
        result = find_acyclic(builtin_seed("a3-linear"))
        assert result.found and result.word == ()

    def test_word_is_sound(self):
        seed = builtin_seed("cycle3")
        result = find_acyclic(seed)
        assert seed.mutate_word(result.word).is_acyclic()

    def test_word_is_shortest(self):
        seed = builtin_seed("cycle3")
        result = find_acyclic(seed)
        shortest = min(
            (len(word) for r in range(3)
             for word in itertools.product(range(3), repeat=r)
             if seed.mutate_word(word).is_acyclic()),
            default=None,
        )
        assert len(result.word) == shortest

    def test_truncated_search_reports_evidence(self):
        result = find_acyclic(builtin_seed("a5-preprojective"),
                              SearchLimits(max_depth=10, max_nodes=500))
        assert not result.found
        assert result.truncated and not result.exhausted
        assert "NOT proven" in result.verdict()
        assert "proof" not in result.verdict().replace("NOT proven", "")

    def test_exhausted_class_is_a_proof_statement(self):
        # A seed whose entire class is cyclic does not exist in small Dynkin
        # ranks, so check the flag wiring on an exhausted acyclic-free search
        # is exercised via the truncation path instead; here just confirm an
        # exhausted run reports exhaustion.
        result = find_acyclic(builtin_seed("a3-linear"))
        assert result.exhausted
