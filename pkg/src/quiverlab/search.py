"""Bounded breadth-first exploration of mutation classes.

Nodes are isomorphism classes (canonical forms); expansion mutates a
labeled representative reachable from the seed, so every stored word
replays against the seed itself. BFS order makes returned witnesses
shortest; expansion order (FIFO, vertices ascending) makes runs
deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .quiver import CanonicalQuiver, Quiver, QuiverError, canonical_form, canonical_key


@dataclass(frozen=True)
class SearchLimits:
    max_depth: int = 10
    max_nodes: int = 100_000

    def __post_init__(self):
        if self.max_depth <= 0 or self.max_nodes <= 0:
            raise QuiverError("search limits must be positive")


@dataclass(frozen=True)
class MutationNode:
    canonical: CanonicalQuiver
    word: tuple[int, ...]


@dataclass(frozen=True)
class MutationClassResult:
    nodes: tuple[MutationNode, ...]
    truncated: bool

    @property
    def class_size(self) -> int:
        return len(self.nodes)

    def canonical_set(self) -> frozenset:
        return frozenset(node.canonical.key for node in self.nodes)


@dataclass(frozen=True)
class AcyclicSearchResult:
    found: bool
    word: tuple[int, ...] | None
    truncated: bool
    class_size: int

    @property
    def exhausted(self) -> bool:
        return not self.truncated

    def verdict(self) -> str:
        if self.found:
            return f"acyclic representative found at depth {len(self.word)}"
        if self.exhausted:
            return ("mutation class fully enumerated: no acyclic representative "
                    "exists (proof by exhaustion)")
        return ("bounded-search evidence: no acyclic representative found, but "
                "the class was truncated, so non-existence is NOT proven")


def _bfs(seed: Quiver, limits: SearchLimits, stop=None):
    """Shared engine; returns (words by canonical key, truncated, hit)."""
    if not seed.is_admissible():
        report = seed.validate()
        raise QuiverError(
            f"seed is not mutation-admissible: loops={list(report.loops)}, "
            f"2-cycles={list(report.two_cycles)}"
        )
    visited: dict[tuple, tuple[int, ...]] = {canonical_key(seed): ()}
    if stop is not None and stop(seed):
        return visited, False, ()
    queue: deque[tuple[Quiver, tuple[int, ...]]] = deque([(seed, ())])
    truncated = False
    while queue:
        quiver, word = queue.popleft()
        at_depth_cap = len(word) >= limits.max_depth
        last = word[-1] if word else -1
        for k in range(quiver.n):
            if k == last:  # mutation is an involution; child is the grandparent
                continue
            child = quiver.mutate(k)
            key = canonical_key(child)
            if key in visited:
                continue
            if at_depth_cap or len(visited) >= limits.max_nodes:
                truncated = True
                if at_depth_cap:
                    break
                return visited, True, None
            visited[key] = word + (k,)
            if stop is not None and stop(child):
                return visited, truncated, word + (k,)
            queue.append((child, word + (k,)))
    return visited, truncated, None


def mutation_class(seed: Quiver, limits: SearchLimits = SearchLimits()) -> MutationClassResult:
    """Closure of the seed under mutation, deduplicated up to isomorphism."""
    visited, truncated, _ = _bfs(seed, limits)
    nodes = tuple(
        MutationNode(canonical_form(seed.mutate_word(word)), word)
        for word in visited.values()
    )
    return MutationClassResult(tuple(sorted(nodes, key=lambda n: (len(n.word), n.word))),
                               truncated)


def mutation_class_size(seed: Quiver, limits: SearchLimits = SearchLimits()) -> tuple[int, bool]:
    """(class size, truncated) without materializing canonical forms."""
    visited, truncated, _ = _bfs(seed, limits)
    return len(visited), truncated


def find_acyclic(seed: Quiver, limits: SearchLimits = SearchLimits()) -> AcyclicSearchResult:
    """Shortest mutation word reaching an acyclic quiver, if one is in reach."""
    visited, truncated, hit = _bfs(seed, limits, stop=lambda q: q.is_acyclic())
    return AcyclicSearchResult(hit is not None, hit, truncated, len(visited))
