"""Quivers as arrow-multiplicity matrices, with mutation and canonical forms.

Conventions fixed here once for the whole package:

* ``arrows[i][j]`` is the number of arrows i -> j.
* The exchange matrix is ``b[i][j] = arrows[i][j] - arrows[j][i]``; mutation
  at k sends b to b' with ``b'[i][j] = -b[i][j]`` if k in (i, j), else
  ``b[i][j] + sgn(b[i][k]) * max(0, b[i][k] * b[k][j])``, and the quiver is
  rebuilt from the positive part of b'.
* Loops and 2-cycles are representable (endomorphism quivers need them) but
  bar a quiver from mutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class QuiverError(ValueError):
    """Invalid quiver input or an operation outside its documented domain."""


CANONICAL_CAP = 12
_LEAF_CAP = 200_000


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    loops: tuple[int, ...]
    two_cycles: tuple[tuple[int, int], ...]
    label_problem: str | None = None


@dataclass(frozen=True)
class Quiver:
    arrows: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.arrows)

    @staticmethod
    def from_matrix(matrix, labels=None) -> "Quiver":
        n = len(matrix)
        rows = []
        for row in matrix:
            if len(row) != n:
                raise QuiverError("arrow matrix must be square")
            if any((not isinstance(x, int)) or x < 0 for x in row):
                raise QuiverError("arrow multiplicities must be nonnegative integers")
            rows.append(tuple(row))
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise QuiverError("labels must have one entry per vertex")
            if len(set(labels)) != n:
                raise QuiverError("labels must be pairwise distinct")
        return Quiver(tuple(rows), labels)

    @staticmethod
    def from_arrows(n: int, arrow_list, labels=None) -> "Quiver":
        m = [[0] * n for _ in range(n)]
        for entry in arrow_list:
            if len(entry) == 2:
                i, j = entry
                mult = 1
            else:
                i, j, mult = entry
            if not (0 <= i < n and 0 <= j < n):
                raise QuiverError(f"arrow ({i},{j}) out of range for {n} vertices")
            m[i][j] += mult
        return Quiver.from_matrix(m, labels)

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        if not isinstance(data, dict) or "vertices" not in data or "arrows" not in data:
            raise QuiverError('quiver JSON needs "vertices" and "arrows"')
        labels = list(data["vertices"])
        return Quiver.from_arrows(len(labels), data["arrows"], labels)

    def to_json(self) -> dict:
        arrow_list = [[i, j, self.arrows[i][j]]
                      for i in range(self.n) for j in range(self.n)
                      if self.arrows[i][j]]
        return {"vertices": list(self.labels), "arrows": arrow_list}

    def to_dot(self, name: str = "quiver") -> str:
        lines = [f"digraph {name} {{"]
        for i in range(self.n):
            lines.append(f'  v{i} [label="{self.labels[i]}"];')
        for i in range(self.n):
            for j in range(self.n):
                lines.extend(f"  v{i} -> v{j};" for _ in range(self.arrows[i][j]))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def arrow_occurrences(self) -> list[tuple[int, int]]:
        """One (source, target) pair per individual arrow, sorted."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                out.extend([(i, j)] * self.arrows[i][j])
        return out

    def validate(self) -> AdmissibilityReport:
        loops = tuple(i for i in range(self.n) if self.arrows[i][i])
        two_cycles = tuple(
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.arrows[i][j] and self.arrows[j][i]
        )
        return AdmissibilityReport(not loops and not two_cycles, loops, two_cycles)

    def is_admissible(self) -> bool:
        return self.validate().admissible

    def mutate(self, k: int) -> "Quiver":
        n = self.n
        if not (0 <= k < n):
            raise QuiverError(f"mutation vertex {k} out of range")
        report = self.validate()
        if not report.admissible:
            raise QuiverError(
                f"quiver is not mutation-admissible: loops={list(report.loops)}, "
                f"2-cycles={list(report.two_cycles)}"
            )
        a = self.arrows
        b = [[a[i][j] - a[j][i] for j in range(n)] for i in range(n)]
        bk = [b[i][k] for i in range(n)]
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            bik = bk[i]
            row = b[i]
            for j in range(n):
                if i == k or j == k:
                    v = -row[j]
                else:
                    v = row[j]
                    if bik > 0 and b[k][j] > 0:
                        v += bik * b[k][j]
                    elif bik < 0 and b[k][j] < 0:
                        v -= bik * b[k][j]
                if v > 0:
                    new[i][j] = v
        return Quiver(tuple(tuple(r) for r in new), self.labels)

    def mutate_word(self, word) -> "Quiver":
        q = self
        for k in word:
            q = q.mutate(k)
        return q

    def is_acyclic(self) -> bool:
        """True iff there is no directed cycle; loops count as cycles."""
        n = self.n
        indeg = [0] * n
        for i in range(n):
            if self.arrows[i][i]:
                return False
            for j in range(n):
                if i != j and self.arrows[i][j]:
                    indeg[j] += 1
        stack = [v for v in range(n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for j in range(n):
                if j != v and self.arrows[v][j]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        stack.append(j)
        return seen == n

    def topological_order(self) -> list[int]:
        if not self.is_acyclic():
            raise QuiverError("quiver has an oriented cycle")
        n = self.n
        indeg = [0] * n
        for i in range(n):
            for j in range(n):
                if self.arrows[i][j]:
                    indeg[j] += 1
        order = []
        ready = sorted(v for v in range(n) if indeg[v] == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            for j in range(n):
                if self.arrows[v][j]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
            ready.sort()
        return order

    def opposite(self) -> "Quiver":
        return Quiver(tuple(tuple(self.arrows[j][i] for j in range(self.n))
                            for i in range(self.n)), self.labels)

    def relabel(self, perm) -> "Quiver":
        """New quiver with vertex i moved to position perm[i]."""
        n = self.n
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        arrows = tuple(tuple(self.arrows[inv[i]][inv[j]] for j in range(n)) for i in range(n))
        labels = tuple(self.labels[inv[i]] for i in range(n))
        return Quiver(arrows, labels)


@dataclass(frozen=True)
class CanonicalQuiver:
    quiver: Quiver
    witness: tuple[int, ...]

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return self.quiver.arrows


def _refine_colors(arrows, n, colors):
    """Color refinement; colors are ints ranked by structure, label-free."""
    nbrs = [
        [j for j in range(n) if j != i and (arrows[i][j] or arrows[j][i])]
        for i in range(n)
    ]
    while True:
        sigs = [
            (colors[i], arrows[i][i],
             tuple(sorted((colors[j], arrows[i][j], arrows[j][i]) for j in nbrs[i])))
            for i in range(n)
        ]
        ranking = {sig: r for r, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _canonical_search(arrows, n):
    """Min arrow matrix over refinement-consistent labelings, with witness."""
    best: list = [None, None]
    leaves = [0]

    def matrix_for(order):
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = p
        return tuple(tuple(arrows[order[i]][order[j]] for j in range(n)) for i in range(n)), tuple(pos)

    def rec(colors):
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        blocks = [classes[c] for c in sorted(classes)]
        target = next((b for b in blocks if len(b) > 1), None)
        if target is None:
            leaves[0] += 1
            if leaves[0] > _LEAF_CAP:
                raise QuiverError("canonicalization search exceeded its budget")
            order = [b[0] for b in blocks]
            mat, pos = matrix_for(order)
            if best[0] is None or mat < best[0]:
                best[0], best[1] = mat, pos
            return
        fresh = -1  # sorts before every existing rank
        for v in target:
            branched = list(colors)
            branched[v] = fresh
            rec(_refine_colors(arrows, n, branched))

    rec(_refine_colors(arrows, n, [0] * n))
    return best[0], best[1]


def canonical_form(q: Quiver, cap: int = CANONICAL_CAP) -> CanonicalQuiver:
    """Lexicographically minimal relabeling of q's isomorphism class.

    The total order on matrices is the row-major tuple order over the leaf
    labelings generated by color refinement with individualization; the leaf
    set is isomorphism-invariant, so so is the minimum.
    """
    if q.n > cap:
        raise QuiverError(f"canonical form capped at {cap} vertices (got {q.n})")
    mat, pos = _canonical_search(q.arrows, q.n)
    labels = [""] * q.n
    for i in range(q.n):
        labels[pos[i]] = q.labels[i]
    return CanonicalQuiver(Quiver(mat, tuple(labels)), pos)


def canonical_key(q: Quiver, cap: int = CANONICAL_CAP) -> tuple[tuple[int, ...], ...]:
    """Canonical arrow matrix only, for dedup hot paths."""
    if q.n > cap:
        raise QuiverError(f"canonical form capped at {cap} vertices (got {q.n})")
    colors = _refine_colors(q.arrows, q.n, [0] * q.n)
    if len(set(colors)) == q.n:
        order = sorted(range(q.n), key=colors.__getitem__)
        a = q.arrows
        return tuple(tuple(a[i][j] for j in order) for i in order)
    return _canonical_search(q.arrows, q.n)[0]


def is_isomorphic(q1: Quiver, q2: Quiver, cap: int = CANONICAL_CAP) -> bool:
    if q1.n != q2.n:
        return False
    return canonical_key(q1, cap) == canonical_key(q2, cap)
