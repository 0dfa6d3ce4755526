"""Indecomposables-with-shift model of the bounded derived category.

Objects of the derived category of a Dynkin path algebra are pairs
(root, shift); this is legitimate because the algebra is hereditary, and
it is the single simplification everything downstream leans on.  The
suspension S adds one to the shift; the AR translate acts by the Coxeter
matrix away from projectives and crosses to the injective one shift down:
tau(P_j, n) = (I_j, n - 1).  The Serre functor is nu = tau . S.

Slice coordinates: every indecomposable is tau^{-t}(P_i, 0) for a unique
vertex i and integer t, which turns all automorphism bookkeeping into
walks on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hereditary import HereditaryEngine, apply_matrix, engine_for
from .quiver import Quiver, QuiverError

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class DerivedObject:
    root: DimVector
    shift: int

    def __repr__(self):
        return f"D({self.root}, {self.shift})"


@dataclass(frozen=True)
class AutoWord:
    """tau^a S^b, composition order irrelevant (the two commute)."""
    tau: int
    s: int

    def compose(self, other: "AutoWord") -> "AutoWord":
        return AutoWord(self.tau + other.tau, self.s + other.s)

    def inverse(self) -> "AutoWord":
        return AutoWord(-self.tau, -self.s)

    @staticmethod
    def serre() -> "AutoWord":
        return AutoWord(1, 1)

    @staticmethod
    def cluster(d: int) -> "AutoWord":
        """nu^{-1} S^d = tau^{-1} S^{d-1}, the d-cluster automorphism."""
        return AutoWord(-1, d - 1)


@dataclass(frozen=True)
class ARWindow:
    vertices: tuple[tuple[int, int, DerivedObject], ...]  # (row vertex, slice, object)
    arrows: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    translations: tuple[tuple[tuple[int, int], tuple[int, int]], ...]  # (vertex, its tau)


class DerivedCategory:
    """tau/S/nu arithmetic and Hom spaces over one Dynkin quiver."""

    def __init__(self, quiver: Quiver):
        self.engine: HereditaryEngine = engine_for(quiver)
        self.quiver = quiver
        self._coords: dict[DerivedObject, tuple[int, int]] = {}
        self._from_coords: dict[tuple[int, int], DerivedObject] = {}
        self._suspension_offsets: dict[int, tuple[int, int]] | None = None

    # -- object validity ----------------------------------------------------
    def check(self, obj: DerivedObject) -> DerivedObject:
        if tuple(obj.root) not in self.engine.root_set:
            raise QuiverError(f"{obj.root} is not a root of this quiver")
        return obj

    def module(self, root, shift: int = 0) -> DerivedObject:
        return self.check(DerivedObject(tuple(root), shift))

    def projective(self, vertex: int, shift: int = 0) -> DerivedObject:
        return DerivedObject(self.engine.projective_dims[vertex], shift)

    # -- automorphisms ------------------------------------------------------
    def tau(self, obj: DerivedObject) -> DerivedObject:
        j = self.engine.projective_index.get(obj.root)
        if j is not None:
            return DerivedObject(self.engine.injective_dims[j], obj.shift - 1)
        return DerivedObject(apply_matrix(self.engine.euler_data.coxeter, obj.root), obj.shift)

    def tau_inverse(self, obj: DerivedObject) -> DerivedObject:
        j = self.engine.injective_index.get(obj.root)
        if j is not None:
            return DerivedObject(self.engine.projective_dims[j], obj.shift + 1)
        return DerivedObject(apply_matrix(self.engine.euler_data.coxeter_inverse, obj.root),
                             obj.shift)

    def suspend(self, obj: DerivedObject, power: int = 1) -> DerivedObject:
        return DerivedObject(obj.root, obj.shift + power)

    def serre(self, obj: DerivedObject) -> DerivedObject:
        return self.tau(self.suspend(obj))

    def apply_auto(self, word: AutoWord, obj: DerivedObject) -> DerivedObject:
        out = self.suspend(obj, word.s)
        step = self.tau if word.tau >= 0 else self.tau_inverse
        for _ in range(abs(word.tau)):
            out = step(out)
        return out

    # -- Hom ----------------------------------------------------------------
    def hom(self, x: DerivedObject, y: DerivedObject) -> int:
        """Hom(X, Y): hom in equal shifts, ext one shift up, zero elsewhere."""
        diff = y.shift - x.shift
        if diff == 0:
            return self.engine.hom(x.root, y.root)
        if diff == 1:
            return self.engine.ext(x.root, y.root)
        return 0

    # -- slice coordinates ----------------------------------------------------
    def coords(self, obj: DerivedObject) -> tuple[int, int]:
        """(vertex i, t) with obj = tau^{-t}(P_i, 0)."""
        obj = self.check(obj)
        cached = self._coords.get(obj)
        if cached is not None:
            return cached
        walk = obj
        net = 0
        trail = [(obj, 0)]
        budget = (len(self.engine.roots) + 2) * (abs(obj.shift) + 2) + 64
        while not (walk.shift == 0 and walk.root in self.engine.projective_index):
            if walk.shift >= 0:
                walk = self.tau(walk)
                net += 1
            else:
                walk = self.tau_inverse(walk)
                net -= 1
            trail.append((walk, net))
            if len(trail) > budget:
                raise QuiverError("coordinate walk did not terminate")
        vertex = self.engine.projective_index[walk.root]
        # walk = tau^net(obj) sits at t = 0, so obj sits at t = net
        for member, partial in trail:
            self._coords[member] = (vertex, net - partial)
        return (vertex, net)

    def from_coords(self, vertex: int, t: int) -> DerivedObject:
        key = (vertex, t)
        if key in self._from_coords:
            return self._from_coords[key]
        obj = self.projective(vertex)
        if t >= 0:
            for _ in range(t):
                obj = self.tau_inverse(obj)
        else:
            for _ in range(-t):
                obj = self.tau(obj)
        self._from_coords[key] = obj
        return obj

    @property
    def coxeter_number(self) -> int:
        return self.engine.coxeter_number

    def suspension_offsets(self) -> dict[int, tuple[int, int]]:
        """Per vertex i: coordinates (sigma(i), delta_i) of S(P_i, 0)."""
        if self._suspension_offsets is None:
            self._suspension_offsets = {
                i: self.coords(self.suspend(self.projective(i)))
                for i in range(self.quiver.n)
            }
        return self._suspension_offsets

    # -- translation-quiver window -------------------------------------------
    def ar_window(self, slices: int) -> ARWindow:
        if slices < 1:
            raise QuiverError("window needs at least one slice")
        n = self.quiver.n
        vertices = tuple((i, t, self.from_coords(i, t))
                         for t in range(slices) for i in range(n))
        arrows = []
        for t in range(slices):
            for i in range(n):
                for u in range(n):
                    if self.quiver.arrows[u][i]:
                        arrows.append(((i, t), (u, t)))
                    if self.quiver.arrows[i][u] and t + 1 < slices:
                        arrows.append(((i, t), (u, t + 1)))
        translations = tuple((((i, t), (i, t - 1)))
                             for t in range(1, slices) for i in range(n))
        return ARWindow(vertices, tuple(arrows), translations)


_CATEGORIES: dict[tuple, DerivedCategory] = {}


def derived_category(quiver: Quiver) -> DerivedCategory:
    key = (quiver.arrows, quiver.labels)
    if key not in _CATEGORIES:
        _CATEGORIES[key] = DerivedCategory(quiver)
    return _CATEGORIES[key]


def ar_window_dot(quiver: Quiver, slices: int, name: str = "ar_window") -> str:
    """DOT text for the window; slices share a rank so translates align."""
    dc = derived_category(quiver)
    window = dc.ar_window(slices)
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for i, t, obj in window.vertices:
        label = object_label(dc, obj)
        lines.append(f'  s{t}_v{i} [label="{label}"];')
    for t in range(slices):
        members = " ".join(f"s{t}_v{i};" for i in range(quiver.n))
        lines.append(f"  {{ rank=same; {members} }}")
    for (i, t), (j, u) in window.arrows:
        lines.append(f"  s{t}_v{i} -> s{u}_v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def object_label(dc: DerivedCategory, obj: DerivedObject) -> str:
    """Readable name: tau^-t suffixes on P_i plus a shift bracket."""
    i, t = dc.coords(obj)
    base = f"P{dc.quiver.labels[i]}"
    if t:
        base = f"t^{-t}{base}"
    if obj.shift:
        base += f"[{obj.shift}]"
    return base
