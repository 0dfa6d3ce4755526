"""Mesh-category Hom tables over the orbit translation quiver.

This is the second, independent route to the Hom dimensions of an orbit
model: no intertwiner systems, only the combinatorics of the AR quiver of
the model plus exact linear algebra.  Morphism spaces are the graded
pieces of the path category modulo the mesh ideal; since the ideal is
generated in degree two, each layer is the cokernel

    A_{l+1}(x, v) = (sum over arrows a: m -> v of A_l(x, m))
                    / image(A_{l-1}(x, tau v) composed with the mesh at v)

which keeps every intermediate object as small as the true Hom spaces.
Layers are iterated until the radical is exhausted; a model whose
reduction does not stabilize is rejected.

In the lattice of slice coordinates there are no parallel arrows, so an
arrow of the orbit quiver is identified by its source representative and
the lattice target at that representative's chosen lift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import SpanBasis, _echelon
from .orbit import OrbitModel, TiltingCandidate
from .quiver import Quiver, QuiverError


class MeshError(RuntimeError):
    pass


@dataclass(frozen=True)
class Arrow:
    index: int
    source: int            # rep index
    target: int             # rep index
    target_lift: object     # DerivedObject at the source's chosen lift


class MeshComputation:
    def __init__(self, model: OrbitModel):
        self.model = model
        self.n_objects = len(model.objects)
        self._build_quiver()
        self._build_meshes()
        self._layers: dict[int, dict] = {}

    # -- orbit translation quiver -------------------------------------------
    def _lattice_neighbors(self, obj):
        """Arrow targets out of a lattice point, as derived objects."""
        dc = self.model.dc
        quiver = self.model.quiver
        i, t = dc.coords(obj)
        targets = []
        for u in range(quiver.n):
            if quiver.arrows[u][i]:
                targets.append(dc.from_coords(u, t))
            if quiver.arrows[i][u]:
                targets.append(dc.from_coords(u, t + 1))
        return targets

    def _build_quiver(self):
        model = self.model
        self.arrows: list[Arrow] = []
        self.arrow_index: dict[tuple, int] = {}
        self.out_arrows: list[list[int]] = [[] for _ in range(self.n_objects)]
        self.in_arrows: list[list[int]] = [[] for _ in range(self.n_objects)]
        for v, rep in enumerate(model.objects):
            for target_lift in self._lattice_neighbors(rep):
                idx = len(self.arrows)
                arrow = Arrow(idx, v, model.index[model.project(target_lift)], target_lift)
                self.arrows.append(arrow)
                self.arrow_index[(v, target_lift)] = idx
                self.out_arrows[v].append(idx)
                self.in_arrows[arrow.target].append(idx)

    def _orbit_power(self, a, b) -> int:
        """p with F^p(a) = b; a and b must share an orbit."""
        model = self.model
        twist2 = 2 * model.twist
        walk = a
        for r in range(model.period):
            if walk.root == b.root and (walk.shift - b.shift) % twist2 == 0:
                return r + model.period * ((walk.shift - b.shift) // twist2)
            walk = model._apply_f(walk)
        raise MeshError("objects are not in one orbit")

    def _apply_f_power(self, obj, power: int):
        model = self.model
        r = power % model.period
        k = (power - r) // model.period
        walk = obj
        for _ in range(r):
            walk = model._apply_f(walk)
        return type(walk)(walk.root, walk.shift - 2 * model.twist * k)

    def _project_arrow(self, src_lift, tgt_lift) -> int:
        """Orbit-quiver arrow id of the lattice arrow src_lift -> tgt_lift."""
        model = self.model
        rep = model.project(src_lift)
        p = self._orbit_power(rep, src_lift)
        canonical_target = self._apply_f_power(tgt_lift, -p)
        key = (model.index[rep], canonical_target)
        if key not in self.arrow_index:
            raise MeshError("lattice arrow did not project onto the orbit quiver")
        return self.arrow_index[key]

    def _build_meshes(self):
        """Per vertex z: tau(z) and the (first, second) arrow pairs whose
        composite sum is the mesh relation ending at z."""
        model = self.model
        dc = model.dc
        quiver = model.quiver
        self.tau_c: list[int] = []
        self.meshes: list[list[tuple[int, int]]] = []
        for z, rep in enumerate(model.objects):
            i, t = dc.coords(rep)
            w_lift = dc.from_coords(i, t - 1)
            self.tau_c.append(model.index[model.project(w_lift)])
            pairs = []
            for u in range(quiver.n):
                if quiver.arrows[u][i]:
                    middle = dc.from_coords(u, t - 1)
                    pairs.append((self._project_arrow(w_lift, middle),
                                  self._project_arrow(middle, rep)))
                if quiver.arrows[i][u]:
                    middle = dc.from_coords(u, t)
                    pairs.append((self._project_arrow(w_lift, middle),
                                  self._project_arrow(middle, rep)))
            self.meshes.append(pairs)

    # -- graded Hom layers -----------------------------------------------------
    def _source_layers(self, x: int) -> dict:
        if x in self._layers:
            return self._layers[x]
        n = self.n_objects
        dims_by_layer: list[list[int]] = [[1 if v == x else 0 for v in range(n)]]
        mult_by_layer: list[dict[int, list[list[Fraction]]]] = []
        cap = 4 * n + 16
        layer = 0
        while True:
            dims = dims_by_layer[layer]
            if sum(dims) == 0:
                break
            if layer > cap:
                raise MeshError("mesh reduction did not stabilize; model is not standard")
            new_dims = [0] * n
            mult: dict[int, list[list[Fraction]]] = {}
            for v in range(n):
                blocks = [(a, dims[self.arrows[a].source])
                          for a in self.in_arrows[v] if dims[self.arrows[a].source]]
                if not blocks:
                    continue
                offsets = {}
                total = 0
                for a, width in blocks:
                    offsets[a] = total
                    total += width
                relations = []
                if layer >= 1:
                    w = self.tau_c[v]
                    prev_dims = dims_by_layer[layer - 1]
                    prev_mult = mult_by_layer[layer - 1]
                    for g in range(prev_dims[w]):
                        row = [Fraction(0)] * total
                        touched = False
                        for first, second in self.meshes[v]:
                            if second not in offsets:
                                continue
                            block = prev_mult.get(first)
                            if block is None:
                                continue
                            column = [block[r][g] for r in range(len(block))]
                            off = offsets[second]
                            for r, value in enumerate(column):
                                if value:
                                    row[off + r] += value
                                    touched = True
                        if touched:
                            relations.append(row)
                if relations:
                    echelon, pivots = _echelon(relations)
                    free = [c for c in range(total) if c not in pivots]
                else:
                    echelon, pivots = [], []
                    free = list(range(total))
                new_dims[v] = len(free)
                if not free:
                    continue
                free_pos = {c: r for r, c in enumerate(free)}
                for a, width in blocks:
                    matrix = [[Fraction(0)] * width for _ in range(len(free))]
                    for b in range(width):
                        vec = [Fraction(0)] * total
                        vec[offsets[a] + b] = Fraction(1)
                        for row, pivot in zip(echelon, pivots):
                            if vec[pivot]:
                                f = vec[pivot]
                                for c in range(total):
                                    if row[c]:
                                        vec[c] -= f * row[c]
                        for c, value in enumerate(vec):
                            if value:
                                matrix[free_pos[c]][b] = value
                    mult[a] = matrix
            mult_by_layer.append(mult)
            dims_by_layer.append(new_dims)
            layer += 1
        result = {"dims": dims_by_layer, "mult": mult_by_layer}
        self._layers[x] = result
        return result

    def hom_table(self) -> list[list[int]]:
        table = []
        for x in range(self.n_objects):
            layers = self._source_layers(x)["dims"]
            table.append([sum(layer[y] for layer in layers) for y in range(self.n_objects)])
        return table

    # -- radical powers through a subcategory ----------------------------------
    def radical_dims(self, x: int, y: int) -> int:
        layers = self._source_layers(x)["dims"]
        total = sum(layer[y] for layer in layers[1:])
        return total

    def radical_square_through(self, x: int, targets: set[int], summands: set[int]) -> dict[int, int]:
        """dim of rad^2 restricted to factorizations through the summands.

        Returns per target y in `targets` the dimension of
        sum over z in summands of rad(x, z) . rad(z, y), computed by
        propagating every positive-layer basis vector at a summand forward
        along arrow multiplication.
        """
        data = self._source_layers(x)
        dims_by_layer, mult_by_layer = data["dims"], data["mult"]
        depth = len(mult_by_layer)
        spans: dict[tuple[int, int], SpanBasis] = {}
        frontier: list[tuple[int, int, list[Fraction]]] = []

        def feed(layer, v, vec):
            key = (layer, v)
            basis = spans.get(key)
            if basis is None:
                basis = spans[key] = SpanBasis(dims_by_layer[layer][v])
            if basis.add(vec):
                frontier.append((layer, v, vec))

        for layer in range(1, min(depth + 1, len(dims_by_layer))):
            for z in summands:
                for b in range(dims_by_layer[layer][z]):
                    vec = [Fraction(0)] * dims_by_layer[layer][z]
                    vec[b] = Fraction(1)
                    # seeds count only once propagated: both factors of the
                    # factorization must have positive length
                    frontier.append((layer, z, vec))
        collected: dict[tuple[int, int], SpanBasis] = {}
        while frontier:
            layer, v, vec = frontier.pop()
            if layer >= depth:
                continue
            mult = mult_by_layer[layer]
            for a in self.out_arrows[v]:
                block = mult.get(a)
                if block is None or self.arrows[a].source != v:
                    continue
                image = [sum((row[c] * vec[c] for c in range(len(vec)) if vec[c]), Fraction(0))
                         for row in block]
                if not any(image):
                    continue
                target = self.arrows[a].target
                key = (layer + 1, target)
                if target in targets:
                    basis = collected.get(key)
                    if basis is None:
                        basis = collected[key] = SpanBasis(len(image))
                    basis.add(list(image))
                feed(layer + 1, target, image)
        out = {y: 0 for y in targets}
        for (layer, v), basis in collected.items():
            out[v] += basis.rank
        return out


def mesh_hom(model: OrbitModel) -> MeshComputation:
    """Independent mesh-category Hom computation for the model."""
    return MeshComputation(model)


@dataclass(frozen=True)
class EndoQuiver:
    quiver: Quiver
    opposite: Quiver
    convention: str


def endo_quiver(model: OrbitModel, candidate: TiltingCandidate,
                mesh: MeshComputation | None = None) -> EndoQuiver:
    """Gabriel quiver of the candidate's endomorphism algebra.

    Arrow counts are dim rad/rad^2 inside the additive closure of the
    summands, with composition taken from the mesh structure; arrows follow
    irreducible-map direction, and the opposite quiver is emitted alongside
    (the other printing convention for the same algebra).
    """
    mesh = mesh or MeshComputation(model)
    table = mesh.hom_table()
    if table != model.hom:
        raise MeshError("mesh Hom table disagrees with the orbit-sum table")
    summands = [model._resolve(s) for s in candidate.summands]
    member = set(summands)
    size = len(summands)
    counts = [[0] * size for _ in range(size)]
    for col, x in enumerate(summands):
        rad2 = mesh.radical_square_through(x, member, member)
        for row, y in enumerate(summands):
            rad = mesh.radical_dims(x, y)
            counts[col][row] = rad - rad2[y]
            if counts[col][row] < 0:
                raise MeshError("rad^2 exceeded rad; composition bookkeeping broken")
    labels = [model.object_labels()[s] for s in summands]
    quiver = Quiver.from_matrix([[counts[i][j] for j in range(size)] for i in range(size)],
                                labels)
    return EndoQuiver(quiver, quiver.opposite(),
                      "arrows count irreducible maps source -> target")
