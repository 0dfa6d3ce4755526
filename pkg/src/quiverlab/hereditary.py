"""Exact module-category computations for path algebras of acyclic quivers.

Conventions, fixed once:

* Representations are covariant: an arrow a: i -> j carries a matrix
  M_a: M_i -> M_j.  These are the right modules over the path algebra in
  reading order, so the projective P_i has (P_i)_j = span(paths i -> j);
  consequently nonzero maps between projectives run against the quiver
  arrows (Hom(P_j, P_i) = paths i -> j).
* Euler form <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j, which equals
  dim Hom - dim Ext^1 on modules with those dimension vectors.
* Cartan matrix C has column i = dim P_i; the Coxeter matrix is
  Phi = -C^T C^{-1}, so Phi . dim P_i = -dim I_i and Phi tracks the AR
  translate on non-projectives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .quiver import Quiver, QuiverError

DimVector = tuple[int, ...]


class InternalInconsistencyError(RuntimeError):
    """A computed invariant failed; signals a bug, never valid output."""


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: DimVector
    matrices: tuple[tuple[tuple[Fraction, ...], ...], ...]
    """One matrix per entry of quiver.arrow_occurrences(), shape dims[target] x dims[source]."""

    def __post_init__(self):
        occs = self.quiver.arrow_occurrences()
        if len(self.dims) != self.quiver.n:
            raise QuiverError("dimension vector length != vertex count")
        if len(self.matrices) != len(occs):
            raise QuiverError("need one matrix per arrow")
        for (i, j), mat in zip(occs, self.matrices):
            if len(mat) != self.dims[j] or any(len(row) != self.dims[i] for row in mat):
                raise QuiverError(f"matrix for arrow {i}->{j} has wrong shape")


def _freeze_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def make_representation(quiver: Quiver, dims, matrices) -> Representation:
    return Representation(quiver, tuple(dims), tuple(_freeze_matrix(m) for m in matrices))


def zero_matrix_shape(rows: int, cols: int):
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def simple_representation(quiver: Quiver, vertex: int) -> Representation:
    dims = tuple(1 if v == vertex else 0 for v in range(quiver.n))
    mats = [zero_matrix_shape(dims[j], dims[i]) for i, j in quiver.arrow_occurrences()]
    return Representation(quiver, dims, tuple(mats))


# ---------------------------------------------------------------------------
# Euler form, Cartan and Coxeter data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EulerData:
    cartan: tuple[tuple[int, ...], ...]
    coxeter: tuple[tuple[int, ...], ...]
    coxeter_inverse: tuple[tuple[int, ...], ...]


def euler_form(quiver: Quiver, d, e) -> int:
    if not quiver.is_acyclic():
        raise QuiverError("Euler form requires an acyclic quiver")
    n = quiver.n
    if len(d) != n or len(e) != n:
        raise QuiverError("dimension vector length mismatch")
    value = sum(d[i] * e[i] for i in range(n))
    for i in range(n):
        row = quiver.arrows[i]
        for j in range(n):
            if row[j]:
                value -= row[j] * d[i] * e[j]
    return value


def _path_count_matrix(quiver: Quiver) -> list[list[int]]:
    """paths[i][j] = number of paths i -> j (finite: quiver acyclic)."""
    n = quiver.n
    paths = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for src in reversed(quiver.topological_order()):
        for j in range(n):
            mult = quiver.arrows[src][j]
            if mult:
                for t in range(n):
                    if paths[j][t]:
                        paths[src][t] += mult * paths[j][t]
    return paths


def coxeter(quiver: Quiver) -> EulerData:
    if not quiver.is_acyclic():
        raise QuiverError("Coxeter data requires an acyclic quiver")
    n = quiver.n
    paths = _path_count_matrix(quiver)
    cartan = [[paths[j][i] for j in range(n)] for i in range(n)]  # column i = dim P_i
    cartan_inv = linalg.invert(cartan)
    phi = linalg.mat_mul([[-cartan[j][i] for j in range(n)] for i in range(n)], cartan_inv)
    phi_int = tuple(tuple(int(x) for x in row) for row in phi)
    if any(Fraction(phi_int[i][j]) != phi[i][j] for i in range(n) for j in range(n)):
        raise InternalInconsistencyError("Coxeter matrix is not integral")
    phi_inv = linalg.invert([[Fraction(x) for x in row] for row in phi_int])
    phi_inv_int = tuple(tuple(int(x) for x in row) for row in phi_inv)
    return EulerData(tuple(tuple(row) for row in cartan), phi_int, phi_inv_int)


def apply_matrix(matrix, vector) -> tuple[int, ...]:
    return tuple(sum(matrix[i][j] * vector[j] for j in range(len(vector)))
                 for i in range(len(matrix)))


# ---------------------------------------------------------------------------
# Dynkin classification and positive roots
# ---------------------------------------------------------------------------

def dynkin_type(quiver: Quiver) -> str | None:
    """'An' / 'Dn' / 'En' when the underlying graph is that diagram, else None."""
    n = quiver.n
    edges = set()
    for i in range(n):
        if quiver.arrows[i][i]:
            return None
        for j in range(i + 1, n):
            mult = quiver.arrows[i][j] + quiver.arrows[j][i]
            if mult > 1:
                return None
            if mult:
                edges.add((i, j))
    if len(edges) != n - 1:
        return None
    adjacency = [[] for _ in range(n)]
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        return None
    degrees = sorted(len(a) for a in adjacency)
    if n == 1:
        return "A1"
    if degrees[-1] <= 2:
        return f"A{n}"
    if degrees[-1] > 3 or degrees.count(3) > 1:
        return None
    branch = next(v for v in range(n) if len(adjacency[v]) == 3)
    arm_lengths = []
    for start in adjacency[branch]:
        length, prev, cur = 1, branch, start
        while True:
            nxt = [w for w in adjacency[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arm_lengths.append(length)
    arms = sorted(arm_lengths)
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{n}"
    return None


def is_dynkin(quiver: Quiver) -> bool:
    return dynkin_type(quiver) is not None


def _symmetrized_form(quiver: Quiver):
    n = quiver.n
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = 2
        for j in range(n):
            if i != j and (quiver.arrows[i][j] or quiver.arrows[j][i]):
                b[i][j] = -(quiver.arrows[i][j] + quiver.arrows[j][i])
    return b


def positive_roots(quiver: Quiver) -> list[DimVector]:
    """All positive roots of the underlying diagram, via reflection closure."""
    if dynkin_type(quiver) is None:
        raise QuiverError("infinite type: positive roots are only enumerated for Dynkin quivers")
    n = quiver.n
    b = _symmetrized_form(quiver)
    simples = [tuple(1 if i == v else 0 for i in range(n)) for v in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        root = frontier.pop()
        for v in range(n):
            pairing = sum(b[v][j] * root[j] for j in range(n))
            reflected = tuple(root[j] - (pairing if j == v else 0) for j in range(n))
            if all(x >= 0 for x in reflected) and reflected not in seen:
                seen.add(reflected)
                frontier.append(reflected)
    return sorted(seen, key=lambda r: (sum(r), r))


def tits_form(quiver: Quiver, d) -> int:
    return euler_form(quiver, d, d)


# ---------------------------------------------------------------------------
# Indecomposables by reflection functors
# ---------------------------------------------------------------------------

def _reflect_quiver(quiver: Quiver, k: int) -> Quiver:
    n = quiver.n
    arrows = [list(row) for row in quiver.arrows]
    for j in range(n):
        if j != k:
            arrows[k][j], arrows[j][k] = arrows[j][k], arrows[k][j]
    return Quiver(tuple(tuple(r) for r in arrows), quiver.labels)


def _simple_reflection(quiver: Quiver, k: int, root):
    b = _symmetrized_form(quiver)
    pairing = sum(b[k][j] * root[j] for j in range(len(root)))
    return tuple(root[j] - (pairing if j == k else 0) for j in range(len(root)))


def _expand_at_source(quiver_before: Quiver, k: int, rep: Representation) -> Representation:
    """Inverse reflection at k: rep lives over sigma_k(quiver_before) where k
    is a source; the result lives over quiver_before where k is a sink."""
    reflected = rep.quiver
    occs_ref = reflected.arrow_occurrences()
    out_idx = [t for t, (i, j) in enumerate(occs_ref) if i == k]
    out_targets = [occs_ref[t][1] for t in out_idx]
    # eta: M_k -> direct sum of M_j over arrows k -> j
    total = sum(rep.dims[j] for j in out_targets)
    eta = [[Fraction(0)] * rep.dims[k] for _ in range(total)]
    offset = 0
    offsets = {}
    for t, j in zip(out_idx, out_targets):
        offsets[t] = offset
        mat = rep.matrices[t]
        for r in range(rep.dims[j]):
            eta[offset + r] = list(mat[r])
        offset += rep.dims[j]
    proj_rows = linalg.left_nullspace(eta, rows=total)
    new_dim = len(proj_rows)
    dims = list(rep.dims)
    dims[k] = new_dim
    occs_new = quiver_before.arrow_occurrences()
    matrices = []
    consumed = {t: False for t in out_idx}
    for i, j in occs_new:
        if j == k:
            # companion of some reflected arrow k -> i
            t = next(t2 for t2 in out_idx if occs_ref[t2][1] == i and not consumed[t2])
            consumed[t] = True
            off = offsets[t]
            block = [[proj_rows[r][off + c] for c in range(rep.dims[i])]
                     for r in range(new_dim)]
            matrices.append(_freeze_matrix(block))
        else:
            t = _matching_occurrence(occs_ref, occs_new, matrices, i, j)
            matrices.append(rep.matrices[t])
    return Representation(quiver_before, tuple(dims), tuple(matrices))


def _matching_occurrence(occs_ref, occs_new, built, i, j):
    """Index of the (i, j) occurrence in occs_ref matching the one being built."""
    ordinal = sum(1 for t in range(len(built)) if occs_new[t] == (i, j))
    count = 0
    for t, occ in enumerate(occs_ref):
        if occ == (i, j):
            if count == ordinal:
                return t
            count += 1
    raise InternalInconsistencyError("arrow bookkeeping out of sync")


def indecomposable_rep(quiver: Quiver, root) -> Representation:
    """The indecomposable with the given root as dimension vector (unique up
    to isomorphism), built by reflecting down to a simple and expanding back."""
    root = tuple(root)
    if root not in set(positive_roots(quiver)):
        raise QuiverError(f"{root} is not a positive root of this quiver")
    steps: list[tuple[Quiver, int]] = []
    current_quiver, current_root = quiver, root
    total_steps = 0
    while sum(current_root) > 1:
        # Reflect along an admissible sink sequence: in reverse topological
        # order every vertex is a sink of the orientation when its turn
        # comes, and a positive root stays positive until it hits a simple.
        for k in reversed(current_quiver.topological_order()):
            if sum(current_root) == 1:
                break
            reflected = _simple_reflection(current_quiver, k, current_root)
            if any(x < 0 for x in reflected):
                raise InternalInconsistencyError("reflection march left the positive roots")
            steps.append((current_quiver, k))
            current_quiver = _reflect_quiver(current_quiver, k)
            current_root = reflected
            total_steps += 1
        if total_steps > 64 * quiver.n:
            raise InternalInconsistencyError("reflection march did not terminate")
    vertex = current_root.index(1)
    rep = simple_representation(current_quiver, vertex)
    for quiver_before, k in reversed(steps):
        rep = _expand_at_source(quiver_before, k, rep)
    if rep.dims != root:
        raise InternalInconsistencyError(f"reflection construction produced {rep.dims}, wanted {root}")
    return rep


# ---------------------------------------------------------------------------
# Hom and Ext
# ---------------------------------------------------------------------------

def hom_dim(m: Representation, n: Representation) -> int:
    """Dimension of the intertwiner space {f : f_j M_a = N_a f_i for all a}."""
    if m.quiver.arrows != n.quiver.arrows:
        raise QuiverError("representations live over different quivers")
    verts = m.quiver.n
    offsets = []
    total = 0
    for v in range(verts):
        offsets.append(total)
        total += n.dims[v] * m.dims[v]
    if total == 0:
        return 0
    rows = []
    occs = m.quiver.arrow_occurrences()
    for idx, (i, j) in enumerate(occs):
        ma, na = m.matrices[idx], n.matrices[idx]
        # equation block: f_j M_a - N_a f_i = 0, one row per (r, c)
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = [Fraction(0)] * total
                for t in range(m.dims[j]):
                    if ma[t][c]:
                        row[offsets[j] + r * m.dims[j] + t] += ma[t][c]
                for s in range(n.dims[i]):
                    if na[r][s]:
                        row[offsets[i] + s * m.dims[i] + c] -= na[r][s]
                if any(row):
                    rows.append(row)
    if not rows:
        return total
    return total - linalg.rank(rows)


def ext_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1 = dim Hom - <dim m, dim n>; negative results are a bug."""
    if not m.quiver.is_acyclic():
        raise QuiverError("Ext via the Euler form needs an acyclic quiver")
    value = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if value < 0:
        raise InternalInconsistencyError(
            f"negative Ext dimension for {m.dims} -> {n.dims}")
    return value


# ---------------------------------------------------------------------------
# Cached per-quiver engine
# ---------------------------------------------------------------------------

class HereditaryEngine:
    """Memoized roots / representations / Hom tables for one Dynkin quiver."""

    def __init__(self, quiver: Quiver):
        kind = dynkin_type(quiver)
        if kind is None:
            raise QuiverError("engine requires a Dynkin quiver")
        if not quiver.is_acyclic():
            raise QuiverError("engine requires an acyclic orientation")
        self.quiver = quiver
        self.kind = kind
        self.euler_data = coxeter(quiver)
        self.roots = positive_roots(quiver)
        self.root_set = set(self.roots)
        n = quiver.n
        cartan = self.euler_data.cartan
        self.projective_dims = [tuple(cartan[r][i] for r in range(n)) for i in range(n)]
        self.injective_dims = [tuple(cartan[i][r] for r in range(n)) for i in range(n)]
        self.projective_index = {d: i for i, d in enumerate(self.projective_dims)}
        self.injective_index = {d: i for i, d in enumerate(self.injective_dims)}
        self._reps: dict[DimVector, Representation] = {}
        self._hom: dict[tuple[DimVector, DimVector], int] = {}
        self._ext: dict[tuple[DimVector, DimVector], int] = {}
        self.coxeter_number = self._order_of_coxeter()

    def _order_of_coxeter(self) -> int:
        n = self.quiver.n
        phi = self.euler_data.coxeter
        power = phi
        identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        for order in range(1, 64):
            if tuple(tuple(row) for row in power) == identity:
                return order
            power = tuple(tuple(sum(power[i][k] * phi[k][j] for k in range(n))
                                for j in range(n)) for i in range(n))
        raise InternalInconsistencyError("Coxeter matrix order not found below 64")

    def representation(self, root) -> Representation:
        root = tuple(root)
        if root not in self._reps:
            self._reps[root] = indecomposable_rep(self.quiver, root)
        return self._reps[root]

    def hom(self, root_a, root_b) -> int:
        key = (tuple(root_a), tuple(root_b))
        if key not in self._hom:
            self._hom[key] = hom_dim(self.representation(key[0]), self.representation(key[1]))
        return self._hom[key]

    def ext(self, root_a, root_b) -> int:
        key = (tuple(root_a), tuple(root_b))
        if key not in self._ext:
            value = self.hom(*key) - euler_form(self.quiver, *key)
            if value < 0:
                raise InternalInconsistencyError("negative Ext dimension in engine")
            self._ext[key] = value
        return self._ext[key]

    def is_projective(self, root) -> bool:
        return tuple(root) in self.projective_index

    def is_injective(self, root) -> bool:
        return tuple(root) in self.injective_index

    def tau(self, root) -> DimVector | None:
        root = tuple(root)
        if root not in self.root_set:
            raise QuiverError(f"{root} is not a positive root")
        if root in self.projective_index:
            return None
        image = apply_matrix(self.euler_data.coxeter, root)
        if image not in self.root_set:
            raise InternalInconsistencyError("tau left the root system")
        return image

    def tau_inverse(self, root) -> DimVector | None:
        root = tuple(root)
        if root not in self.root_set:
            raise QuiverError(f"{root} is not a positive root")
        if root in self.injective_index:
            return None
        image = apply_matrix(self.euler_data.coxeter_inverse, root)
        if image not in self.root_set:
            raise InternalInconsistencyError("tau^{-1} left the root system")
        return image


_ENGINES: dict[tuple, HereditaryEngine] = {}


def engine_for(quiver: Quiver) -> HereditaryEngine:
    key = (quiver.arrows, quiver.labels)
    if key not in _ENGINES:
        _ENGINES[key] = HereditaryEngine(quiver)
    return _ENGINES[key]


def tau_module(quiver: Quiver, root) -> DimVector | None:
    """AR translate on dimension vectors; None exactly for projectives."""
    return engine_for(quiver).tau(root)


def roots_json(quiver: Quiver) -> dict:
    """Debug export: roots plus the projective/injective tables."""
    engine = engine_for(quiver)
    return {
        "quiver": quiver.to_json(),
        "type": engine.kind,
        "coxeter_number": engine.coxeter_number,
        "positive_roots": [list(r) for r in engine.roots],
        "projectives": [list(r) for r in engine.projective_dims],
        "injectives": [list(r) for r in engine.injective_dims],
    }


# ---------------------------------------------------------------------------
# Transjective arithmetic (preprojective slices of any acyclic quiver)
# ---------------------------------------------------------------------------

def _preprojective_dims(quiver: Quiver, vertex: int, power: int) -> DimVector:
    data = coxeter(quiver)
    n = quiver.n
    dims = tuple(data.cartan[r][vertex] for r in range(n))
    for _ in range(power):
        dims = apply_matrix(data.coxeter_inverse, dims)
        if any(x < 0 for x in dims) or all(x == 0 for x in dims):
            raise QuiverError("outside transjective range")
    return dims


def transjective_hom_ext(quiver: Quiver, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """(dim Hom, dim Ext^1) between tau^{-a} P_i and tau^{-b} P_j.

    Valid on the preprojective component (a, b >= 0), where the slice order
    makes one of the two dimensions vanish outright.
    """
    if not quiver.is_acyclic():
        raise QuiverError("transjective arithmetic needs an acyclic quiver")
    (i, a), (j, b) = x, y
    if a < 0 or b < 0:
        raise QuiverError("outside transjective range")
    if not (0 <= i < quiver.n and 0 <= j < quiver.n):
        raise QuiverError("vertex out of range")
    dx = _preprojective_dims(quiver, i, a)
    dy = _preprojective_dims(quiver, j, b)
    if a <= b:
        hom = euler_form(quiver, dx, dy)
        if hom < 0:
            raise InternalInconsistencyError("negative Hom in transjective range")
        return hom, 0
    ext = -euler_form(quiver, dx, dy)
    data = coxeter(quiver)
    cross_check = euler_form(quiver, dy, apply_matrix(data.coxeter, dx))
    if ext != cross_check or ext < 0:
        raise InternalInconsistencyError("transjective Ext cross-check failed")
    return 0, ext
