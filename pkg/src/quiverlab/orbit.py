"""Finite Hom-table models of orbit categories of Dynkin derived categories.

An automorphism F = tau^a S^b acts on the indecomposables; the quotient
keeps one representative per orbit and sums Hom over all F-twists of the
target.  The key identity making everything finite and exact is

    F^(2h) = S^(-2T),   T = 2a - h b,   h = Coxeter number,

so shifts along an orbit form 2h arithmetic progressions with common
difference -2T.  F is a proper quotient automorphism iff T != 0, and then
the model has exactly n|T|/2 objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derived import AutoWord, DerivedCategory, DerivedObject, derived_category, object_label
from .quiver import Quiver, QuiverError

ENUMERATION_CAP = 40


@dataclass(frozen=True)
class TiltingCandidate:
    summands: tuple[int, ...]  # object indices in the model
    d: int

    def __post_init__(self):
        if len(set(self.summands)) != len(self.summands):
            raise QuiverError("candidate summands must be pairwise distinct")


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    reason: str | None = None
    witness: tuple | None = None


class OrbitModel:
    """Objects, complete Hom table and suspension action of D/F."""

    def __init__(self, quiver: Quiver, auto: AutoWord):
        self.quiver = quiver
        self.auto = auto
        self.dc: DerivedCategory = derived_category(quiver)
        h = self.dc.coxeter_number
        self.twist = 2 * auto.tau - h * auto.s
        if self.twist == 0:
            raise QuiverError(
                "not a proper orbit quotient: the automorphism has finite "
                "order on objects (2*tau == h*s)")
        self.period = 2 * h
        self._orbit_rep: dict[DerivedObject, DerivedObject] = {}
        self.objects: list[DerivedObject] = self._enumerate_objects()
        self.index = {obj: k for k, obj in enumerate(self.objects)}
        self.hom: list[list[int]] = self._hom_table()
        self.suspension: list[int] = [
            self.index[self.project(self.dc.suspend(obj))] for obj in self.objects
        ]
        if sorted(self.suspension) != list(range(len(self.objects))):
            raise QuiverError("suspension does not act bijectively on orbits")

    # -- orbits ---------------------------------------------------------------
    def _apply_f(self, obj: DerivedObject, power: int = 1) -> DerivedObject:
        word = AutoWord(self.auto.tau * power, self.auto.s * power)
        return self.dc.apply_auto(word, obj)

    def _orbit_members_in_band(self, obj: DerivedObject, lo: int, hi: int):
        """All orbit members with shift in [lo, hi], via the 2h progressions."""
        members = []
        walk = obj
        twist2 = 2 * self.twist
        for _ in range(self.period):
            base_shift = walk.shift
            # solve lo <= base_shift - 2T k <= hi over integers k
            spread = (abs(base_shift) + abs(hi) + abs(lo)) // abs(twist2) + 2
            for k in range(-spread, spread + 1):
                if lo <= base_shift - twist2 * k <= hi:
                    members.append(DerivedObject(walk.root, base_shift - twist2 * k))
            walk = self._apply_f(walk)
        return members

    def _rep_key(self, obj: DerivedObject):
        vertex, t = self.dc.coords(obj)
        return (obj.shift, t, vertex)

    def project(self, obj: DerivedObject) -> DerivedObject:
        """Representative of obj's orbit: least (shift, slice, vertex) with shift >= 0."""
        cached = self._orbit_rep.get(obj)
        if cached is not None:
            return cached
        band = max(abs(self.auto.tau) + abs(self.auto.s), 1)
        members = self._orbit_members_in_band(obj, 0, band)
        if not members:
            raise QuiverError("orbit has no member in the nonnegative shift band")
        rep = min(members, key=self._rep_key)
        self._orbit_rep[obj] = rep
        return rep

    def _enumerate_objects(self) -> list[DerivedObject]:
        band = max(abs(self.auto.tau) + abs(self.auto.s), 1)
        reps = set()
        for root in self.dc.engine.roots:
            for shift in range(band + 1):
                reps.add(self.project(DerivedObject(root, shift)))
        expected = self.quiver.n * abs(self.twist)
        if 2 * len(reps) != expected:
            raise QuiverError(
                f"orbit enumeration found {len(reps)} orbits, expected {expected / 2}")
        return sorted(reps, key=self._rep_key)

    # -- Hom ------------------------------------------------------------------
    def _twist_walk(self, y: DerivedObject) -> list[DerivedObject]:
        """F^r y for the 2h residues r; all other powers are pure shifts."""
        walk = y
        out = []
        for _ in range(self.period):
            out.append(walk)
            walk = self._apply_f(walk)
        return out

    def _hom_table(self) -> list[list[int]]:
        engine = self.dc.engine
        twist2 = 2 * self.twist
        walks = [self._twist_walk(y) for y in self.objects]
        table = []
        for x in self.objects:
            row = []
            shift0, shift1 = x.shift, x.shift + 1
            for cells in walks:
                total = 0
                for member in cells:
                    if (member.shift - shift0) % twist2 == 0:
                        total += engine.hom(x.root, member.root)
                    if (member.shift - shift1) % twist2 == 0:
                        total += engine.ext(x.root, member.root)
                row.append(total)
            table.append(row)
        return table

    def _orbit_sum(self, x: DerivedObject, y: DerivedObject) -> int:
        """sum over p of Hom_D(x, F^p y); support solved exactly."""
        total = 0
        twist2 = 2 * self.twist
        for member in self._twist_walk(y):
            for target_shift in (x.shift, x.shift + 1):
                if (member.shift - target_shift) % twist2 == 0:
                    total += self.dc.hom(x, DerivedObject(member.root, target_shift))
        return total

    def hom_c(self, x, y) -> int:
        return self.hom[self._resolve(x)][self._resolve(y)]

    def _resolve(self, obj) -> int:
        if isinstance(obj, int):
            if not 0 <= obj < len(self.objects):
                raise QuiverError(f"object index {obj} out of range")
            return obj
        if obj in self.index:
            return self.index[obj]
        raise QuiverError(f"{obj} is not an object of this model")

    def suspension_power(self, power: int) -> list[int]:
        n = len(self.objects)
        perm = list(range(n))
        if power >= 0:
            for _ in range(power):
                perm = [self.suspension[p] for p in perm]
        else:
            inverse = [0] * n
            for i, p in enumerate(self.suspension):
                inverse[p] = i
            for _ in range(-power):
                perm = [inverse[p] for p in perm]
        return perm

    def projective_slice(self) -> tuple[int, ...]:
        """Indices of the images of the projectives (P_i, 0)."""
        return tuple(self.index[self.project(self.dc.projective(i))]
                     for i in range(self.quiver.n))

    def object_labels(self) -> list[str]:
        return [object_label(self.dc, obj) for obj in self.objects]

    def to_json(self, name: str | None = None) -> dict:
        data = {
            "schema": "v1",
            "quiver": self.quiver.to_json(),
            "auto": {"tau": self.auto.tau, "s": self.auto.s},
            "objects": [
                {"root": list(obj.root), "shift": obj.shift,
                 "label": object_label(self.dc, obj)}
                for obj in self.objects
            ],
            "hom": [list(row) for row in self.hom],
            "suspension": list(self.suspension),
        }
        if name is not None:
            data["name"] = name
        return data


def build_orbit_model(quiver: Quiver, auto) -> OrbitModel:
    """Model of the orbit category D/F for F = tau^a S^b (checked proper)."""
    if isinstance(auto, tuple):
        auto = AutoWord(*auto)
    return OrbitModel(quiver, auto)


def cluster_category(quiver: Quiver, d: int = 2) -> OrbitModel:
    return build_orbit_model(quiver, AutoWord.cluster(d))


# ---------------------------------------------------------------------------
# Calabi-Yau duality, rigidity, cluster-tilting
# ---------------------------------------------------------------------------

def cy_check(model: OrbitModel, d: int) -> CheckResult:
    """hom(X, Y) == hom(Y, S^d X) over every ordered pair."""
    perm = model.suspension_power(d)
    for i in range(len(model.objects)):
        for j in range(len(model.objects)):
            if model.hom[i][j] != model.hom[j][perm[i]]:
                return CheckResult(False, f"duality fails at dimension {d}",
                                   (model.objects[i], model.objects[j]))
    return CheckResult(True)


def is_rigid(model: OrbitModel, obj, d: int) -> bool:
    """No self-extensions in degrees 1..d-1."""
    if d < 2:
        raise QuiverError("rigidity needs d >= 2")
    x = model._resolve(obj)
    return all(model.hom[x][model.suspension_power(j)[x]] == 0 for j in range(1, d))


def is_cluster_tilting(model: OrbitModel, candidate: TiltingCandidate) -> CheckResult:
    """Ext-orthogonality of the summands plus maximality by finite scan."""
    d = candidate.d
    summands = [model._resolve(s) for s in candidate.summands]
    labels = model.object_labels()
    perms = [model.suspension_power(j) for j in range(1, d)]
    for i in summands:
        for k in summands:
            for j, perm in enumerate(perms, start=1):
                if model.hom[i][perm[k]] != 0:
                    return CheckResult(
                        False,
                        f"not rigid: Ext^{j}({labels[i]}, {labels[k]}) = "
                        f"{model.hom[i][perm[k]]}",
                        (model.objects[i], j, model.objects[k]))
    member = set(summands)
    for x in range(len(model.objects)):
        if x in member:
            continue
        if all(model.hom[i][perm[x]] == 0 for i in summands for perm in perms):
            return CheckResult(False,
                               f"not maximal: {labels[x]} is also Ext-orthogonal",
                               (model.objects[x],))
    return CheckResult(True)


def enumerate_cluster_tilting(model: OrbitModel, d: int) -> list[TiltingCandidate]:
    """All maximal d-rigid subsets that pass is_cluster_tilting."""
    count = len(model.objects)
    if count > ENUMERATION_CAP:
        raise QuiverError(f"enumeration capped at {ENUMERATION_CAP} objects (model has {count})")
    perms = [model.suspension_power(j) for j in range(1, d)]
    rigid = [x for x in range(count)
             if all(model.hom[x][perm[x]] == 0 for perm in perms)]
    compatible = {
        x: {y for y in rigid
            if y != x
            and all(model.hom[x][perm[y]] == 0 and model.hom[y][perm[x]] == 0
                    for perm in perms)}
        for x in rigid
    }

    cliques: list[tuple[int, ...]] = []

    def extend(clique: list[int], candidates: set[int], excluded: set[int]):
        if not candidates and not excluded:
            cliques.append(tuple(sorted(clique)))
            return
        pivot_pool = candidates | excluded
        pivot = max(pivot_pool, key=lambda v: len(compatible[v] & candidates))
        for v in sorted(candidates - compatible[pivot]):
            extend(clique + [v], candidates & compatible[v], excluded & compatible[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    extend([], set(rigid), set())
    out = []
    for clique in sorted(cliques):
        cand = TiltingCandidate(clique, d)
        if is_cluster_tilting(model, cand).holds:
            out.append(cand)
    return out


def negative_ext_check(model: OrbitModel, candidate: TiltingCandidate) -> CheckResult:
    """hom(T_i, S^{-j} T_k) = 0 for 1 <= j <= d-2; vacuous for d = 2.

    All pairs are scanned; when the check fails, self-extension pairs are
    scanned first so the returned witness quotes a self-extension whenever
    one exists (the canonical certificate in rigidity language).
    """
    d = candidate.d
    summands = [model._resolve(s) for s in candidate.summands]
    labels = model.object_labels()
    pairs = [(t, t) for t in summands]
    pairs += [(i, k) for i in summands for k in summands if i != k]
    for j in range(1, d - 1):
        perm = model.suspension_power(-j)
        for i, k in pairs:
            if model.hom[i][perm[k]] != 0:
                return CheckResult(
                    False,
                    f"negative extension: Hom({labels[i]}, S^-{j} {labels[k]}) = "
                    f"{model.hom[i][perm[k]]}",
                    (model.objects[i], j, model.objects[k]))
    return CheckResult(True)
