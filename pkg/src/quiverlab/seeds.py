"""Named built-in quivers and orbit-model presets."""

from __future__ import annotations

from .quiver import Quiver, QuiverError

# The cluster-tilting quivers of the representation-infinite preprojective
# algebras of types A5 and D4, in their usual planar drawing.
_A5_PREPROJECTIVE_ARROWS = [
    (1, 0), (0, 2), (2, 1),
    (3, 1), (1, 4), (4, 2), (2, 5),
    (4, 3), (6, 3), (3, 7), (5, 4), (7, 4), (4, 8), (8, 5), (5, 9),
    (7, 6), (8, 7), (9, 8),
]

_D4_PREPROJECTIVE_ARROWS = [
    (0, 1), (0, 2), (0, 3),
    (4, 0),
    (1, 4), (5, 1),
    (2, 4), (6, 2),
    (3, 4), (7, 3),
    (4, 5), (4, 6), (4, 7),
]


def linear_a(n: int) -> Quiver:
    """A_n with linear orientation 1 -> 2 -> ... -> n."""
    return Quiver.from_arrows(n, [(i, i + 1) for i in range(n - 1)],
                              [str(i + 1) for i in range(n)])


def alternating_a(n: int) -> Quiver:
    """A_n with alternating orientation, even vertices as sources.

    For n = 6 the arrows are 2->1, 2->3, 4->3, 4->5, 6->5, which puts the
    projective at vertex i in row i of the standard translation-quiver
    picture (slice arrows P1 -> P2 <- P3 -> P4 <- P5 -> P6).
    """
    arrows = []
    for v in range(1, n + 1):
        if v % 2 == 0:
            if v - 1 >= 1:
                arrows.append((v - 1, v - 2))
            if v + 1 <= n:
                arrows.append((v - 1, v))
    return Quiver.from_arrows(n, arrows, [str(i + 1) for i in range(n)])


def type_d(n: int) -> Quiver:
    """D_n with all arrows toward the branch vertex."""
    if n < 4:
        raise QuiverError("D_n needs n >= 4")
    arrows = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return Quiver.from_arrows(n, arrows, [str(i + 1) for i in range(n)])


def type_e(n: int) -> Quiver:
    """E_n (n in 6..8), arrows along the long arm plus the short branch."""
    if n not in (6, 7, 8):
        raise QuiverError("E_n needs n in {6, 7, 8}")
    arrows = [(i, i + 1) for i in range(n - 2)] + [(n - 1, 2)]
    return Quiver.from_arrows(n, arrows, [str(i + 1) for i in range(n)])


def kronecker(arrow_count: int = 3) -> Quiver:
    return Quiver.from_arrows(2, [(0, 1, arrow_count)], ["1", "2"])


BUILTIN_SEEDS = {
    "a2-linear": lambda: linear_a(2),
    "a3-linear": lambda: linear_a(3),
    "a5-preprojective": lambda: Quiver.from_arrows(10, _A5_PREPROJECTIVE_ARROWS),
    "d4-preprojective": lambda: Quiver.from_arrows(8, _D4_PREPROJECTIVE_ARROWS),
    "a6-alternating": lambda: alternating_a(6),
    "kronecker3": lambda: kronecker(3),
    "cycle3": lambda: Quiver.from_arrows(3, [(0, 1), (1, 2), (2, 0)]),
}

# name -> (seed factory, (tau power, suspension power)) for the HTTP/CLI
# model registry; (-1, d - 1) is the d-cluster automorphism.
MODEL_PRESETS = {
    "a1-cluster": ("__a1", (-1, 1)),
    "a2-cluster": ("a2-linear", (-1, 1)),
    "a3-cluster": ("a3-linear", (-1, 1)),
    "a4-cluster": ("__a4", (-1, 1)),
    "a5-cluster": ("__a5", (-1, 1)),
    "a6-cluster": ("__a6", (-1, 1)),
    "a3-cluster3": ("a3-linear", (-1, 2)),
    "a6-tau4": ("a6-alternating", (4, 0)),
}

_EXTRA = {"__a1": lambda: linear_a(1), "__a4": lambda: linear_a(4),
          "__a5": lambda: linear_a(5), "__a6": lambda: linear_a(6)}


def builtin_seed(name: str) -> Quiver:
    key = name[len("builtin:"):] if name.startswith("builtin:") else name
    factory = BUILTIN_SEEDS.get(key) or _EXTRA.get(key)
    if factory is None:
        raise QuiverError(f"unknown builtin seed {name!r}; "
                          f"known: {', '.join(sorted(BUILTIN_SEEDS))}")
    return factory()


def model_preset(name: str):
    if name not in MODEL_PRESETS:
        raise QuiverError(f"unknown model preset {name!r}; "
                          f"known: {', '.join(sorted(MODEL_PRESETS))}")
    seed_name, auto = MODEL_PRESETS[name]
    return builtin_seed(seed_name), auto
