"""Radical and socle series of baby Verma modules in the singular block.

The closed form: the j-th radical layer of the baby Verma with highest
weight lam_i + p nu is multiplicity-free over pairs (X, Y), where X picks
k slots from [1, i], Y picks j - k slots from [i + 2, n + 1], and the pair
contributes the label (i + j - 2k, nu - eps_X + eps_Y).  The Loewy length
is always n + 1, layer j carries C(n, j) composition factors, and the
modules are rigid, so the socle series and the dual Verma's radical series
are index reversals of the same list.

Layers are returned as fresh ``dict[label, multiplicity]`` maps, ordered
bottom index 0 = head for radical series.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .block import BlockContext, IrreducibleLabel
from .lattice import Weight, eps_subset, fundamental

__all__ = [
    "rad_layers_z_g1",
    "rad_layers_z_g1t",
    "soc_layers_z_g1t",
    "rad_layers_zprime_g1t",
    "composition_class_z_g1",
    "composition_class_z_g1t",
    "parabolic_m_structure",
    "layer_sizes",
]


def _check_index(ctx: BlockContext, i: int) -> None:
    if not 0 <= i <= ctx.n:
        raise ValueError(f"block index i must be in [0, {ctx.n}] (got {i})")


def rad_layers_z_g1(ctx: BlockContext, i: int) -> list[dict[int, int]]:
    """Radical layers of the baby Verma over the Frobenius kernel alone.

    Twists are invisible here, so layers are keyed by block index:
    layer j holds lam_{i+j-2k} with multiplicity C(i, k) C(n-i, j-k).
    """
    _check_index(ctx, i)
    n = ctx.n
    layers: list[dict[int, int]] = []
    for j in range(n + 1):
        layer: dict[int, int] = {}
        for k in range(0, min(i, j) + 1):
            t = i + j - 2 * k
            mult = comb(i, k) * comb(n - i, j - k)
            if 0 <= t <= n and mult:
                layer[t] = mult
        layers.append(layer)
    return layers


def rad_layers_z_g1t(
    ctx: BlockContext, i: int, nu: Weight
) -> list[dict[IrreducibleLabel, int]]:
    """Radical layers of the baby Verma with highest weight lam_i + p nu.

    Every composition factor within a layer occurs with multiplicity one;
    summed over the twist, layer j matches `rad_layers_z_g1`.
    """
    _check_index(ctx, i)
    n = ctx.n
    if nu.rank != n:
        raise ValueError("rank mismatch")
    layers: list[dict[IrreducibleLabel, int]] = []
    for j in range(n + 1):
        layer: dict[IrreducibleLabel, int] = {}
        for k in range(0, min(i, j) + 1):
            t = i + j - 2 * k
            if t > n:
                continue
            for xs in combinations(range(1, i + 1), k):
                shift_x = eps_subset(n, xs)
                for ys in combinations(range(i + 2, n + 2), j - k):
                    label = IrreducibleLabel(t, nu - shift_x + eps_subset(n, ys))
                    assert label not in layer, "layer labels must be distinct"
                    layer[label] = 1
        layers.append(layer)
    return layers


def soc_layers_z_g1t(
    ctx: BlockContext, i: int, nu: Weight
) -> list[dict[IrreducibleLabel, int]]:
    """Socle layers of the same baby Verma, bottom up.

    Entry j is the (j+1)-st socle layer; rigidity makes it equal to
    radical layer n - j, so the list is the radical list reversed.
    """
    return list(reversed(rad_layers_z_g1t(ctx, i, nu)))


def rad_layers_zprime_g1t(
    ctx: BlockContext, i: int, nu: Weight
) -> list[dict[IrreducibleLabel, int]]:
    """Radical layers of the dual (opposite) baby Verma with the same label.

    Its j-th radical layer equals radical layer n - j of the ordinary baby
    Verma, so the list is again the reversal.
    """
    return list(reversed(rad_layers_z_g1t(ctx, i, nu)))


def composition_class_z_g1(ctx: BlockContext, i: int) -> dict[int, int]:
    """Total composition multiplicities over the Frobenius kernel."""
    total: dict[int, int] = {}
    for layer in rad_layers_z_g1(ctx, i):
        for t, mult in layer.items():
            total[t] = total.get(t, 0) + mult
    return total


def composition_class_z_g1t(
    ctx: BlockContext, i: int, nu: Weight
) -> dict[IrreducibleLabel, int]:
    """Total composition multiplicities with twists tracked."""
    total: dict[IrreducibleLabel, int] = {}
    for layer in rad_layers_z_g1t(ctx, i, nu):
        for label, mult in layer.items():
            total[label] = total.get(label, 0) + mult
    return total


def parabolic_m_structure(
    ctx: BlockContext, i: int, nu: Weight, side: str
) -> list[dict[IrreducibleLabel, int]]:
    """Radical layers of the parabolic baby cover of lam_i + p nu.

    Away from its degenerate edge each cover is uniserial of length two,
    head (i, nu) on top of a single twisted neighbour; at the edge (side
    "I" with i = n, side "J" with i = 0) the cover is the full baby Verma
    and its layers are returned instead.
    """
    _check_index(ctx, i)
    n = ctx.n
    head = IrreducibleLabel(i, nu)
    if side == "I":
        if i == n:
            return rad_layers_z_g1t(ctx, n, nu)
        sub = IrreducibleLabel(i + 1, nu - fundamental(n, n))
    elif side == "J":
        if i == 0:
            return rad_layers_z_g1t(ctx, 0, nu)
        sub = IrreducibleLabel(i - 1, nu - fundamental(n, 1))
    else:
        raise ValueError(f'side must be "I" or "J" (got {side!r})')
    return [{head: 1}, {sub: 1}]


def layer_sizes(layers: list[dict]) -> list[int]:
    """Total multiplicity in each layer."""
    return [sum(layer.values()) for layer in layers]
