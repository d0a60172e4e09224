"""The singular block of restricted highest weights for SL(n+1).

For an odd prime p not dividing n + 1, the block under study contains
exactly n + 1 restricted highest weights lam_0, ..., lam_n.  This module
builds that table exactly, exposes the companion weights mu_i and
nu_i = lam_i + rho, and classifies arbitrary weights into the block.

A simple module in the ambient category is labelled by a pair
`IrreducibleLabel(i, nu)`, standing for the restricted class lam_i twisted
by the p-fold translation nu.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import isqrt

from .lattice import Weight, eps_basis, restricted_decompose, rho

__all__ = [
    "IrreducibleLabel",
    "BlockContext",
    "is_odd_prime",
    "make_context",
    "block_weight",
    "mu_weight",
    "nu_weight",
    "classify",
    "label_weight",
]


@dataclass(frozen=True, order=True)
class IrreducibleLabel:
    """Label (i, nu) of a simple module: block index and p-twist."""

    i: int
    nu: Weight


@dataclass(frozen=True)
class BlockContext:
    """Rank, characteristic, and the block's restricted weight table."""

    n: int
    p: int
    lambdas: tuple[Weight, ...]


def is_odd_prime(p: int) -> bool:
    """Deterministic primality for odd p, by trial division.

    >>> [q for q in range(20) if is_odd_prime(q)]
    [3, 5, 7, 11, 13, 17, 19]
    """
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, isqrt(p) + 1, 2))


def make_context(n: int, p: int) -> BlockContext:
    """Build the block for SL(n+1) in characteristic p.

    Raises ValueError naming the violated hypothesis when n < 1, p is not
    an odd prime, or p divides n + 1 (the very-good-prime hypothesis).
    """
    if n < 1:
        raise ValueError(f"rank parameter n must be >= 1 (got {n})")
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, p > 2 (got {p})")
    if (n + 1) % p == 0:
        raise ValueError(
            f"p must not divide n + 1 (very good prime hypothesis; got p = {p}, n + 1 = {n + 1})"
        )
    ctx = BlockContext(n, p, ())
    lambdas = tuple(block_weight(ctx, i, 1) for i in range(n + 1))
    return BlockContext(n, p, lambdas)


def block_weight(ctx: BlockContext, i: int, a: int = 1) -> Weight:
    """The i-th restricted weight of the block family, twist parameter a.

    For 1 <= a <= p - 1 the family at fixed a is a block of its own; the
    canonical table stored in the context is a = 1.  All coordinates are
    p - 1 except: coordinate 1 is a - 1 when i = 0; coordinate n is
    p - a - 1 when i = n; otherwise coordinate i is p - a - 1 and
    coordinate i + 1 is a - 1.
    """
    n, p = ctx.n, ctx.p
    if not 0 <= i <= n:
        raise ValueError(f"block index i must be in [0, {n}] (got {i})")
    if not 1 <= a <= p - 1:
        raise ValueError(f"twist parameter a must be in [1, {p - 1}] (got {a})")
    coords = [p - 1] * n
    if i == 0:
        coords[0] = a - 1
    elif i == n:
        coords[n - 1] = p - a - 1
    else:
        coords[i - 1] = p - a - 1
        coords[i] = a - 1
    return Weight(tuple(coords))


def mu_weight(ctx: BlockContext, i: int) -> Weight:
    """The dot-orbit representative mu_i = eps_{i+1} - rho."""
    n = ctx.n
    if not 0 <= i <= n:
        raise ValueError(f"block index i must be in [0, {n}] (got {i})")
    return eps_basis(n, i + 1) - rho(n)


def nu_weight(ctx: BlockContext, i: int) -> Weight:
    """The shifted weight nu_i = lam_i + rho used by pairings and dimensions."""
    return ctx.lambdas[i] + rho(ctx.n)


def classify(ctx: BlockContext, w: Weight) -> IrreducibleLabel | None:
    """Label of `w` if its restricted part lies in the block, else None.

    Decomposes w = mu + p nu with mu restricted; when mu = lam_i the label
    is (i, nu).
    """
    if w.rank != ctx.n:
        raise ValueError("rank mismatch")
    mu, nu = restricted_decompose(w, ctx.p)
    i = _index_by_coords(ctx).get(mu.coords)
    if i is None:
        return None
    return IrreducibleLabel(i, nu)


def label_weight(ctx: BlockContext, label: IrreducibleLabel) -> Weight:
    """The actual highest weight lam_i + p * nu of a label."""
    return ctx.lambdas[label.i] + ctx.p * label.nu


@cache
def _index_by_coords(ctx: BlockContext) -> dict[tuple[int, ...], int]:
    return {lam.coords: i for i, lam in enumerate(ctx.lambdas)}
