"""Weyl group actions on weights given in Dynkin labels.

The label-tuple helpers (``*_labels``) are the hot paths used by the tensor
and character modules; the :class:`Weight`-level functions wrap them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotDominant
from .root_system import Labels, RootSystem, Weight


@dataclass(frozen=True)
class DominantResult:
    weight: Weight | None
    sign: int
    singular: bool


def reflect_labels(rs: RootSystem, lam: Labels, j: int) -> Labels:
    p = lam[j]
    if not p:
        return lam
    row = rs.cartan[j]
    return tuple(x - p * a for x, a in zip(lam, row))


def dominant_shifted_labels(rs: RootSystem, lam: Labels) -> tuple[Labels, int] | None:
    """Map ``lam + rho`` into the dominant chamber, return ``(result - rho, sign)``.

    Returns None when ``lam + rho`` is singular (on a wall).
    """
    cartan = rs.cartan
    delta = [x + 1 for x in lam]
    sign = 1
    n = len(delta)
    while True:
        for j in range(n):
            if delta[j] < 0:
                p = delta[j]
                row = cartan[j]
                for k in range(n):
                    delta[k] -= p * row[k]
                sign = -sign
                break
        else:
            break
    if 0 in delta:
        return None
    return tuple(x - 1 for x in delta), sign


def dominant_labels(rs: RootSystem, lam: Labels) -> Labels:
    """Unique dominant weight in the Weyl orbit of ``lam``."""
    cartan = rs.cartan
    v = list(lam)
    n = len(v)
    while True:
        for j in range(n):
            if v[j] < 0:
                p = v[j]
                row = cartan[j]
                for k in range(n):
                    v[k] -= p * row[k]
                break
        else:
            return tuple(v)


def orbit_labels(rs: RootSystem, lam: Labels) -> set[Labels]:
    seen = {lam}
    frontier = [lam]
    n = rs.rank
    while frontier:
        nxt = []
        for w in frontier:
            for j in range(n):
                if w[j]:
                    r = reflect_labels(rs, w, j)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
        frontier = nxt
    return seen


def opposition_labels(rs: RootSystem, mu: Labels) -> Labels:
    return dominant_labels(rs, tuple(-x for x in mu))


# ---------------------------------------------------------------------------


def reflect(lam: Weight, j: int) -> Weight:
    """Simple reflection ``s_j``; ``j`` is 0-based."""
    if not 0 <= j < lam.algebra.rank:
        raise IndexOutOfRange(f"simple root index {j} out of range for {lam.algebra.spec}")
    return Weight(reflect_labels(lam.algebra, lam.labels, j), lam.algebra)


def to_dominant_shifted(lam: Weight) -> DominantResult:
    res = dominant_shifted_labels(lam.algebra, lam.labels)
    if res is None:
        return DominantResult(None, 1, True)
    labels, sign = res
    return DominantResult(Weight(labels, lam.algebra), sign, False)


def opposition(mu: Weight) -> Weight:
    """``-w0(mu)``, the highest weight of the dual representation."""
    if not mu.is_dominant:
        raise NotDominant(f"{mu} is not dominant")
    return Weight(opposition_labels(mu.algebra, mu.labels), mu.algebra)


def is_self_dual(mu: Weight) -> bool:
    return opposition(mu) == mu


def opposition_permutation(rs: RootSystem) -> tuple[int, ...]:
    """Permutation ``i -> j`` with ``opposition(w_i) = w_j`` (0-based)."""
    return tuple(opposition(w).labels.index(1) for w in rs.fundamental_weights)


def orbit(lam: Weight) -> set[Labels]:
    return orbit_labels(lam.algebra, lam.labels)
