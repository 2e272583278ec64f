"""Formal characters: weight multiplicities, products and decomposition.

Characters are Weyl-invariant, so they are stored on dominant weights only
and expanded to full Weyl-orbit support when a product or the doubling map
needs it.  Everything here is brute force on purpose: this module is the
oracle layer that the closed forms are checked against.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import MismatchedAlgebra, NonIntegralCharacter, NotDominant, SizeCapExceeded
from .root_system import Labels, RootSystem, Weight
from .weyl import dominant_labels, orbit_labels

DEFAULT_CHAR_CAP = 10**7


@lru_cache(maxsize=None)
def _orbit(rs: RootSystem, lam: Labels) -> frozenset[Labels]:
    return frozenset(orbit_labels(rs, lam))


def _dominant_weights_below(rs: RootSystem, mu: Labels) -> list[Labels]:
    """Dominant weights ``lam <= mu``, sorted by increasing depth below ``mu``."""
    pos = [r.labels for r in rs.positive_roots]
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for lam in frontier:
            for a in pos:
                w = tuple(x - y for x, y in zip(lam, a))
                if w not in seen and all(x >= 0 for x in w):
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    top = rs.height(mu)
    return sorted(seen, key=lambda w: (top - rs.height(w), w))


@lru_cache(maxsize=None)
def _freudenthal(rs: RootSystem, mu: Labels) -> dict[Labels, int]:
    dominant = _dominant_weights_below(rs, mu)
    pos = [(r.labels, r) for r in rs.positive_roots]
    rho = (1,) * rs.rank

    def shifted_norm(w: Labels) -> Fraction:
        v = tuple(a + b for a, b in zip(w, rho))
        return rs.inner(v, v)

    top = shifted_norm(mu)
    mult: dict[Labels, int] = {mu: 1}
    for lam in dominant[1:]:
        total = Fraction(0)
        for a, _ in pos:
            k = 1
            while True:
                w = tuple(x + k * y for x, y in zip(lam, a))
                m = mult.get(dominant_labels(rs, w), 0)
                if not m:
                    break
                total += m * rs.inner(w, a)
                k += 1
        denom = top - shifted_norm(lam)
        value = 2 * total / denom
        if value.denominator != 1:
            raise NonIntegralCharacter(f"Freudenthal produced {value} at {lam}")
        if value:
            mult[lam] = int(value)
    return mult


@dataclass
class WeightMultiplicityMap:
    algebra: RootSystem = field(repr=False)
    entries: dict[Labels, int]
    dominant_only: bool = True

    def expand(self) -> "WeightMultiplicityMap":
        if not self.dominant_only:
            return self
        full: dict[Labels, int] = {}
        for lam, m in self.entries.items():
            for w in _orbit(self.algebra, lam):
                full[w] = m
        return WeightMultiplicityMap(self.algebra, full, dominant_only=False)

    def dimension(self) -> int:
        if self.dominant_only:
            return sum(m * len(_orbit(self.algebra, lam)) for lam, m in self.entries.items())
        return sum(self.entries.values())

    def __getitem__(self, labels: Iterable[int]) -> int:
        labels = tuple(labels)
        if self.dominant_only:
            labels = dominant_labels(self.algebra, labels)
        return self.entries.get(labels, 0)


def _check_dominant(mu: Weight) -> None:
    if not mu.is_dominant:
        raise NotDominant(f"{mu} is not dominant")


def freudenthal_weights(mu: Weight) -> WeightMultiplicityMap:
    """Dominant weight multiplicities of ``V_mu`` by Freudenthal's recursion."""
    _check_dominant(mu)
    return WeightMultiplicityMap(mu.algebra, dict(_freudenthal(mu.algebra, mu.labels)))


def weyl_dim(mu: Weight) -> int:
    """Weyl dimension formula ``prod <mu+rho, a> / <rho, a>`` over positive roots."""
    _check_dominant(mu)
    rs = mu.algebra
    shifted = tuple(x + 1 for x in mu.labels)
    rho = (1,) * rs.rank
    num = Fraction(1)
    for r in rs.positive_roots:
        a = r.labels
        num *= rs.inner(shifted, a) / rs.inner(rho, a)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# virtual characters


@dataclass
class VirtualCharacter:
    """Weyl-invariant formal character, coefficients stored on dominant weights."""

    algebra: RootSystem = field(repr=False)
    terms: dict[Labels, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def _check(self, other: "VirtualCharacter") -> None:
        if self.algebra is not other.algebra:
            raise MismatchedAlgebra(f"{self.algebra.spec} vs {other.algebra.spec}")

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return VirtualCharacter(self.algebra, out)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def scale(self, c: int) -> "VirtualCharacter":
        return VirtualCharacter(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __getitem__(self, labels: Iterable[int]) -> int:
        return self.terms.get(tuple(labels), 0)

    def support_size(self) -> int:
        return sum(len(_orbit(self.algebra, k)) for k in self.terms)

    def expand(self) -> dict[Labels, int]:
        full: dict[Labels, int] = {}
        for lam, c in self.terms.items():
            for w in _orbit(self.algebra, lam):
                full[w] = c
        return full

    def dimension(self) -> int:
        """Signed dimension (value at the identity)."""
        return sum(c * len(_orbit(self.algebra, k)) for k, c in self.terms.items())


def character(mu: Weight) -> VirtualCharacter:
    _check_dominant(mu)
    return VirtualCharacter(mu.algebra, dict(_freudenthal(mu.algebra, mu.labels)))


def char_product(
    a: VirtualCharacter, b: VirtualCharacter, cap: int = DEFAULT_CHAR_CAP
) -> VirtualCharacter:
    a._check(b)
    fa, fb = a.expand(), b.expand()
    if len(fa) * len(fb) > cap:
        raise SizeCapExceeded(
            f"character product needs {len(fa)} x {len(fb)} terms, cap is {cap}"
        )
    if len(fa) < len(fb):
        fa, fb = fb, fa
    n = a.algebra.rank
    out: dict[Labels, int] = defaultdict(int)
    items_b = list(fb.items())
    for x, cx in fa.items():
        for y, cy in items_b:
            s = tuple(x[i] + y[i] for i in range(n))
            if min(s) >= 0:
                out[s] += cx * cy
    return VirtualCharacter(a.algebra, dict(out))


def char_double(a: VirtualCharacter) -> VirtualCharacter:
    """The character ``x -> a(2x)``: every weight is doubled."""
    # 2w is dominant iff w is, so the dominant record maps directly
    return VirtualCharacter(a.algebra, {tuple(2 * x for x in w): c for w, c in a.terms.items()})


def _halve(v: VirtualCharacter) -> VirtualCharacter:
    out = {}
    for k, c in v.terms.items():
        if c % 2:
            raise NonIntegralCharacter(f"odd coefficient {c} at {k}")
        out[k] = c // 2
    return VirtualCharacter(v.algebra, out)


def sym2_char(mu: Weight, cap: int = DEFAULT_CHAR_CAP) -> VirtualCharacter:
    chi = character(mu)
    return _halve(char_product(chi, chi, cap) + char_double(chi))


def alt2_char(mu: Weight, cap: int = DEFAULT_CHAR_CAP) -> VirtualCharacter:
    chi = character(mu)
    return _halve(char_product(chi, chi, cap) - char_double(chi))


def decompose_character(a: VirtualCharacter) -> dict[Labels, int]:
    """Coefficients ``c`` with ``a = sum c[lam] * char(V_lam)`` by peeling."""
    rs = a.algebra
    rest = dict(a.terms)
    out: dict[Labels, int] = {}
    while rest:
        lam = max(rest, key=lambda w: (rs.height(w), w))
        c = rest[lam]
        out[lam] = c
        for w, m in _freudenthal(rs, lam).items():
            v = rest.get(w, 0) - c * m
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out


def recombine(rs: RootSystem, coeffs: Mapping[Labels, int]) -> VirtualCharacter:
    out = VirtualCharacter(rs)
    for lam, c in coeffs.items():
        out = out + character(Weight(lam, rs)).scale(c)
    return out


def adjoint_highest_weights(rs: RootSystem) -> list[Weight]:
    return [r.as_weight() for r in rs.highest_roots]


def invariant_dim_in(a: VirtualCharacter, adj_factors: list[Weight] | None = None) -> int:
    """Total multiplicity of the simple-factor adjoints in ``a``."""
    if adj_factors is None:
        adj_factors = adjoint_highest_weights(a.algebra)
    coeffs = decompose_character(a)
    return sum(coeffs.get(w.labels, 0) for w in adj_factors)
