"""Root systems of semisimple Lie algebras in Bourbaki numbering.

Weights are carried in Dynkin-label coordinates (pairings with the simple
coroots).  Roots are carried in the simple-root basis.  The Cartan matrix
follows the convention ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i``
holds the Dynkin labels of the simple root ``alpha_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import InvalidSpec, MismatchedAlgebra

Labels = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam = self.family
        if fam in _MIN_RANK:
            if self.rank < _MIN_RANK[fam]:
                raise InvalidSpec(
                    f"{fam}{self.rank} is not allowed; minimum rank for {fam} is {_MIN_RANK[fam]}"
                )
        elif fam in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[fam]:
                raise InvalidSpec(f"{fam}{self.rank} does not exist")
        else:
            raise InvalidSpec(f"unknown family {fam!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class AlgebraSpec:
    factors: tuple[SimpleType, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise InvalidSpec("an algebra needs at least one simple factor")

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse strings like ``"A2"``, ``"B3xG2"`` or ``"e6"``."""
    if not isinstance(text, str) or not text.strip():
        raise InvalidSpec("empty algebra string")
    factors = []
    for token in re.split(r"[xX]", text.strip()):
        m = _TOKEN.match(token.strip())
        if m is None:
            raise InvalidSpec(f"cannot parse factor {token!r} in {text!r}")
        factors.append(SimpleType(m.group(1).upper(), int(m.group(2))))
    return AlgebraSpec(tuple(factors))


# ---------------------------------------------------------------------------
# Bourbaki models


def epsilon_model(t: SimpleType) -> list[tuple[Fraction, ...]] | None:
    """Simple roots of ``t`` as vectors in the standard epsilon basis.

    Returns None for type E, which is built from its Dynkin diagram instead.
    """
    n = t.rank
    half = Fraction(1, 2)

    def eps(dim: int, **coeffs: Fraction) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * dim
        for k, c in coeffs.items():
            v[int(k[1:])] += c
        return tuple(v)

    def diff(dim: int, i: int, j: int) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * dim
        v[i] += 1
        v[j] -= 1
        return tuple(v)

    if t.family == "A":
        return [diff(n + 1, i, i + 1) for i in range(n)]
    if t.family in "BCD":
        roots = [diff(n, i, i + 1) for i in range(n - 1)]
        last = [Fraction(0)] * n
        if t.family == "B":
            last[n - 1] = Fraction(1)
        elif t.family == "C":
            last[n - 1] = Fraction(2)
        else:
            last[n - 2] = last[n - 1] = Fraction(1)
        return roots + [tuple(last)]
    if t.family == "F":
        return [
            diff(4, 1, 2),
            diff(4, 2, 3),
            eps(4, e3=Fraction(1)),
            (half, -half, -half, -half),
        ]
    if t.family == "G":
        return [diff(3, 0, 1), eps(3, e0=Fraction(-2), e1=Fraction(1), e2=Fraction(1))]
    return None


def _e_gram(n: int) -> list[list[Fraction]]:
    # Bourbaki E_n: chain 1-3-4-5-...-n with node 2 attached to node 4.
    edges = {(0, 2), (1, 3)} | {(k, k + 1) for k in range(2, n - 1)}
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(2)
    for i, j in edges:
        g[i][j] = g[j][i] = Fraction(-1)
    return g


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def simple_gram(t: SimpleType) -> list[list[Fraction]]:
    """Inner products of the simple roots, long roots normalized to length 2."""
    model = epsilon_model(t)
    if model is None:
        return _e_gram(t.rank)
    g = [[_dot(a, b) for b in model] for a in model]
    longest = max(g[i][i] for i in range(t.rank))
    scale = Fraction(2) / longest
    return [[x * scale for x in row] for row in g]


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Data types


@dataclass(frozen=True)
class Weight:
    """Integral weight in Dynkin-label coordinates."""

    labels: Labels
    algebra: "RootSystem" = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.algebra.rank:
            raise InvalidSpec(
                f"weight {self.labels} has {len(self.labels)} labels, algebra rank is {self.algebra.rank}"
            )

    @property
    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.labels)

    @property
    def root_coords(self) -> tuple[Fraction, ...]:
        return self.algebra.root_coords(self.labels)

    def __add__(self, other: "Weight") -> "Weight":
        _same(self.algebra, other.algebra)
        return Weight(tuple(a + b for a, b in zip(self.labels, other.labels)), self.algebra)

    def __sub__(self, other: "Weight") -> "Weight":
        _same(self.algebra, other.algebra)
        return Weight(tuple(a - b for a, b in zip(self.labels, other.labels)), self.algebra)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.labels), self.algebra)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"


@dataclass(frozen=True)
class Root:
    """A root in the simple-root basis."""

    coords: Labels
    is_long: bool
    algebra: "RootSystem" = field(repr=False)

    @property
    def labels(self) -> Labels:
        return self.algebra.root_labels(self.coords)

    @property
    def factor(self) -> int:
        return self.algebra.factor_of[next(i for i, c in enumerate(self.coords) if c)]

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coords)

    def as_weight(self) -> Weight:
        return Weight(self.labels, self.algebra)

    def __neg__(self) -> "Root":
        return self.algebra.root(tuple(-c for c in self.coords))

    def __add__(self, other: "Root") -> "Root | None":
        """Sum of two roots if it is again a root, else None."""
        _same(self.algebra, other.algebra)
        return self.algebra.find_root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.coords)) + "]"


def _same(a: "RootSystem", b: "RootSystem") -> None:
    if a is not b:
        raise MismatchedAlgebra(f"{a.spec} vs {b.spec}")


class RootSystem:
    """Immutable root data for ``spec``.  Build with :func:`build`."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.rank = spec.rank

        self.factor_of: tuple[int, ...] = tuple(
            k for k, f in enumerate(spec.factors) for _ in range(f.rank)
        )
        offsets, start = [], 0
        for f in spec.factors:
            offsets.append(range(start, start + f.rank))
            start += f.rank
        self.factor_indices: tuple[range, ...] = tuple(offsets)

        n = self.rank
        gram = [[Fraction(0)] * n for _ in range(n)]
        for f, idx in zip(spec.factors, self.factor_indices):
            g = simple_gram(f)
            for a, i in enumerate(idx):
                for b, j in enumerate(idx):
                    gram[i][j] = g[a][b]
        self.sym_form: tuple[tuple[Fraction, ...], ...] = tuple(map(tuple, gram))
        # half squared lengths of the simple roots
        self.half_norms: tuple[Fraction, ...] = tuple(gram[i][i] / 2 for i in range(n))
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n)
        )
        # root coords c = A^{-T} labels
        inv = _invert([[Fraction(x) for x in row] for row in self.cartan])
        self._inv_cartan_t = tuple(tuple(inv[j][i] for j in range(n)) for i in range(n))
        # <lambda, mu> = l^T G m with G = D A^{-T}
        self._weight_form = tuple(
            tuple(self.half_norms[i] * inv[j][i] for j in range(n)) for i in range(n)
        )
        self._height_covector = tuple(
            sum((self._inv_cartan_t[i][j] for i in range(n)), Fraction(0)) for j in range(n)
        )

        coords = self._generate_roots()
        lengths = {c: self._norm_coords(c) for c in coords}
        longest_in = {}
        for c, ln in lengths.items():
            k = self.factor_of[next(i for i, x in enumerate(c) if x)]
            longest_in[k] = max(longest_in.get(k, ln), ln)
        self._roots_by_coords: dict[Labels, Root] = {}
        for c in coords:
            k = self.factor_of[next(i for i, x in enumerate(c) if x)]
            self._roots_by_coords[c] = Root(c, lengths[c] == longest_in[k], self)
        pos = sorted(c for c in coords if any(x > 0 for x in c))
        self.positive_roots: tuple[Root, ...] = tuple(self._roots_by_coords[c] for c in pos)
        neg = sorted(c for c in coords if any(x < 0 for x in c))
        self.roots: tuple[Root, ...] = self.positive_roots + tuple(
            self._roots_by_coords[c] for c in neg
        )
        self.simple_roots: tuple[Root, ...] = tuple(
            self._roots_by_coords[tuple(int(i == j) for j in range(n))] for i in range(n)
        )
        self._root_by_labels: dict[Labels, Root] = {r.labels: r for r in self.roots}

        highest = []
        for idx in self.factor_indices:
            in_factor = [r for r in self.positive_roots if any(r.coords[i] for i in idx)]
            highest.append(max(in_factor, key=lambda r: (sum(r.coords), r.coords)))
        self.highest_roots: tuple[Root, ...] = tuple(highest)

        self.fundamental_weights: tuple[Weight, ...] = tuple(
            Weight(tuple(int(i == j) for j in range(n)), self) for i in range(n)
        )
        self.rho = Weight((1,) * n, self)
        self.zero = Weight((0,) * n, self)
        # 2 rho^vee in the simple-coroot basis: sum of positive coroots
        two_rho_check = [Fraction(0)] * n
        for r in self.positive_roots:
            dr = self._norm_coords(r.coords) / 2
            for i, c in enumerate(r.coords):
                two_rho_check[i] += c * self.half_norms[i] / dr
        self.two_rho_check: tuple[int, ...] = tuple(int(x) for x in two_rho_check)

    # -- construction helpers -------------------------------------------------

    def _generate_roots(self) -> set[Labels]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                for j in range(n):
                    p = sum(c[i] * self.cartan[i][j] for i in range(n))
                    if p:
                        r = list(c)
                        r[j] -= p
                        r = tuple(r)
                        if r not in seen:
                            seen.add(r)
                            nxt.append(r)
            frontier = nxt
        return seen

    def _norm_coords(self, c: Sequence[int]) -> Fraction:
        g = self.sym_form
        n = self.rank
        return sum(
            (c[i] * c[j] * g[i][j] for i in range(n) if c[i] for j in range(n) if c[j]),
            Fraction(0),
        )

    # -- queries ---------------------------------------------------------------

    @cached_property
    def dimension(self) -> int:
        return len(self.roots) + self.rank

    def weight(self, labels: Iterable[int]) -> Weight:
        return Weight(tuple(int(x) for x in labels), self)

    def root(self, coords: Iterable[int]) -> Root:
        c = tuple(coords)
        try:
            return self._roots_by_coords[c]
        except KeyError:
            raise InvalidSpec(f"{c} is not a root of {self.spec}") from None

    def find_root(self, coords: Iterable[int]) -> Root | None:
        return self._roots_by_coords.get(tuple(coords))

    def root_with_labels(self, labels: Labels) -> Root | None:
        return self._root_by_labels.get(tuple(labels))

    def root_labels(self, coords: Sequence[int]) -> Labels:
        n = self.rank
        return tuple(sum(coords[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def root_coords(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        n = self.rank
        m = self._inv_cartan_t
        return tuple(sum((m[i][j] * labels[j] for j in range(n)), Fraction(0)) for i in range(n))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """Invariant form on two label vectors."""
        g = self._weight_form
        n = self.rank
        return sum(
            (a[i] * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j]),
            Fraction(0),
        )

    def height(self, labels: Sequence[int]) -> Fraction:
        """Sum of the root-basis coordinates."""
        return sum((h * x for h, x in zip(self._height_covector, labels)), Fraction(0))

    def is_simply_laced(self) -> bool:
        return all(f.family in "ADE" for f in self.spec.factors)

    def __repr__(self) -> str:
        return f"RootSystem({str(self.spec)!r})"


@lru_cache(maxsize=None)
def _build(spec: AlgebraSpec) -> RootSystem:
    return RootSystem(spec)


def build(spec: AlgebraSpec | str) -> RootSystem:
    """Return the (cached, immutable) root system for ``spec``."""
    if isinstance(spec, str):
        spec = parse_algebra(spec)
    return _build(spec)


def pairing(lam: Weight, alpha: Root) -> int:
    """``<lam, alpha^vee>``, exact."""
    _same(lam.algebra, alpha.algebra)
    rs = lam.algebra
    num = sum(
        (c * rs.half_norms[i] * lam.labels[i] for i, c in enumerate(alpha.coords) if c),
        Fraction(0),
    )
    val = num / (rs._norm_coords(alpha.coords) / 2)
    assert val.denominator == 1
    return int(val)


def add_root(lam: Weight, gamma: Root) -> Weight:
    _same(lam.algebra, gamma.algebra)
    return Weight(tuple(a + b for a, b in zip(lam.labels, gamma.labels)), lam.algebra)


def root_pairing(gamma: Root, alpha: Root) -> int:
    """``<gamma, alpha^vee>`` for two roots."""
    return pairing(gamma.as_weight(), alpha)


def root_inner(a: Root, b: Root) -> Fraction:
    _same(a.algebra, b.algebra)
    g = a.algebra.sym_form
    return sum(
        (x * y * g[i][j] for i, x in enumerate(a.coords) if x for j, y in enumerate(b.coords) if y),
        Fraction(0),
    )
