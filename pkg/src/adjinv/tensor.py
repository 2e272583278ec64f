"""Racah-Speiser (Brauer-Klimyk) tensor product decomposition.

``adjoint_tensor`` is the fast path for ``adj(g) x V_mu``: the adjoint
character is ``rank + sum over roots of e^alpha``, so only ``dim g`` shifted
weights need to be folded back into the dominant chamber.
``tensor_general`` runs the same folding over the full weight system of an
arbitrary irreducible, supplied by the caller.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from .characters import freudenthal_weights, weyl_dim
from .errors import InternalNegativeMultiplicity, MismatchedAlgebra, NotDominant
from .root_system import Labels, RootSystem, Weight
from .weyl import dominant_shifted_labels, opposition_labels


@dataclass
class Decomposition:
    """Direct sum of irreducibles: dominant labels -> positive multiplicity."""

    algebra: RootSystem = field(repr=False)
    terms: dict[Labels, int]

    def __post_init__(self) -> None:
        bad = {k: v for k, v in self.terms.items() if v < 0}
        if bad:
            raise InternalNegativeMultiplicity(f"negative multiplicities {bad}")
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __getitem__(self, labels) -> int:
        if isinstance(labels, Weight):
            labels = labels.labels
        return self.terms.get(tuple(labels), 0)

    def __iter__(self) -> Iterator[tuple[Labels, int]]:
        rs = self.algebra
        for k in sorted(self.terms, key=lambda w: (rs.height(w), w)):
            yield k, self.terms[k]

    def dimension(self) -> int:
        return sum(m * weyl_dim(Weight(k, self.algebra)) for k, m in self.terms.items())


def _check(mu: Weight) -> None:
    if not mu.is_dominant:
        raise NotDominant(f"{mu} is not dominant")


def adjoint_tensor(mu: Weight) -> Decomposition:
    _check(mu)
    rs = mu.algebra
    acc: dict[Labels, int] = defaultdict(int)
    acc[mu.labels] += rs.rank
    for r in rs.roots:
        shifted = tuple(x + y for x, y in zip(mu.labels, r.labels))
        res = dominant_shifted_labels(rs, shifted)
        if res is not None:
            acc[res[0]] += res[1]
    return Decomposition(rs, dict(acc))


def invariant_dim_adj(mu: Weight, nu: Weight) -> int:
    """``dim (adj x V_mu x V_nu)^g`` as the multiplicity of ``V_nubar`` in ``adj x V_mu``."""
    if mu.algebra is not nu.algebra:
        raise MismatchedAlgebra(f"{mu.algebra.spec} vs {nu.algebra.spec}")
    _check(nu)
    return adjoint_tensor(mu)[opposition_labels(nu.algebra, nu.labels)]


def tensor_general(lam: Weight, mu: Weight, weights_of_lam) -> Decomposition:
    """``V_lam x V_mu`` from the weight system of ``V_lam``."""
    _check(lam)
    _check(mu)
    if lam.algebra is not mu.algebra or weights_of_lam.algebra is not mu.algebra:
        raise MismatchedAlgebra("operands belong to different algebras")
    rs = mu.algebra
    acc: dict[Labels, int] = defaultdict(int)
    for w, m in weights_of_lam.expand().entries.items():
        shifted = tuple(x + y for x, y in zip(mu.labels, w))
        res = dominant_shifted_labels(rs, shifted)
        if res is not None:
            acc[res[0]] += res[1] * m
    return Decomposition(rs, dict(acc))


def adjoint_multiplicity_in_product(mu: Weight, nu: Weight) -> int:
    """Sum over simple factors of the adjoint's multiplicity in ``V_mu x V_nu``."""
    dec = tensor_general(mu, nu, freudenthal_weights(mu))
    return sum(dec[r.labels] for r in mu.algebra.highest_roots)
