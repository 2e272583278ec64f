"""Closed-form invariant counts for ``adj(g) x V_mu x V_nu`` and its square.

The exception cases are detected structurally: root lengths, weak
orthogonality and the location of G2 factors.  The enumeration of weakly
orthogonal pairs is an output of :func:`enumerate_table1`, never an input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .characters import DEFAULT_CHAR_CAP, alt2_char, decompose_character, invariant_dim_in, sym2_char
from .errors import MismatchedAlgebra, NotDominant, NotSelfDual
from .root_system import Root, RootSystem, Weight, epsilon_model, root_inner, root_pairing
from .weyl import opposition


class FSIndicator(enum.IntEnum):
    SYMPLECTIC = -1
    NOT_SELF_DUAL = 0
    ORTHOGONAL = 1


class PairingCase(enum.Enum):
    NONE = "none"
    EQUAL_NEGATIVE = "equal_negative"
    WEAKLY_ORTH_SHIFT = "weakly_orth_shift"
    G2_SHORT_LONG = "g2_short_long"


@dataclass(frozen=True)
class Lemma22Case:
    case: PairingCase
    beta: Root | None = None


class InvariantCase(enum.Enum):
    """Which branch of the closed form decided a value."""

    DUAL = "dual"  # nubar == mu
    ROOT = "root"  # nubar - mu is a root, generic value 1
    WEAKLY_ORTHOGONAL = "exception1"
    G2_LABEL_ZERO = "exception2"
    G2_LABEL_ONE = "exception3"
    OTHER = "other"  # neither zero nor a root


@dataclass(frozen=True)
class SplitResult:
    b: int
    b_S: int
    b_Lambda: int


def _same(a: Root, b: Root) -> None:
    if a.algebra is not b.algebra:
        raise MismatchedAlgebra(f"{a.algebra.spec} vs {b.algebra.spec}")


def _dominant(mu: Weight) -> None:
    if not mu.is_dominant:
        raise NotDominant(f"{mu} is not dominant")


# ---------------------------------------------------------------------------
# roots


def weakly_orthogonal(beta: Root, alpha: Root) -> bool:
    """Orthogonal roots whose sum is again a root."""
    _same(beta, alpha)
    return root_inner(beta, alpha) == 0 and (beta + alpha) is not None


def classify_pairing(gamma: Root, alpha: Root) -> Lemma22Case:
    _same(gamma, alpha)
    p = root_pairing(gamma, alpha)
    if p >= -1:
        return Lemma22Case(PairingCase.NONE)
    if gamma == -alpha:
        return Lemma22Case(PairingCase.EQUAL_NEGATIVE)
    if p == -3:
        assert not alpha.is_long and gamma.is_long
        return Lemma22Case(PairingCase.G2_SHORT_LONG)
    beta = gamma + alpha
    if p == -2 and beta is not None and weakly_orthogonal(beta, alpha):
        return Lemma22Case(PairingCase.WEAKLY_ORTH_SHIFT, beta)
    raise AssertionError(f"pairing {p} of {gamma} with {alpha} fits no known case")


def enumerate_table1(rs: RootSystem) -> list[tuple[int, Root]]:
    """All ``(j, beta)`` with ``alpha_j`` short simple and ``beta`` weakly orthogonal to it.

    ``j`` is the 1-based Bourbaki index.  Empty for simply-laced algebras and G2.
    """
    out = []
    for j, a in enumerate(rs.simple_roots):
        if a.is_long:
            continue
        for beta in rs.roots:
            if weakly_orthogonal(beta, a):
                out.append((j + 1, beta))
    return out


def epsilon_vector(root: Root) -> tuple[Fraction, ...]:
    """Coordinates of ``root`` in the Bourbaki epsilon model of its factor."""
    rs = root.algebra
    k = root.factor
    model = epsilon_model(rs.spec.factors[k])
    if model is None:
        raise ValueError(f"no epsilon model for {rs.spec.factors[k]}")
    idx = rs.factor_indices[k]
    vec = [Fraction(0)] * len(model[0])
    for local, i in enumerate(idx):
        c = root.coords[i]
        for t, x in enumerate(model[local]):
            vec[t] += c * x
    return tuple(vec)


def format_epsilon(vec: tuple[Fraction, ...]) -> str:
    """Render an epsilon vector, e.g. ``e1+e2`` or ``1/2(e1-e2+e3+e4)``."""
    nz = [(i, c) for i, c in enumerate(vec) if c]
    if not nz:
        return "0"
    scale = Fraction(1, 2) if any(c.denominator == 2 for _, c in nz) else Fraction(1)
    parts = []
    for i, c in nz:
        m = c / scale
        sign = "-" if m < 0 else "+"
        mag = abs(m)
        coef = "" if mag == 1 else f"{mag}"
        parts.append(f"{sign}{coef}e{i + 1}")
    body = "".join(parts)
    if body.startswith("+"):
        body = body[1:]
    if scale != 1:
        return f"1/2({body})"
    return body


# ---------------------------------------------------------------------------
# adjoint in V_mu x V_nu


def _g2_exception(mu: Weight, beta: Root) -> InvariantCase | None:
    rs = mu.algebra
    for k, f in enumerate(rs.spec.factors):
        if f.family != "G":
            continue
        i1, i2 = rs.factor_indices[k]
        local = {i: beta.coords[i] for i in (i1, i2)}
        if any(c for i, c in enumerate(beta.coords) if i not in local):
            continue
        pair = (local[i1], local[i2])
        label = mu.labels[i1]
        if label == 0 and pair in {(-1, -1), (2, 1)}:
            return InvariantCase.G2_LABEL_ZERO
        if label == 1 and pair in {(1, 1), (-2, -1)}:
            return InvariantCase.G2_LABEL_ONE
    return None


def invariant_dim_with_case(mu: Weight, nu: Weight) -> tuple[int, InvariantCase]:
    """Closed-form value together with the branch that produced it."""
    _dominant(mu)
    _dominant(nu)
    if mu.algebra is not nu.algebra:
        raise MismatchedAlgebra(f"{mu.algebra.spec} vs {nu.algebra.spec}")
    rs = mu.algebra
    diff = opposition(nu) - mu
    if not any(diff.labels):
        return sum(1 for x in mu.labels if x > 0), InvariantCase.DUAL
    beta = rs.root_with_labels(diff.labels)
    if beta is None:
        return 0, InvariantCase.OTHER
    for j, a in enumerate(rs.simple_roots):
        if not a.is_long and mu.labels[j] == 0 and weakly_orthogonal(beta, a):
            return 0, InvariantCase.WEAKLY_ORTHOGONAL
    g2 = _g2_exception(mu, beta)
    if g2 is not None:
        return 0, g2
    return 1, InvariantCase.ROOT


def invariant_dim_closed(mu: Weight, nu: Weight) -> int:
    return invariant_dim_with_case(mu, nu)[0]


# ---------------------------------------------------------------------------
# Frobenius-Schur and the symmetric / antisymmetric split


def frobenius_schur(mu: Weight) -> FSIndicator:
    """``(-1)^<mu, 2 rho^vee>`` for self-dual ``mu``, else 0."""
    _dominant(mu)
    if opposition(mu) != mu:
        return FSIndicator.NOT_SELF_DUAL
    rs = mu.algebra
    height = sum(c * x for c, x in zip(rs.two_rho_check, mu.labels))
    return FSIndicator.SYMPLECTIC if height % 2 else FSIndicator.ORTHOGONAL


def fs_oracle(mu: Weight, cap: int = DEFAULT_CHAR_CAP) -> FSIndicator:
    """Trivial multiplicity in ``S^2 V`` minus that in ``Lambda^2 V``."""
    _dominant(mu)
    zero = mu.algebra.zero.labels
    s = decompose_character(sym2_char(mu, cap)).get(zero, 0)
    a = decompose_character(alt2_char(mu, cap)).get(zero, 0)
    return FSIndicator(s - a)


def split_closed(mu: Weight) -> SplitResult:
    _dominant(mu)
    if opposition(mu) != mu:
        return SplitResult(invariant_dim_closed(mu, mu), 0, 0)
    rs = mu.algebra
    fs = frobenius_schur(mu)
    paired = self_dual = 0
    for j, w in enumerate(rs.fundamental_weights):
        if mu.labels[j] > 0:
            if opposition(w) == w:
                self_dual += 1
            else:
                paired += 1
    assert paired % 2 == 0
    b_s = paired // 2 + (self_dual if fs == FSIndicator.SYMPLECTIC else 0)
    b_l = paired // 2 + (self_dual if fs == FSIndicator.ORTHOGONAL else 0)
    return SplitResult(b_s + b_l, b_s, b_l)


def split_oracle(mu: Weight, cap: int = DEFAULT_CHAR_CAP) -> SplitResult:
    """Adjoint multiplicities in ``S^2 V_mu`` and ``Lambda^2 V_mu`` by characters."""
    _dominant(mu)
    b_s = invariant_dim_in(sym2_char(mu, cap))
    b_l = invariant_dim_in(alt2_char(mu, cap))
    return SplitResult(b_s + b_l, b_s, b_l)


def kw_question(mu: Weight) -> bool:
    """True iff the adjoint sits only in ``S^2`` or only in ``Lambda^2`` of ``V_mu``."""
    _dominant(mu)
    if opposition(mu) != mu:
        raise NotSelfDual(f"{mu} is not self-dual")
    r = split_closed(mu)
    return min(r.b_S, r.b_Lambda) == 0


def in_self_dual_span(mu: Weight) -> bool:
    rs = mu.algebra
    return all(
        opposition(w) == w for j, w in enumerate(rs.fundamental_weights) if mu.labels[j] > 0
    )
