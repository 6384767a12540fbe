"""Reconstruction of a q-character from its highest monomial by sl2 strings."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from qchar.cartan import CartanData
from qchar.charbuild.highest import HighestWeight
from qchar.sl2theory import character_terms
from qchar.ypoly import YMonomial, YPolynomial, a_monomial


def chi_i_string(cd: CartanData, i: int, positions: Iterable[int]) -> list[tuple[YMonomial, int, int]]:
    """The node-i string ``(monomial, coefficient, number of A^{-1} factors)`` above ``prod Y_{i,n}``."""
    cd.check_node(i)
    positions = list(positions)
    top = YMonomial({(i, n): e for n, e in Counter(positions).items()})
    cache: dict[int, YMonomial] = {}
    out = []
    for key, coef in sorted(character_terms(positions, cd.symmetrizer(i)).items()):
        m = top
        for c in key:
            if c not in cache:
                cache[c] = a_monomial(cd, i, c).inverse()
            m = m * cache[c]
        out.append((m, coef, len(key)))
    return out


def chi_i_expand(cd: CartanData, i: int, positions: Iterable[int]) -> YPolynomial:
    """The sl2 irreducible at step r_i with each ``A_c^{-1}`` replaced by ``A_{i,c}^{-1}``."""
    return YPolynomial.from_terms((m, c) for m, c, _ in chi_i_string(cd, i, positions))


@dataclass
class FMLimits:
    max_terms: int = 20_000
    max_iterations: int = 200_000


class FMFailure(RuntimeError):
    """Structured failure of the reconstruction."""

    def __init__(self, reason: str, monomial: YMonomial | None, partial: YPolynomial, node: int | None = None):
        msg = reason if monomial is None else f"{reason}: {monomial}"
        super().__init__(msg)
        self.reason = reason
        self.monomial = monomial
        self.node = node
        self.partial = partial

    def report(self) -> dict:
        return {
            "status": "failure",
            "reason": self.reason,
            "monomial": None if self.monomial is None else str(self.monomial),
            "node": self.node,
            "partial": self.partial.to_json(),
        }


@dataclass
class _State:
    coef: dict[YMonomial, int] = field(default_factory=dict)
    depth: dict[YMonomial, int] = field(default_factory=dict)
    coloured: dict[int, dict[YMonomial, int]] = field(default_factory=dict)

    def poly(self) -> YPolynomial:
        return YPolynomial(self.coef)


def fm_expand(cd: CartanData, hw: HighestWeight, limits: FMLimits | None = None) -> YPolynomial:
    """Complete the highest monomial to a q-character.

    Monomials are processed by depth (number of A^{-1} factors below the top),
    colours in ascending order.  Colour i keeps a running count of how much of
    each monomial is already explained by node-i strings; an i-dominant monomial
    whose coefficient exceeds that count starts new strings, and coefficients
    are raised to the largest count demanded by any colour.

    Raises :class:`FMFailure` when a monomial is not accounted for, when a
    non-highest dominant monomial appears, or when the limits are exceeded.
    """
    limits = limits or FMLimits()
    if limits.max_terms <= 0 or limits.max_iterations <= 0:
        raise ValueError("limits must be positive")
    hw.validate(cd)
    top = hw.monomial()
    st = _State({top: 1}, {top: 0}, {i: {} for i in cd.nodes})
    frontier: dict[int, set[YMonomial]] = {0: {top}}
    current = 0
    iterations = 0
    while frontier:
        current = min(frontier)
        layer = sorted(frontier.pop(current), key=lambda m: m.items)
        for M in layer:
            iterations += 1
            if iterations > limits.max_iterations:
                raise FMFailure("iteration limit exceeded", M, st.poly())
            if current > 0 and M.is_dominant():
                raise FMFailure("extra dominant monomial", M, st.poly())
            for i in cd.nodes:
                col = st.coloured[i]
                have = col.get(M, 0)
                need = st.coef[M]
                if not M.is_i_dominant(i):
                    if have < need:
                        raise FMFailure(f"monomial not covered by a node-{i} string", M, st.poly(), i)
                    continue
                k = need - have
                if k <= 0:
                    continue
                ipart = M.node_part(i)
                rest = M / ipart
                positions = [n for (_, n), e in ipart.items for _ in range(e)]
                for m, a, d in chi_i_string(cd, i, positions):
                    m2 = rest * m
                    col[m2] = col.get(m2, 0) + k * a
                    if col[m2] > st.coef.get(m2, 0):
                        st.coef[m2] = col[m2]
                    if m2 not in st.depth:
                        st.depth[m2] = current + d
                        frontier.setdefault(current + d, set()).add(m2)
                    if len(st.coef) > limits.max_terms:
                        raise FMFailure("term limit exceeded", m2, st.poly())
    return st.poly()


def fm_expand_report(cd: CartanData, hw: HighestWeight, limits: FMLimits | None = None) -> dict:
    """Like :func:`fm_expand` but always returns a JSON-ready record."""
    try:
        p = fm_expand(cd, hw, limits)
    except FMFailure as exc:
        return exc.report()
    return {"status": "ok", "polynomial": p.to_json()}
