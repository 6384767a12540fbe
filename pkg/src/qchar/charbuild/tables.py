"""Closed forms for the first fundamental q-character of the classical series.

Each table is stored as a chain of ``A^{-1}`` steps: ``(new label, old label,
node, position)`` meaning ``Lambda_new = Lambda_old * A_{node,position}^{-1}``,
starting from ``Lambda_1 = Y_{1,a}``.  Barred labels are written ``"3b"``.
"""

from __future__ import annotations

from qchar.cartan import CartanData
from qchar.ypoly import YMonomial, YPolynomial, a_monomial

Step = tuple[str, str, int, int]


def _bar(i: int) -> str:
    return f"{i}b"


def _chain_A(l: int) -> list[Step]:
    return [(str(i), str(i - 1), i - 1, i - 1) for i in range(2, l + 2)]


def _chain_B(l: int) -> list[Step]:
    steps = [(str(i), str(i - 1), i - 1, 2 * i - 2) for i in range(2, l + 1)]
    steps.append(("0", str(l), l, 2 * l))
    steps.append((_bar(l), "0", l, 2 * l - 2))
    for i in range(l - 1, 0, -1):
        steps.append((_bar(i), _bar(i + 1), i, 2 * (2 * l - i - 1)))
    return steps


def _chain_C(l: int) -> list[Step]:
    steps = [(str(i), str(i - 1), i - 1, i - 1) for i in range(2, l + 1)]
    steps.append((_bar(l), str(l), l, l + 1))
    for i in range(l - 1, 0, -1):
        steps.append((_bar(i), _bar(i + 1), i, 2 * l - i + 2))
    return steps


def _chain_D(l: int) -> list[Step]:
    steps = [(str(i), str(i - 1), i - 1, i - 1) for i in range(2, l + 1)]
    steps.append((_bar(l), str(l - 1), l, l - 1))
    steps.append((_bar(l - 1), _bar(l), l - 1, l - 1))
    for i in range(l - 2, 0, -1):
        steps.append((_bar(i), _bar(i + 1), i, 2 * l - i - 2))
    return steps


_CHAINS = {"A": _chain_A, "B": _chain_B, "C": _chain_C, "D": _chain_D}


def fundamental_chain(cd: CartanData, a: int = 0) -> list[Step]:
    """The ``A^{-1}`` recursion for the first fundamental representation at position ``a``."""
    if cd.series not in _CHAINS:
        raise ValueError(f"no table for series {cd.series}")
    return [(new, old, i, c + a) for new, old, i, c in _CHAINS[cd.series](cd.rank)]


def fundamental_labels(cd: CartanData, a: int = 0) -> dict[str, YMonomial]:
    """``label -> Lambda_label`` in table order."""
    out = {"1": YMonomial.y(1, a)}
    for new, old, i, c in fundamental_chain(cd, a):
        out[new] = out[old] * a_monomial(cd, i, c).inverse()
    return out


def fundamental_table(cd: CartanData, a: int = 0) -> YPolynomial:
    """``chi_q(V_{omega_1}(q^a))`` as the sum over the table."""
    return YPolynomial.from_terms((m, 1) for m in fundamental_labels(cd, a).values())


def expected_size(cd: CartanData) -> int:
    l = cd.rank
    return {"A": l + 1, "B": 2 * l + 1, "C": 2 * l, "D": 2 * l}[cd.series]
