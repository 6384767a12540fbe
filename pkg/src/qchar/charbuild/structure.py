"""Structural checks on computed characters."""

from __future__ import annotations

from qchar.cartan import CartanData, QLaurent, adjugate, determinant, q_cartan_matrix
from qchar.charbuild.highest import HighestWeight
from qchar.sl2theory import NotACharacter, grothendieck_decomposition
from qchar.ypoly import YMonomial, YPolynomial, beta_restrict


def _node_series(m: YMonomial, rank: int) -> list[QLaurent]:
    acc: list[dict[int, int]] = [{} for _ in range(rank)]
    for (i, n), e in m.items:
        if not 1 <= i <= rank:
            raise ValueError(f"node {i} out of range")
        acc[i - 1][n] = acc[i - 1].get(n, 0) + e
    return [QLaurent(d) for d in acc]


class _Solver:
    """Solves ``exps(M) = exps(top) - sum_{j,c} v_{j,c} exps(A_{j,c})`` over Z[x, x^-1].

    The exponent of ``A_{j,c}`` at node k is ``x^c C_kj(x)``, so with the
    node series D of ``M / top`` we need ``C(x) V = -D``, solved by the
    adjugate and an exact division by ``det C(x)``.
    """

    def __init__(self, cd: CartanData):
        self.cd = cd
        C = q_cartan_matrix(cd)
        self.adj = adjugate(C)
        self.det = determinant(C)

    def solve(self, diff: YMonomial) -> list[QLaurent] | None:
        D = _node_series(diff, self.cd.rank)
        out = []
        for k in range(self.cd.rank):
            num = QLaurent()
            for j in range(self.cd.rank):
                num = num - self.adj[k][j] * D[j]
            v = num.divexact(self.det)
            if v is None:
                return None
            out.append(v)
        return out


def a_inverse_content(cd: CartanData, top: YMonomial, m: YMonomial) -> list[QLaurent] | None:
    """Exponents ``v_j(x) = sum_c v_{j,c} x^c`` with ``m = top * prod A_{j,c}^{-v_{j,c}}``, if integral."""
    return _Solver(cd).solve(m / top)


def check_monom_shape(cd: CartanData, p: YPolynomial, hw: HighestWeight | YMonomial) -> bool:
    """Every monomial is the highest one times a product of ``A^{-1}`` factors (non-negative powers)."""
    top = hw.monomial() if isinstance(hw, HighestWeight) else hw
    if p.coefficient(top) == 0:
        return False
    solver = _Solver(cd)
    for m in p:
        v = solver.solve(m / top)
        if v is None or any(c < 0 for q in v for c in q.terms.values()):
            return False
    return True


def unique_dominant_product(chars: list[YPolynomial]) -> bool:
    """The product has exactly one dominant monomial."""
    prod = YPolynomial.constant(1)
    for c in chars:
        prod = prod * c
    return len(prod.dominant_monomials()) == 1


def restriction_multiplicities(cd: CartanData, p: YPolynomial, i: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of sl2 irreducibles in the restriction of ``p`` to node ``i``."""
    cd.check_node(i)
    return grothendieck_decomposition(beta_restrict(p, [i]), cd.symmetrizer(i), i)


def restriction_is_positive(cd: CartanData, p: YPolynomial) -> bool:
    try:
        return all(
            all(v > 0 for v in restriction_multiplicities(cd, p, i).values()) for i in cd.nodes
        )
    except NotACharacter:
        return False
