"""q-difference Drinfeld-Sokolov reduction for sl_N.

The canonical-form coefficients are shifted elementary symmetric sums of the
formal variables ``lambda_j(s q^{2n})``.  Substituting
``lambda_j(s q^{2n}) -> Lambda_{j, a+2n}`` with
``Lambda_{j,a} = Y_{j,a+j-1} Y_{j-1,a+j}^{-1}`` (and ``Y_0 = Y_N = 1``) must give the
q-character of the j-th fundamental representation of sl_N up to a lattice shift.

Lambda polynomials reuse :class:`YPolynomial`: the key ``(j, n)`` stands for
``lambda_j(s q^{2n})``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from qchar.cartan import build_cartan
from qchar.charbuild.fm import fm_expand
from qchar.charbuild.highest import HighestWeight
from qchar.ypoly import YMonomial, YPolynomial

LambdaPolynomial = YPolynomial


def lam(j: int, n: int = 0) -> YMonomial:
    """The symbol ``lambda_j(s q^{2n})``."""
    return YMonomial.y(j, n)


def mu_q_component(N: int, i: int) -> LambdaPolynomial:
    """``t_i(s) = sum_{j_1<...<j_i} lambda_{j_1}(s) lambda_{j_2}(s q^{-2}) ... lambda_{j_i}(s q^{-2i+2})``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if not 1 <= i <= N - 1:
        raise ValueError(f"component index {i} outside 1..{N - 1}")
    out = {}
    for js in itertools.combinations(range(1, N + 1), i):
        m = YMonomial([((j, -k), 1) for k, j in enumerate(js)])
        out[m] = out.get(m, 0) + 1
    return YPolynomial(out)


def constraint_product(N: int) -> LambdaPolynomial:
    """``prod_{i=1}^N lambda_i(s q^{-2i+2})``, which the determinant condition sets to 1."""
    return YPolynomial.from_monomial(YMonomial([((i, -(i - 1)), 1) for i in range(1, N + 1)]))


def eliminate_last(p: LambdaPolynomial, N: int) -> LambdaPolynomial:
    """Rewrite ``lambda_N(s q^{2n}) = prod_{i<N} lambda_i(s q^{2(n+N-i)})^{-1}``."""

    def rewrite(m: YMonomial) -> YMonomial:
        out = YMonomial.one()
        for (j, n), e in m.items:
            if j == N:
                for i in range(1, N):
                    out = out * YMonomial.y(i, n + N - i, -e)
            else:
                out = out * YMonomial.y(j, n, e)
        return out

    return p.map_monomials(rewrite)


def big_lambda(N: int, j: int, a: int) -> YMonomial:
    """``Lambda_{j,a}`` for sl_N, with ``Y_0 = Y_N = 1``."""
    if not 1 <= j <= N:
        raise ValueError(f"index {j} outside 1..{N}")
    out = YMonomial.one()
    if 1 <= j <= N - 1:
        out = out * YMonomial.y(j, a + j - 1)
    if 1 <= j - 1 <= N - 1:
        out = out * YMonomial.y(j - 1, a + j, -1)
    return out


def substitute_lambda(p: LambdaPolynomial, a: int, N: int) -> YPolynomial:
    """Replace ``lambda_j(s q^{2n})`` by ``Lambda_{j, a+2n}``."""

    def sub(m: YMonomial) -> YMonomial:
        out = YMonomial.one()
        for (j, n), e in m.items:
            out = out * big_lambda(N, j, a + 2 * n) ** e
        return out

    return p.map_monomials(sub)


@dataclass
class Comparison:
    N: int
    i: int
    ok: bool
    shift: int | None
    terms: int
    detail: str = ""

    def as_row(self) -> dict:
        return {"N": self.N, "i": self.i, "ok": self.ok, "shift": self.shift, "terms": self.terms}


def _highest(p: YPolynomial) -> YMonomial | None:
    doms = p.dominant_monomials()
    return doms[0] if len(doms) == 1 else None


def compare_with_qcharacter(N: int, i: int, a: int = 0) -> Comparison:
    """Check the substituted canonical-form coefficient against the fundamental q-character.

    The two sides are aligned by the lattice shift that matches their highest monomials.
    """
    lhs = substitute_lambda(mu_q_component(N, i), a, N)
    cd = build_cartan("A", N - 1)
    rhs = fm_expand(cd, HighestWeight.fundamental(i, 0))
    hl, hr = _highest(lhs), _highest(rhs)
    if hl is None or hr is None:
        return Comparison(N, i, False, None, len(lhs), "no unique highest monomial")
    (kl, _), = hl.items
    (kr, _), = hr.items
    if kl[0] != kr[0]:
        return Comparison(N, i, False, None, len(lhs), "highest monomials sit on different nodes")
    shift = kl[1] - kr[1]
    ok = rhs.shift(shift) == lhs
    return Comparison(N, i, ok, shift, len(lhs), "" if ok else "polynomials differ after alignment")


def format_lambda(p: LambdaPolynomial) -> str:
    """Render with ``lam_j(s q^{2n})`` factors instead of Y's."""

    def factor(j: int, n: int, e: int) -> str:
        arg = "s" if n == 0 else f"s q^{2 * n}"
        base = f"lam{j}({arg})"
        return base if e == 1 else f"{base}^{e}"

    parts = []
    for m, c in p.items():
        body = " ".join(factor(j, n, e) for (j, n), e in m.items) or "1"
        parts.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(parts) if parts else "0"
