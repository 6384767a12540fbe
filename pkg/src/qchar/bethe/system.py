"""Symbolic Bethe Ansatz equations.

Each equation is kept as four lists of linear factors so it can be evaluated
either symbolically (cross-multiplied polynomial) or numerically with a check
that no denominator vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import sympy

from qchar.cartan import CartanData, build_cartan

q = sympy.Symbol("q")

Site = dict[int, list]


def kr_site(r: int, b, node: int = 1, step: int = 1) -> Site:
    """Drinfeld roots of the evaluation module W_r(b) at ``node``: ``b q_i^{r-2k+1}``."""
    if r < 0:
        raise ValueError("length must be non-negative")
    return {node: [b * q ** (step * (r - 2 * k + 1)) for k in range(1, r + 1)]}


@dataclass
class BetheEquation:
    node: int
    index: int
    unknown: sympy.Symbol
    lhs_num: list
    lhs_den: list
    rhs_num: list
    rhs_den: list
    constant: object

    def sides(self) -> tuple[sympy.Expr, sympy.Expr]:
        """``(lhs_num * rhs_den, constant * rhs_num * lhs_den)``."""
        t1 = sympy.Mul(*self.lhs_num) * sympy.Mul(*self.rhs_den)
        t2 = self.constant * sympy.Mul(*self.rhs_num) * sympy.Mul(*self.lhs_den)
        return t1, t2

    def residual(self) -> sympy.Expr:
        t1, t2 = self.sides()
        return t1 - t2

    def rational(self) -> sympy.Expr:
        """``LHS - RHS`` as a rational function."""
        lhs = sympy.Mul(*self.lhs_num) / sympy.Mul(*self.lhs_den)
        rhs = self.constant * sympy.Mul(*self.rhs_num) / sympy.Mul(*self.rhs_den)
        return lhs - rhs


@dataclass
class BetheSystem:
    cd: CartanData
    sites: list[Site]
    m: tuple[int, ...]
    unknowns: list[sympy.Symbol]
    equations: list[BetheEquation] = field(default_factory=list)

    def residuals(self) -> list[sympy.Expr]:
        return [e.residual() for e in self.equations]

    def is_sl2(self) -> bool:
        return self.cd.rank == 1


def pole_constant(cd: CartanData, n_sites: int):
    """Constant forced by cancelling the poles of the Baxter formula at ``z = w_k q^{-1}``.

    Only derived for sl2, where it equals ``q^{-2N-2}`` for any site lengths.
    """
    if cd.rank != 1:
        raise ValueError("the pole-cancellation constant is derived for sl2 only")
    return q ** (-2 * n_sites - 2)


def printed_constant(cd: CartanData, n_sites: int):
    """The customary constant: ``-q^{-N}`` for sl2 and ``-q^N`` for the general system."""
    return -(q ** (-n_sites)) if cd.rank == 1 else -(q**n_sites)


def resolve_constant(cd: CartanData, n_sites: int, constant):
    if constant is None:
        constant = "pole" if cd.rank == 1 else "printed"
    if constant == "pole":
        return pole_constant(cd, n_sites)
    if constant == "printed":
        return printed_constant(cd, n_sites)
    return sympy.sympify(constant)


def generate_bethe(cd: CartanData, sites: Sequence[Site], m: Sequence[int], constant=None) -> BetheSystem:
    """One equation per unknown ``w_k^{(i)}``::

        prod_j q_i^{deg P_ji} P_ji(q_i^{-1}/w) / P_ji(q_i/w)
            = K prod_{s != k} (w - w_s q_i^{-2}) / (w - w_s q_i^2)
                prod_{l != i} prod_s (w - w^{(l)}_s q^{-C_li}) / (w - w^{(l)}_s q^{C_li})

    With ``P(u) = prod_a (1 - u a)`` the left side is
    ``prod_a q_i (w - a q_i^{-1}) / (w - a q_i)``.  ``constant`` is ``"pole"``,
    ``"printed"`` or an explicit value; the default is ``"pole"`` for sl2 and
    ``"printed"`` otherwise.
    """
    m = tuple(int(x) for x in m)
    if len(m) != cd.rank:
        raise ValueError(f"need {cd.rank} root counts, got {len(m)}")
    if any(x < 0 for x in m):
        raise ValueError("root counts must be non-negative")
    for s in sites:
        for i in s:
            cd.check_node(i)
    K = resolve_constant(cd, len(sites), constant)
    ws = {
        i: [sympy.Symbol(f"w_{i}_{k}") for k in range(1, m[i - 1] + 1)] for i in cd.nodes
    }
    unknowns = [w for i in cd.nodes for w in ws[i]]
    system = BetheSystem(cd, list(sites), m, unknowns)
    for i in cd.nodes:
        qi = q ** cd.symmetrizer(i)
        for k, w in enumerate(ws[i]):
            ln, ld, rn, rd = [], [], [], []
            for site in sites:
                for a in site.get(i, []):
                    ln.append(qi * (w - a / qi))
                    ld.append(w - a * qi)
            for s, ws_ in enumerate(ws[i]):
                if s != k:
                    rn.append(w - ws_ / qi**2)
                    rd.append(w - ws_ * qi**2)
            for l in cd.nodes:
                if l == i:
                    continue
                Cli = cd.cartan(l, i)
                if Cli == 0:
                    continue
                for ws_ in ws[l]:
                    rn.append(w - ws_ * q ** (-Cli))
                    rd.append(w - ws_ * q**Cli)
            system.equations.append(BetheEquation(i, k + 1, w, ln, ld, rn, rd, K))
    return system


def generate_sl2(rs: Sequence[int], bs: Sequence, m: int, constant=None) -> BetheSystem:
    """sl2 chain of evaluation modules ``W_{r_j}(b_j)``."""
    if len(rs) != len(bs):
        raise ValueError("rs and bs must have the same length")
    return generate_bethe(build_cartan("A", 1), [kr_site(r, b) for r, b in zip(rs, bs)], [m], constant)
