"""The coloured graph of a q-character: edges are A^{-1} steps inside sl2 strings."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from qchar.cartan import CartanData
from qchar.charbuild.fm import chi_i_string
from qchar.charbuild.structure import _Solver
from qchar.sl2theory import character_terms
from qchar.ypoly import YMonomial, YPolynomial


@dataclass
class CharGraph:
    vertices: list[tuple[YMonomial, int]] = field(default_factory=list)
    edges: list[tuple[int, int, int, int]] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def index(self, m: YMonomial) -> int:
        for k, (v, _) in enumerate(self.vertices):
            if v == m:
                return k
        raise KeyError(str(m))

    def successors(self, k: int) -> list[int]:
        return sorted({dst for src, dst, _, _ in self.edges if src == k})

    def reachable_from(self, k: int = 0) -> set[int]:
        seen = {k}
        stack = [k]
        while stack:
            for nxt in self.successors(stack.pop()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    def is_rooted_connected(self) -> bool:
        """Every vertex is reachable by an oriented path from the highest vertex."""
        if not self.vertices:
            return True
        return len(self.reachable_from(0)) == len(self.vertices)

    def colour_subgraph(self, i: int) -> list[tuple[int, int, int, int]]:
        return [e for e in self.edges if e[2] == i]


def _peel_strings(cd: CartanData, p: YPolynomial, i: int):
    """Split ``p`` into node-i strings; yields ``(coef, [(monomial, A-centres)])``."""
    rest = dict(p.terms)
    strings = []

    def iweight(m: YMonomial) -> int:
        return sum(e for (j, _), e in m.items if j == i)

    guard = 0
    while rest:
        guard += 1
        if guard > 100_000:
            raise RuntimeError("string peeling did not terminate")
        wmax = max(iweight(m) for m in rest)
        top = min((m for m in rest if iweight(m) == wmax), key=lambda m: m.items)
        if not top.is_i_dominant(i):
            raise ValueError(f"restriction to node {i} is not a character: {top} is not {i}-dominant")
        coef = rest[top]
        if coef < 0:
            raise ValueError(f"negative multiplicity {coef} for the node-{i} string at {top}")
        ipart = top.node_part(i)
        other = top / ipart
        positions = [n for (_, n), e in ipart.items for _ in range(e)]
        keys = sorted(character_terms(positions, cd.symmetrizer(i)).items())
        mons = chi_i_string(cd, i, positions)
        members = []
        for (key, mult), (m, _, _) in zip(keys, mons):
            m2 = other * m
            rest[m2] = rest.get(m2, 0) - coef * mult
            if rest[m2] == 0:
                del rest[m2]
            members.append((m2, key))
        strings.append((coef, members))
    return strings


def build_graph(p: YPolynomial, cd: CartanData, top: YMonomial | None = None) -> CharGraph:
    """Vertices are the monomials of ``p``; an edge ``M1 -> M2`` of colour i and label c
    joins two members of one node-i string with ``M2 = M1 A_{i,c}^{-1}``."""
    g = CharGraph()
    if p.is_zero():
        return g
    if top is None:
        doms = p.dominant_monomials()
        top = max(doms, key=lambda m: sum(e for _, e in m.items)) if doms else p.monomials()[0]
    solver = _Solver(cd)
    depth = {}
    for m in p:
        v = solver.solve(m / top)
        if v is None or any(c < 0 for q in v for c in q.terms.values()):
            raise ValueError(f"monomial {m} is not the highest one times inverse A's")
        depth[m] = sum(sum(q.terms.values()) for q in v)
    order = sorted(p.monomials(), key=lambda m: (depth[m], m.items))
    g.vertices = [(m, p.coefficient(m)) for m in order]
    idx = {m: k for k, m in enumerate(order)}
    edges = set()
    shared: dict[int, list[str]] = {}
    for i in cd.nodes:
        seen: Counter = Counter()
        for coef, members in _peel_strings(cd, p, i):
            for m, _ in {mm: None for mm, _ in members}.items():
                seen[m] += 1
            for m1, k1 in members:
                for m2, k2 in members:
                    if len(k2) != len(k1) + 1:
                        continue
                    extra = Counter(k2) - Counter(k1)
                    if sum(extra.values()) == 1 and not (Counter(k1) - Counter(k2)):
                        (c,) = extra.keys()
                        edges.add((idx[m1], idx[m2], i, c))
        multi = sorted(str(m) for m, k in seen.items() if k > 1)
        if multi:
            shared[i] = multi
    g.edges = sorted(edges)
    g.metadata = {
        "top": str(top),
        "shared_vertices": {str(i): v for i, v in shared.items()},
        "ambiguous": any(mult > 1 for _, mult in g.vertices) or bool(shared),
    }
    return g


def export_dot(g: CharGraph, name: str = "qchar") -> str:
    """Deterministic DOT text; edge labels read ``"i,q^c"``."""
    lines = [f"digraph {name} {{"]
    for k, (m, mult) in enumerate(g.vertices):
        extra = f", mult={mult}" if mult != 1 else ""
        lines.append(f'  v{k} [label="{m}"{extra}];')
    for src, dst, i, c in g.edges:
        lines.append(f'  v{src} -> v{dst} [label="{i},q^{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
