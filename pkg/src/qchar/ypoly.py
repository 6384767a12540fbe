"""The Laurent polynomial ring Z[Y_{i,n}^{+-1}] on the spectral lattice a = q^n.

A monomial is stored as a sorted tuple of ``((i, n), e)`` pairs, so it can be
hashed and compared cheaply.  A polynomial is a map monomial -> integer.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from typing import Iterable, Iterator, Mapping

from qchar.cartan import CartanData

Key = tuple[int, int]
Weight = tuple[int, ...]


class YMonomial:
    """A Laurent monomial ``prod Y_{i,n}^{e}`` with nonzero integer exponents."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exps: Mapping[Key, int] | Iterable[tuple[Key, int]] | None = None):
        acc: dict[Key, int] = {}
        if exps is not None:
            items = exps.items() if isinstance(exps, Mapping) else exps
            for (i, n), e in items:
                k = (int(i), int(n))
                acc[k] = acc.get(k, 0) + int(e)
        self._items = tuple(sorted((k, e) for k, e in acc.items() if e))
        self._hash = hash(self._items)

    @classmethod
    def y(cls, i: int, n: int, e: int = 1) -> "YMonomial":
        return cls({(i, n): e})

    @classmethod
    def one(cls) -> "YMonomial":
        return _ONE

    @property
    def items(self) -> tuple[tuple[Key, int], ...]:
        return self._items

    def exponents(self) -> dict[Key, int]:
        return dict(self._items)

    def exponent(self, i: int, n: int) -> int:
        for k, e in self._items:
            if k == (i, n):
                return e
        return 0

    def nodes(self) -> set[int]:
        return {k[0] for k, _ in self._items}

    def is_one(self) -> bool:
        return not self._items

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        if not isinstance(other, YMonomial):
            return NotImplemented
        acc = dict(self._items)
        for k, e in other._items:
            acc[k] = acc.get(k, 0) + e
        return YMonomial(acc)

    def inverse(self) -> "YMonomial":
        return YMonomial({k: -e for k, e in self._items})

    def __truediv__(self, other: "YMonomial") -> "YMonomial":
        return self * other.inverse()

    def __pow__(self, k: int) -> "YMonomial":
        return YMonomial({key: e * k for key, e in self._items})

    def shift(self, k: int) -> "YMonomial":
        """Translate every lattice position by ``k``."""
        return YMonomial({(i, n + k): e for (i, n), e in self._items})

    def restrict(self, nodes: Iterable[int]) -> "YMonomial":
        keep = set(nodes)
        return YMonomial({k: e for k, e in self._items if k[0] in keep})

    def node_part(self, i: int) -> "YMonomial":
        return YMonomial({k: e for k, e in self._items if k[0] == i})

    def positive_part(self) -> "YMonomial":
        return YMonomial({k: e for k, e in self._items if e > 0})

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self._items)

    def is_i_dominant(self, i: int) -> bool:
        return all(e > 0 for (j, _), e in self._items if j == i)

    def degree(self) -> int:
        return sum(abs(e) for _, e in self._items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, YMonomial) and self._items == other._items

    def __lt__(self, other: "YMonomial") -> bool:
        return self._items < other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"YMonomial({self})"

    def __str__(self) -> str:
        if not self._items:
            return "1"
        out = []
        for (i, n), e in self._items:
            out.append(f"Y({i},{n})" if e == 1 else f"Y({i},{n})^{e}")
        return " ".join(out)

    def to_json(self) -> list[list[int]]:
        return [[i, n, e] for (i, n), e in self._items]


_ONE = YMonomial()

_FACTOR = re.compile(r"Y\((-?\d+),(-?\d+)\)(?:\^(-?\d+))?")


def parse_monomial(text: str) -> YMonomial:
    """Inverse of ``str(YMonomial)``; ``"1"`` is the unit."""
    text = text.strip()
    if text in ("", "1"):
        return _ONE
    acc: dict[Key, int] = {}
    for tok in text.split():
        m = _FACTOR.fullmatch(tok)
        if not m:
            raise ValueError(f"bad monomial factor {tok!r}")
        k = (int(m.group(1)), int(m.group(2)))
        acc[k] = acc.get(k, 0) + int(m.group(3) or 1)
    return YMonomial(acc)


class YPolynomial:
    """An element of Z[Y_{i,n}^{+-1}]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[YMonomial, int] | None = None):
        self._terms: dict[YMonomial, int] = {}
        for m, c in (terms or {}).items():
            if c:
                self._terms[m] = self._terms.get(m, 0) + int(c)
        self._terms = {m: c for m, c in self._terms.items() if c}

    @classmethod
    def from_monomial(cls, m: YMonomial, coef: int = 1) -> "YPolynomial":
        return cls({m: coef})

    @classmethod
    def constant(cls, c: int) -> "YPolynomial":
        return cls({_ONE: c})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[YMonomial, int]]) -> "YPolynomial":
        acc: Counter = Counter()
        for m, c in pairs:
            acc[m] += c
        return cls(acc)

    @property
    def terms(self) -> dict[YMonomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[YMonomial, int]]:
        return sorted(self._terms.items(), key=lambda t: t[0].items)

    def monomials(self) -> list[YMonomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: YMonomial) -> int:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[YMonomial]:
        return iter(self.monomials())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "YPolynomial | int") -> "YPolynomial":
        other = _as_poly(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return YPolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "YPolynomial":
        return YPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "YPolynomial | int") -> "YPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "YPolynomial | int") -> "YPolynomial":
        return _as_poly(other) - self

    def __mul__(self, other: "YPolynomial | YMonomial | int") -> "YPolynomial":
        if isinstance(other, YMonomial):
            return YPolynomial({m * other: c for m, c in self._terms.items()})
        other = _as_poly(other)
        acc: dict[YMonomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return YPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "YPolynomial":
        if k < 0:
            raise ValueError("negative powers of polynomials are not Laurent polynomials")
        out = YPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "YPolynomial":
        return YPolynomial({m.shift(k): c for m, c in self._terms.items()})

    def map_monomials(self, fn) -> "YPolynomial":
        acc: dict[YMonomial, int] = {}
        for m, c in self._terms.items():
            m2 = fn(m)
            acc[m2] = acc.get(m2, 0) + c
        return YPolynomial(acc)

    def dominant_monomials(self) -> list[YMonomial]:
        return [m for m in self.monomials() if m.is_dominant()]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = YPolynomial.constant(other)
        if not isinstance(other, YPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"YPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            if m.is_one():
                parts.append(str(c))
            elif c == 1:
                parts.append(str(m))
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"terms": [{"mono": m.to_json(), "coef": c} for m, c in self.items()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "YPolynomial":
        if not isinstance(data, dict) or "terms" not in data:
            raise ValueError("polynomial JSON must be an object with a 'terms' list")
        acc: dict[YMonomial, int] = {}
        for t in data["terms"]:
            try:
                mono = YMonomial([((int(i), int(n)), int(e)) for i, n, e in _triples(t["mono"])])
                coef = int(t["coef"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"malformed term {t!r}") from exc
            acc[mono] = acc.get(mono, 0) + coef
        return cls(acc)

    @classmethod
    def loads(cls, text: str) -> "YPolynomial":
        return cls.from_json(json.loads(text))


def _triples(raw) -> list[tuple[int, int, int]]:
    out = []
    for entry in raw:
        if len(entry) != 3:
            raise ValueError(f"monomial entry {entry!r} is not [i, n, e]")
        out.append(tuple(entry))
    return out


def _as_poly(x: "YPolynomial | YMonomial | int") -> YPolynomial:
    if isinstance(x, YPolynomial):
        return x
    if isinstance(x, YMonomial):
        return YPolynomial({x: 1})
    if isinstance(x, int):
        return YPolynomial.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to YPolynomial")


def Y(i: int, n: int, e: int = 1) -> YPolynomial:
    """Shorthand for the polynomial ``Y_{i,n}^e``."""
    return YPolynomial.from_monomial(YMonomial.y(i, n, e))


def weight_of(m: YMonomial, cd: CartanData) -> Weight:
    """Weight of ``m`` in the fundamental-weight basis: ``Y_{i,n}^{+-1}`` has weight ``+-omega_i``."""
    w = [0] * cd.rank
    for (i, _), e in m.items:
        cd.check_node(i)
        w[i - 1] += e
    return tuple(w)


def is_dominant(m: YMonomial) -> bool:
    return m.is_dominant()


def a_monomial(cd: CartanData, i: int, n: int) -> YMonomial:
    """Express ``A_{i,q^n}`` in the Y-variables."""
    cd.check_node(i)
    ri = cd.symmetrizer(i)
    exps: dict[Key, int] = {}

    def bump(j: int, pos: int, e: int) -> None:
        exps[(j, pos)] = exps.get((j, pos), 0) + e

    bump(i, n + ri, 1)
    bump(i, n - ri, 1)
    for j in cd.nodes:
        Iji = cd.incidence(j, i)
        if Iji == 1:
            bump(j, n, -1)
        elif Iji == 2:
            bump(j, n + 1, -1)
            bump(j, n - 1, -1)
        elif Iji == 3:
            bump(j, n + 2, -1)
            bump(j, n, -1)
            bump(j, n - 2, -1)
        elif Iji != 0:
            raise ValueError(f"incidence entry {Iji} not supported")
    return YMonomial(exps)


def beta_restrict(p: YPolynomial, J: Iterable[int]) -> YPolynomial:
    """Send ``Y_{i,n}`` to 1 for every node ``i`` outside ``J``."""
    keep = set(J)
    return p.map_monomials(lambda m: m.restrict(keep))


def classical_character(p: YPolynomial, cd: CartanData | None = None) -> dict[Weight, int]:
    """Image of ``p`` under ``Y_{i,n} -> y_i``, as a weight multiplicity map."""
    rank = cd.rank if cd is not None else max((i for m in p for i in m.nodes()), default=0)
    out: Counter = Counter()
    for m, c in p.items():
        w = [0] * rank
        for (i, _), e in m.items:
            if i < 1 or i > rank:
                raise ValueError(f"node {i} out of range")
            w[i - 1] += e
        out[tuple(w)] += c
    return {w: c for w, c in sorted(out.items()) if c}


def classical_dimension(p: YPolynomial) -> int:
    return sum(p.terms.values())


def convolve_weights(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> dict[Weight, int]:
    out: Counter = Counter()
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            out[tuple(x + y for x, y in zip(w1, w2))] += c1 * c2
    return {w: c for w, c in sorted(out.items()) if c}

