"""Highest-weight data: a multiset of Drinfeld roots per node."""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass

from qchar.cartan import CartanData
from qchar.ypoly import YMonomial


@dataclass(frozen=True)
class HighestWeight:
    """Positions of the inverse roots of each Drinfeld polynomial, keyed by node."""

    roots: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, data: dict) -> "HighestWeight":
        clean = {}
        for k, v in data.items():
            i = int(k)
            pts = tuple(sorted(int(x) for x in v))
            if pts:
                clean[i] = pts
        return cls(tuple(sorted(clean.items())))

    @classmethod
    def fundamental(cls, i: int, pos: int = 0) -> "HighestWeight":
        return cls(((i, (pos,)),))

    @classmethod
    def from_monomial(cls, m: YMonomial) -> "HighestWeight":
        if not m.is_dominant():
            raise ValueError(f"{m} is not dominant")
        acc: dict[int, list[int]] = {}
        for (i, n), e in m.items:
            acc.setdefault(i, []).extend([n] * e)
        return cls.from_dict(acc)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.roots)

    def nodes(self) -> list[int]:
        return [i for i, _ in self.roots]

    def validate(self, cd: CartanData) -> None:
        for i in self.nodes():
            cd.check_node(i)

    def monomial(self) -> YMonomial:
        acc: Counter = Counter()
        for i, pts in self.roots:
            for n in pts:
                acc[(i, n)] += 1
        return YMonomial(acc)

    def shift(self, k: int) -> "HighestWeight":
        return HighestWeight(tuple((i, tuple(n + k for n in pts)) for i, pts in self.roots))

    def to_json(self) -> dict:
        return {"roots": {str(i): list(pts) for i, pts in self.roots}}

    @classmethod
    def from_json(cls, data: dict) -> "HighestWeight":
        if not isinstance(data, dict) or not isinstance(data.get("roots"), dict):
            raise ValueError('highest weight JSON must look like {"roots": {"1": [0]}}')
        return cls.from_dict(data["roots"])


_ROOT_SPEC = re.compile(r"\s*(\d+)\s*:\s*\[([^\]]*)\]\s*")


def parse_roots(text: str) -> HighestWeight:
    """Parse ``"1:[0,2];2:[1]"`` or the JSON form."""
    text = text.strip()
    if text.startswith("{"):
        return HighestWeight.from_json(json.loads(text))
    acc: dict[int, list[int]] = {}
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        m = _ROOT_SPEC.fullmatch(chunk)
        if not m:
            raise ValueError(f"cannot parse root spec {chunk!r}")
        body = m.group(2).strip()
        pts = [int(x) for x in body.split(",")] if body else []
        acc.setdefault(int(m.group(1)), []).extend(pts)
    return HighestWeight.from_dict(acc)
