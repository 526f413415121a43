"""Disjoint sets over hashable items, union by size with path compression."""

from __future__ import annotations

from typing import Hashable, Optional


class UnionFind:
    def __init__(self) -> None:
        self._parent: dict[Hashable, Hashable] = {}
        self._size: dict[Hashable, int] = {}

    def add(self, item: Hashable) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def find(self, item: Hashable) -> Hashable:
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def union(self, a: Hashable, b: Hashable) -> tuple[Hashable, Optional[Hashable]]:
        """Merge the sets containing a and b.

        Returns (kept_root, absorbed_root); the absorbed root is None when
        the two items were already in the same set.
        """
        return self.link(self.find(a), self.find(b))

    def link(self, ra: Hashable, rb: Hashable) -> tuple[Hashable, Optional[Hashable]]:
        """union for callers that already hold the two roots."""
        if ra == rb:
            return ra, None
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return ra, rb
