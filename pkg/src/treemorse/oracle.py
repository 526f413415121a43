"""Exhaustive enumeration of injective discrete Morse functions.

An injective function on a tree with N simplices is, up to order-preserving
relabeling, a bijection onto 0..N-1 that respects the face order: every
vertex below each of its edges. Those are exactly the linear extensions of
the face poset, generated here by backtracking over the minimal available
elements. The counts are small but grow quickly, hence the simplex budget.

This module is the verification backbone for the structural claims about
induced merge trees; check_invariants runs them over every labeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .complexes import Simplex, SimplicialTree, is_edge
from .errors import BudgetExceededError
from .merge_tree import MergeTree, format_value, induce_merge_tree
from .morse import MorseFunction

DEFAULT_SIMPLEX_BUDGET = 11

WITNESS_CAP = 5


def enumerate_critical_dmfs(
    tree: SimplicialTree, *, budget: int = DEFAULT_SIMPLEX_BUDGET
) -> Iterator[MorseFunction]:
    """Yield every injective labeling of tree by 0..N-1, all simplices critical.

    Deterministic: at each step the free vertices are tried in sorted order,
    then the edges whose endpoints are both placed.
    """
    n = tree.simplex_count
    if n > budget:
        raise BudgetExceededError(f"{n} simplices exceed the budget of {budget}")
    incident = {v: [e for e in sorted(tree.edges) if v in e] for v in tree.vertices}
    placed_endpoints = {e: 0 for e in tree.edges}
    free_vertices = set(tree.vertices)
    ready_edges: set = set()
    assignment: dict[Simplex, float] = {}

    def place_vertex(v: str) -> None:
        free_vertices.remove(v)
        for e in incident[v]:
            placed_endpoints[e] += 1
            if placed_endpoints[e] == 2:
                ready_edges.add(e)

    def unplace_vertex(v: str) -> None:
        free_vertices.add(v)
        for e in incident[v]:
            if placed_endpoints[e] == 2:
                ready_edges.discard(e)
            placed_endpoints[e] -= 1

    def extend() -> Iterator[MorseFunction]:
        if len(assignment) == n:
            yield MorseFunction(tree, dict(assignment))
            return
        label = len(assignment)
        for v in sorted(free_vertices):
            assignment[v] = label
            place_vertex(v)
            yield from extend()
            unplace_vertex(v)
            del assignment[v]
        # ready_edges holds only unplaced edges, so the sorted copy is the
        # full choice list; placed edges leave the set until backtracked
        for e in sorted(ready_edges):
            ready_edges.remove(e)
            assignment[e] = label
            yield from extend()
            del assignment[e]
            ready_edges.add(e)

    return extend()


def count_merge_classes(tree: SimplicialTree, *, budget: int = DEFAULT_SIMPLEX_BUDGET) -> int:
    """Distinct merge-tree shapes over every enumerated labeling."""
    return len(
        {
            induce_merge_tree(f).shape_code()
            for f in enumerate_critical_dmfs(tree, budget=budget)
        }
    )


def _describe(f: MorseFunction) -> str:
    def name(s: Simplex) -> str:
        return "-".join(s) if is_edge(s) else s

    ordered = sorted(f.values.items(), key=lambda item: item[1])
    return " ".join(f"{name(s)}={format_value(x)}" for s, x in ordered)


@dataclass
class PropertyCheck:
    """Pass/fail tally for one invariant, with witnessing labelings."""

    name: str
    checked: int = 0
    failed: int = 0
    witnesses: list[str] = field(default_factory=list)

    def record(self, ok: bool, f: MorseFunction) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.witnesses) < WITNESS_CAP:
                self.witnesses.append(_describe(f))


@dataclass
class InvariantReport:
    """Result of running the invariant suite over a full enumeration."""

    function_count: int
    checks: list[PropertyCheck]
    min_impasse_count: int
    max_impasse_count: int
    matching_number: int

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def to_text(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"functions checked: {self.function_count}"]
        lines.extend(
            f"  {c.name.ljust(width)}  {c.checked} checked, {c.failed} failed"
            for c in self.checks
        )
        for c in self.checks:
            for w in c.witnesses:
                lines.append(f"  witness [{c.name}]: {w}")
        lines.append(
            "  impasse counts observed: "
            f"{self.min_impasse_count}..{self.max_impasse_count} "
            f"(matching number {self.matching_number})"
        )
        lines.append("all invariants hold" if self.ok else "INVARIANT FAILURES")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "functions": self.function_count,
            "ok": self.ok,
            "impasse_count_min": self.min_impasse_count,
            "impasse_count_max": self.max_impasse_count,
            "matching_number": self.matching_number,
            "checks": [
                {
                    "name": c.name,
                    "checked": c.checked,
                    "failed": c.failed,
                    "witnesses": list(c.witnesses),
                }
                for c in self.checks
            ],
        }


def check_invariants(
    tree: SimplicialTree, *, budget: int = DEFAULT_SIMPLEX_BUDGET
) -> InvariantReport:
    """Assert the merge-tree invariants over every enumerated labeling.

    Checked per labeling: the merge tree is full binary; its node count
    equals the number of critical values; it has an impasse unless it is a
    single node; the impasse count is bounded by the matching number of the
    tree; the edges at impasse values are pairwise vertex-disjoint; and
    critical vertices outnumber critical edges by exactly one.
    """
    full = PropertyCheck("full binary")
    census = PropertyCheck("node count = critical values")
    has_impasse = PropertyCheck("impasse exists (n > 1)")
    bound = PropertyCheck("impasse count <= matching number")
    disjoint = PropertyCheck("impasse edges disjoint")
    counts = PropertyCheck("critical vertices = edges + 1")
    checks = [full, census, has_impasse, bound, disjoint, counts]

    nu = tree.matching_number()
    total = 0
    min_imp, max_imp = None, None
    for f in enumerate_critical_dmfs(tree, budget=budget):
        total += 1
        m: MergeTree = induce_merge_tree(f)
        # one explicit walk feeds every structural check below
        node_count = 0
        full_ok = True
        impasses = []
        stack = [m.root]
        while stack:
            node = stack.pop()
            node_count += 1
            left, right = node.left, node.right
            if (left is None) != (right is None):
                full_ok = False
            if left is not None:
                if left.left is None and right.left is None:
                    impasses.append(node)
                stack.append(right)
                stack.append(left)

        n_impasses = len(impasses)
        if min_imp is None or n_impasses < min_imp:
            min_imp = n_impasses
        if max_imp is None or n_impasses > max_imp:
            max_imp = n_impasses

        crit = f.critical_simplices
        full.record(full_ok, f)
        census.record(node_count == len(crit), f)
        has_impasse.record(node_count == 1 or n_impasses >= 1, f)
        bound.record(n_impasses <= nu, f)
        disjoint_ok = True
        endpoints: set = set()
        for node in impasses:
            e = f.critical_simplex_at(node.value)
            if not is_edge(e) or e[0] in endpoints or e[1] in endpoints:
                disjoint_ok = False
                break
            endpoints.add(e[0])
            endpoints.add(e[1])
        disjoint.record(disjoint_ok, f)
        n_edges = 0
        for s in crit:  # is_edge inlined, this loop runs per labeling
            if type(s) is tuple:
                n_edges += 1
        counts.record(len(crit) - n_edges == n_edges + 1, f)

    return InvariantReport(total, checks, min_imp or 0, max_imp or 0, nu)
