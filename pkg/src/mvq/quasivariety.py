"""Quasivarieties generated by finite families of critical MV-algebras.

A family is a collection of signatures (sorted tuples of chain moduli); the
empty family generates the trivial quasivariety.
"""

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .algebra import ProductAlgebra
from .config import DEFAULT, BudgetExceeded
from .criticality import check_critical_signature, enumerate_criticals, signature
from .morphisms import enumerate_homomorphisms


def _family(family) -> frozenset:
    return frozenset(signature(s) for s in family)


def sort_family(family) -> tuple:
    return tuple(sorted(family, key=lambda s: (len(s), s)))


@dataclass(frozen=True)
class Inclusion:
    """Outcome of checking one left generator against the right family.

    ``admissible`` is the largest candidate set H: right generators each of
    whose factors is divisible by a factor of ``generator``.  ``rejected``
    maps every other right generator to its first factor with no divisor in
    ``generator``.  ``uncovered`` lists factors of ``generator`` dividing no
    factor of any admissible generator.
    """

    generator: tuple
    admissible: tuple
    rejected: dict = field(default_factory=dict)
    uncovered: tuple = ()

    @property
    def holds(self) -> bool:
        return bool(self.admissible) and not self.uncovered


def check_generator(gen, right) -> Inclusion:
    gen = signature(gen)
    admissible = []
    rejected = {}
    for j in sort_family(_family(right)):
        bad = [m for m in j if not any(m % n == 0 for n in gen)]
        if bad:
            rejected[j] = bad[0]
        else:
            admissible.append(j)
    factors = {m for j in admissible for m in j}
    uncovered = tuple(n for n in gen if not any(m % n == 0 for m in factors))
    return Inclusion(gen, tuple(admissible), rejected, uncovered)


def inclusion_report(left, right) -> list:
    return [check_generator(g, right) for g in sort_family(_family(left))]


def qv_leq(left, right) -> bool:
    """Whether ``Q(left)`` is contained in ``Q(right)`` for families of critical algebras.

    Condition (2) on a candidate set H only restricts individual members of
    H, and condition (1) only gets easier as H grows, so it suffices to test
    the largest admissible H.
    """
    return all(r.holds for r in inclusion_report(left, right))


def qv_equal(left, right) -> bool:
    return qv_leq(left, right) and qv_leq(right, left)


def isp_member(sig, family, budget=None) -> bool:
    """Oracle: does ``ProductAlgebra(sig)`` embed in a product of members of ``family``?

    Decided by whether homomorphisms into the individual members separate
    points; no divisibility reasoning is involved.
    """
    A = ProductAlgebra(sig)
    seen = [[] for _ in A.elements]
    for g in sort_family(_family(family)):
        for h in enumerate_homomorphisms(A, ProductAlgebra(g), budget=budget):
            for col, img in zip(seen, h.table):
                col.append(img)
    return len({tuple(c) for c in seen}) == A.size


def isp_leq(left, right, budget=None) -> bool:
    return all(isp_member(g, right, budget) for g in _family(left))


class NonCriticalGenerator(ValueError):
    pass


@dataclass(frozen=True)
class QuasivarietySpec:
    """Irredundant generating family of critical signatures, in canonical order."""

    generators: tuple = ()

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def label(self) -> str:
        """``{n_1,...,n_l; m_1,...,m_k}`` names ``Q(L_{n_1} x ..., L_{m_1} x ...)``."""
        if not self.generators:
            return "∅"
        return "{" + "; ".join(",".join(map(str, g)) for g in self.generators) + "}"


def canonicalize(family) -> QuasivarietySpec:
    fam = set(_family(family))
    for g in fam:
        if not check_critical_signature(g):
            raise NonCriticalGenerator(f"{list(g)} is not a critical signature")
    changed = True
    while changed:
        changed = False
        for g in sort_family(fam):
            rest = fam - {g}
            if rest and qv_leq({g}, rest):
                fam = rest
                changed = True
                break
    return QuasivarietySpec(sort_family(fam))


def variety_membership(sig, variety) -> bool:
    """Whether ``L_{s_1} x ... x L_{s_k}`` lies in ``V(L_{m_1}, ..., L_{m_r})``."""
    variety = signature(variety)
    if not variety:
        raise ValueError("the variety must be given by at least one chain")
    return all(any(m % n == 0 for m in variety) for n in signature(sig))


def qv_closure(family, criticals) -> frozenset:
    """Members of ``criticals`` lying in ``Q(family)``."""
    family = _family(family)
    return frozenset(c for c in criticals if qv_leq({c}, family))


@dataclass
class QvLattice:
    ambient: tuple
    nodes: list
    closures: list
    cover_edges: list

    def index_of(self, spec) -> int:
        closure = qv_closure(spec, self.closures[-1])
        return self.closures.index(closure)

    def leq(self, i: int, j: int) -> bool:
        return self.closures[i] <= self.closures[j]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    def _extremal(self, i, j, upper):
        n = len(self.nodes)
        if upper:
            bounds = [k for k in range(n) if self.leq(i, k) and self.leq(j, k)]
            best = [k for k in bounds if all(self.leq(k, b) for b in bounds)]
        else:
            bounds = [k for k in range(n) if self.leq(k, i) and self.leq(k, j)]
            best = [k for k in bounds if all(self.leq(b, k) for b in bounds)]
        return best[0] if len(best) == 1 else None

    def join(self, i, j):
        return self._extremal(i, j, upper=True)

    def meet(self, i, j):
        return self._extremal(i, j, upper=False)

    def is_lattice(self) -> bool:
        n = len(self.nodes)
        return all(
            self.join(i, j) is not None and self.meet(i, j) is not None
            for i in range(n)
            for j in range(i, n)
        )

    def to_json(self) -> dict:
        return {
            "ambient": list(self.ambient),
            "nodes": [
                {"id": i, "generators": [list(g) for g in node.generators]}
                for i, node in enumerate(self.nodes)
            ],
            "covers": [[a, b] for a, b in self.cover_edges],
        }

    def to_dot(self) -> str:
        lines = [
            "digraph quasivarieties {",
            "  rankdir=BT;",
            '  node [shape=plaintext];',
        ]
        for i, node in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{node.label()}"];')
        for a, b in self.cover_edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_subquasivarieties(variety, budget=None) -> QvLattice:
    """All subquasivarieties of ``V(L_{m_1}, ..., L_{m_r})`` with their cover relation."""
    limit = DEFAULT.criticals if budget is None else budget
    ambient = signature(variety)
    crit = enumerate_criticals(ambient)
    if len(crit) > limit:
        raise BudgetExceeded("number of critical algebras", len(crit), limit)
    closures = set()
    for k in range(len(crit) + 1):
        for subset in itertools.combinations(crit, k):
            closures.add(qv_closure(subset, crit))
    ordered = sorted(closures, key=lambda c: (len(c), sort_family(c)))
    nodes = [canonicalize(c) for c in ordered]
    # sort again so that ties in closure size follow the generator lists
    order = sorted(range(len(nodes)), key=lambda i: (len(ordered[i]), nodes[i].generators))
    nodes = [nodes[i] for i in order]
    ordered = [ordered[i] for i in order]

    g = nx.DiGraph()
    g.add_nodes_from(range(len(nodes)))
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            if i != j and a < b:
                g.add_edge(i, j)
    covers = sorted(nx.transitive_reduction(g).edges())
    return QvLattice(ambient, nodes, ordered, covers)
