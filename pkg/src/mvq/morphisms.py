"""Homomorphism search between finite MV-algebras and the product decomposition."""

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .algebra import ProductAlgebra, Subuniverse, _close
from .config import DEFAULT, BudgetExceeded


@dataclass(frozen=True)
class Homomorphism:
    """A map given by its table: ``table[i]`` is the image of ``source.elements[i]``."""

    source: object
    target: object
    table: tuple

    def __call__(self, a):
        return self.table[self.source.index(a)]

    @cached_property
    def image(self) -> frozenset:
        return frozenset(self.table)

    def is_injective(self) -> bool:
        return len(self.image) == len(self.table)

    def is_surjective(self) -> bool:
        return len(self.image) == self.target.size

    def preserves_operations(self) -> bool:
        """Exhaustive check of 0, addition and negation."""
        S, T = self.source, self.target
        if self(S.zero) != T.zero:
            return False
        for a in S.elements:
            if self(S.neg(a)) != T.neg(self(a)):
                return False
            for b in S.elements:
                if self(S.add(a, b)) != T.add(self(a), self(b)):
                    return False
        return True


def find_generators(A) -> list:
    """A generating set of ``A`` found greedily in element order."""
    gens = []
    span = _close(A, (), [A.zero])
    for a in A.elements:
        if a not in span:
            gens.append(a)
            span = _close(A, span, [a])
            if len(span) == A.size:
                break
    return gens


def _propagate(S, T, h, order, pending):
    # extend h to the subalgebra generated by its domain; False on conflict
    while pending:
        x = pending.pop()
        hx = h[x]
        cands = [(S.neg(x), T.neg(hx))]
        cands.extend((S.add(x, y), T.add(hx, h[y])) for y in list(order))
        for s, t in cands:
            seen = h.get(s)
            if seen is None:
                h[s] = t
                order.append(s)
                pending.append(s)
            elif seen != t:
                return False
    return True


def _homs_by_generators(S, T):
    gens = find_generators(S)
    h = {S.zero: T.zero}
    order = [S.zero]
    if not _propagate(S, T, h, order, [S.zero]):
        return []
    out = []

    def search(i, h, order):
        while i < len(gens) and gens[i] in h:
            i += 1
        if i == len(gens):
            out.append(tuple(h[a] for a in S.elements))
            return
        g = gens[i]
        for t in T.elements:
            h2 = dict(h)
            order2 = list(order)
            h2[g] = t
            order2.append(g)
            if _propagate(S, T, h2, order2, [g]):
                search(i + 1, h2, order2)

    search(0, h, order)
    return out


def _check_budget(A, limit):
    if A.size > limit:
        raise BudgetExceeded("carrier size", A.size, limit)


def enumerate_homomorphisms(S, T, budget=None) -> list:
    """All homomorphisms ``S -> T`` sorted by their tables.

    A map into a product is a homomorphism iff each coordinate is, so for a
    product target the search runs once per chain factor.
    """
    limit = DEFAULT.carrier if budget is None else budget
    _check_budget(S, limit)
    _check_budget(T, limit)
    if isinstance(T, ProductAlgebra) and len(T.moduli) != 1:
        tables = _homs_into_product(S, T.moduli)
    else:
        tables = sorted(_homs_by_generators(S, T))
    return [Homomorphism(S, T, t) for t in tables]


def _homs_into_product(S, moduli):
    per_factor = [_coordinate_maps(S, n) for n in moduli]
    tables = []
    for combo in itertools.product(*per_factor):
        tables.append(tuple(zip(*combo)) if combo else tuple(() for _ in S.elements))
    tables.sort()
    return tables


def _coordinate_maps(S, n):
    # homomorphisms S -> L_n, each as a tuple of integer numerators
    return [tuple(x[0] for x in t) for t in sorted(_homs_by_generators(S, ProductAlgebra((n,))))]


def homomorphisms_into_chain(S, n: int, budget=None) -> list:
    limit = DEFAULT.carrier if budget is None else budget
    _check_budget(S, limit)
    return enumerate_homomorphisms(S, ProductAlgebra((n,)), budget=limit)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def decompose_by_homomorphisms(S, budget=None) -> tuple:
    """Chain moduli of ``S`` read off from its surjections onto chains.

    Kernels of surjections onto simple algebras are the maximal congruences,
    and a chain has no nontrivial automorphisms, so each factor ``L_m`` of the
    decomposition corresponds to exactly one surjection onto ``L_m``.
    """
    limit = DEFAULT.carrier if budget is None else budget
    _check_budget(S, limit)
    candidates = sorted({d for n in S.moduli for d in _divisors(n)})
    out = []
    for m in candidates:
        for t in _homs_by_generators(S, ProductAlgebra((m,))):
            if len(set(t)) == m + 1:
                out.append(m)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _cached_decomposition(sub: Subuniverse, budget):
    return decompose_by_homomorphisms(sub, budget)


def canonical_decomposition(A, budget=None) -> tuple:
    """Sorted chain moduli ``(n_1, ..., n_k)`` with ``A`` isomorphic to ``L_{n_1} x ... x L_{n_k}``."""
    if isinstance(A, ProductAlgebra):
        return tuple(sorted(A.moduli))
    return _cached_decomposition(A, budget)
