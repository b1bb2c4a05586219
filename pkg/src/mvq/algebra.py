"""Finite MV-algebras as products of Łukasiewicz chains.

An element of ``L_{n_0} x ... x L_{n_{l-1}}`` is stored as the tuple of
numerators ``(k_0, ..., k_{l-1})`` with ``0 <= k_i <= n_i``; coordinate ``i``
denotes the rational ``k_i / n_i``.  Everything is exact integer arithmetic.
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .config import DEFAULT, BudgetExceeded


class InvalidElement(ValueError):
    pass


def _check_moduli(moduli):
    moduli = tuple(int(n) for n in moduli)
    if any(n < 1 for n in moduli):
        raise ValueError(f"chain moduli must be positive, got {moduli}")
    return moduli


@dataclass(frozen=True)
class ProductAlgebra:
    """``L_{n_0} x ... x L_{n_{l-1}}``; the empty product is the trivial algebra."""

    moduli: tuple

    def __init__(self, moduli: Iterable[int] = ()):
        object.__setattr__(self, "moduli", _check_moduli(moduli))

    @classmethod
    def chain(cls, n: int) -> "ProductAlgebra":
        return cls((n,))

    def __repr__(self):
        return f"ProductAlgebra({list(self.moduli)})"

    @property
    def size(self) -> int:
        out = 1
        for n in self.moduli:
            out *= n + 1
        return out

    @cached_property
    def elements(self) -> tuple:
        return tuple(itertools.product(*(range(n + 1) for n in self.moduli)))

    @cached_property
    def _strides(self):
        strides = []
        acc = 1
        for n in reversed(self.moduli):
            strides.append(acc)
            acc *= n + 1
        return tuple(reversed(strides))

    def index(self, a) -> int:
        """Position of ``a`` in :attr:`elements` (lexicographic order)."""
        return sum(k * s for k, s in zip(a, self._strides))

    @property
    def zero(self):
        return (0,) * len(self.moduli)

    @property
    def one(self):
        return self.moduli

    def __contains__(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.moduli)
            and all(isinstance(k, int) and 0 <= k <= n for k, n in zip(a, self.moduli))
        )

    def check(self, a):
        a = tuple(a)
        if a not in self:
            raise InvalidElement(f"{a!r} is not an element of {self!r}")
        return a

    # basic operations (unchecked; use the module-level functions for validation)

    def add(self, a, b):
        return tuple(min(n, x + y) for n, x, y in zip(self.moduli, a, b))

    def neg(self, a):
        return tuple(n - x for n, x in zip(self.moduli, a))

    def odot(self, a, b):
        return tuple(max(0, x + y - n) for n, x, y in zip(self.moduli, a, b))

    def join(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def meet(self, a, b):
        return tuple(min(x, y) for x, y in zip(a, b))

    def leq(self, a, b) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def scalar(self, m: int, a):
        return tuple(min(n, m * x) for n, x in zip(self.moduli, a))

    def format(self, a) -> str:
        """Render an element as ``k/n`` per coordinate."""
        parts = [f"{k}/{n}" for k, n in zip(a, self.moduli)]
        if len(parts) == 1:
            return parts[0]
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class Subuniverse:
    """A subset of a product algebra closed under the basic operations.

    Exposes the same operation interface as :class:`ProductAlgebra` so that
    homomorphism search and evaluation treat both alike.
    """

    parent: ProductAlgebra
    elements: tuple = field(compare=True)

    def __repr__(self):
        return f"Subuniverse({self.parent!r}, size={len(self.elements)})"

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def moduli(self):
        return self.parent.moduli

    @property
    def zero(self):
        return self.parent.zero

    @property
    def one(self):
        return self.parent.one

    @cached_property
    def _members(self):
        return frozenset(self.elements)

    def __contains__(self, a) -> bool:
        return a in self._members

    def check(self, a):
        a = tuple(a)
        if a not in self._members:
            raise InvalidElement(f"{a!r} is not in {self!r}")
        return a

    def index(self, a) -> int:
        return self._positions[a]

    @cached_property
    def _positions(self):
        return {a: i for i, a in enumerate(self.elements)}

    def add(self, a, b):
        return self.parent.add(a, b)

    def neg(self, a):
        return self.parent.neg(a)

    def odot(self, a, b):
        return self.parent.odot(a, b)

    def join(self, a, b):
        return self.parent.join(a, b)

    def meet(self, a, b):
        return self.parent.meet(a, b)

    def leq(self, a, b):
        return self.parent.leq(a, b)

    def scalar(self, m, a):
        return self.parent.scalar(m, a)

    def format(self, a):
        return self.parent.format(a)

    def as_set(self) -> frozenset:
        return self._members


def mv_add(A, a, b):
    return A.add(A.check(a), A.check(b))


def mv_neg(A, a):
    return A.neg(A.check(a))


_DERIVED = {
    "odot": lambda A, a, b: A.odot(a, b),
    "join": lambda A, a, b: A.join(a, b),
    "meet": lambda A, a, b: A.meet(a, b),
    "leq": lambda A, a, b: A.leq(a, b),
}


def derived_op(A, op: str, a, b):
    """``op`` is one of ``odot``, ``join``, ``meet`` or ``leq``."""
    try:
        fn = _DERIVED[op]
    except KeyError:
        raise ValueError(f"unknown derived operation {op!r}") from None
    return fn(A, A.check(a), A.check(b))


def scalar(A, m: int, a):
    if m < 0:
        raise ValueError("scalar multiple must be a natural number")
    return A.scalar(m, A.check(a))


def chain_embeds(n: int, m: int) -> bool:
    """Whether ``L_n`` is a subalgebra of ``L_m``."""
    if n < 1 or m < 1:
        raise ValueError("chain moduli must be positive")
    return m % n == 0


def _close(A, start, seed=()):
    """Close ``start | seed`` under the operations; ``start`` is already closed."""
    members = set(start)
    order = list(start)
    todo = [a for a in seed if a not in members]
    for a in todo:
        members.add(a)
    order.extend(todo)
    while todo:
        x = todo.pop()
        new = [A.neg(x)]
        new.extend(A.add(x, y) for y in order)
        for z in new:
            if z not in members:
                members.add(z)
                order.append(z)
                todo.append(z)
    return members


def generate_subuniverse(A, gens=()) -> Subuniverse:
    """Least subuniverse of ``A`` containing ``gens``."""
    gens = [A.check(g) for g in gens]
    root = A.parent if isinstance(A, Subuniverse) else A
    members = _close(A, (), [A.zero, *gens])
    return Subuniverse(root, tuple(sorted(members)))


def _check_budget(A, budget):
    limit = DEFAULT.carrier if budget is None else budget
    if A.size > limit:
        raise BudgetExceeded("carrier size", A.size, limit)


def all_subuniverses(A: ProductAlgebra, budget=None) -> list:
    """Every subuniverse of ``A``, by one-point extension from the bottom."""
    _check_budget(A, budget)
    bottom = frozenset(_close(A, (), [A.zero]))
    seen = {bottom}
    queue = [bottom]
    while queue:
        S = queue.pop()
        for a in A.elements:
            if a in S:
                continue
            T = frozenset(_close(A, S, [a]))
            if T not in seen:
                seen.add(T)
                queue.append(T)
    subs = sorted((tuple(sorted(S)) for S in seen), key=lambda s: (len(s), s))
    return [Subuniverse(A, s) for s in subs]


def maximal_proper_subuniverses(A: ProductAlgebra, budget=None) -> list:
    out = []
    for S in all_subuniverses(A, budget):
        if S.size == A.size:
            continue
        members = S.as_set()
        # maximal iff every one-point extension already generates A
        if all(len(_close(A, members, [a])) == A.size for a in A.elements if a not in members):
            out.append(S)
    return out


# -- the lexicographic algebra L_n^omega ------------------------------------


@dataclass(frozen=True, order=True)
class LexElement:
    """The pair ``(numerator/n, second)`` of ``Gamma(Q_n (x) Z, (1, 0))``."""

    numerator: int
    second: int

    def valid(self, n: int) -> bool:
        k, i = self.numerator, self.second
        return (0 < k < n) or (k == 0 and i >= 0) or (k == n and i <= 0)


def lex_add(n: int, a: LexElement, b: LexElement) -> LexElement:
    s = LexElement(a.numerator + b.numerator, a.second + b.second)
    top = LexElement(n, 0)
    return min(s, top)


def lex_neg(n: int, a: LexElement) -> LexElement:
    return LexElement(n - a.numerator, -a.second)


def lex_closure_growth(n: int, gens, bound: int) -> int:
    """Size of the subalgebra of ``L_n^omega`` generated by ``gens``, capped at ``bound + 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    gens = [g if isinstance(g, LexElement) else LexElement(*g) for g in gens]
    for g in gens:
        if not g.valid(n):
            raise InvalidElement(f"{g} is not an element of L_{n}^omega")
    cap = bound + 1
    members = {LexElement(0, 0), LexElement(n, 0), *gens}
    basis = sorted(members)
    if len(members) >= cap:
        return cap

    # Cheap pass first: adding generators one step at a time finds unbounded
    # growth in linear time.  Anything found is in the closure regardless.
    todo = list(members)
    while todo:
        x = todo.pop()
        for z in [lex_neg(n, x), *(lex_add(n, x, g) for g in basis)]:
            if z not in members:
                members.add(z)
                if len(members) >= cap:
                    return cap
                todo.append(z)

    # The cheap pass stabilised: finish with the full pairwise closure.
    order = sorted(members)
    todo = list(order)
    while todo:
        x = todo.pop()
        for y in list(order):
            z = lex_add(n, x, y)
            if z not in members:
                members.add(z)
                if len(members) >= cap:
                    return cap
                order.append(z)
                todo.append(z)
                w = lex_neg(n, z)
                if w not in members:
                    members.add(w)
                    if len(members) >= cap:
                        return cap
                    order.append(w)
                    todo.append(w)
    return len(members)
