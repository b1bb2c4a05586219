"""Critical finite MV-algebras.

A finite algebra is critical when it does not lie in the quasivariety
generated by its proper subalgebras.  For products of Łukasiewicz chains this
is decided by a divisibility condition on the chain moduli; a brute-force
decision straight from the definition is provided alongside as an oracle.
"""

import itertools

from .algebra import ProductAlgebra
from .config import DEFAULT, BudgetExceeded
from .morphisms import _coordinate_maps, canonical_decomposition


class NotApplicable(ValueError):
    pass


def signature(moduli) -> tuple:
    """Canonical (sorted) form of a multiset of chain moduli."""
    out = tuple(sorted(int(n) for n in moduli))
    if any(n < 1 for n in out):
        raise ValueError(f"chain moduli must be positive, got {out}")
    return out


def divisible_indices(sig) -> list:
    """Indices ``j`` such that some other entry divides entry ``j``."""
    return [
        j
        for j, nj in enumerate(sig)
        if any(nj % ni == 0 for i, ni in enumerate(sig) if i != j)
    ]


def check_critical_signature(sig) -> bool:
    """Distinct entries, and at most one entry divisible by another entry."""
    sig = signature(sig)
    if not sig:
        raise NotApplicable("the trivial algebra has no critical signature")
    if len(set(sig)) != len(sig):
        return False
    return len(divisible_indices(sig)) <= 1


def is_critical(A, budget=None) -> bool:
    sig = canonical_decomposition(A, budget)
    if not sig:
        return False
    return check_critical_signature(sig)


def endomorphism_tables(A: ProductAlgebra, budget=None):
    """Yield every endomorphism of ``A`` as a tuple of coordinate maps.

    An endomorphism of a product of chains is a tuple of homomorphisms
    ``A -> L_{n_i}``, one per coordinate.
    """
    limit = DEFAULT.carrier if budget is None else budget
    if A.size > limit:
        raise BudgetExceeded("carrier size", A.size, limit)
    per_factor = [_coordinate_maps(A, n) for n in A.moduli]
    yield from itertools.product(*per_factor)


def critical_oracle(A: ProductAlgebra, budget=None) -> bool:
    """Decide criticality from the definition, without the divisibility criterion.

    ``A`` lies in the quasivariety of its proper subalgebras iff homomorphisms
    into proper subalgebras separate its points; such maps are exactly the
    non-surjective endomorphisms.
    """
    N = A.size
    # signature[a] collects h(a) over every non-surjective endomorphism h
    columns = [[] for _ in range(N)]
    for coords in endomorphism_tables(A, budget):
        images = list(zip(*coords)) if coords else [()] * N
        if len(set(images)) == N:
            continue
        for col, img in zip(columns, images):
            col.append(img)
    separated = len({tuple(c) for c in columns}) == N
    return not separated


def divisor_closure(variety) -> list:
    """All ``d`` with ``L_d`` in the variety generated by the given chains."""
    return sorted({d for m in variety for d in range(1, m + 1) if m % d == 0})


def enumerate_criticals(variety) -> list:
    """Signatures of all critical algebras in ``V(L_{m_1}, ..., L_{m_r})``.

    Builds candidates in increasing order: a new, larger entry can never
    divide an earlier one, so the count of divisible entries only grows and
    the search prunes as soon as it exceeds one.
    """
    variety = signature(variety)
    if not variety:
        raise ValueError("the variety must be given by at least one chain")
    M = divisor_closure(variety)
    out = []

    def extend(chosen, n_divisible, start):
        for idx in range(start, len(M)):
            x = M[idx]
            d = n_divisible + any(x % c == 0 for c in chosen)
            if d > 1:
                continue
            nxt = chosen + (x,)
            out.append(nxt)
            extend(nxt, d, idx + 1)

    extend((), 0, 0)
    return sorted(out, key=lambda s: (len(s), s))
