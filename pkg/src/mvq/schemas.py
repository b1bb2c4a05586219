"""Axiom schemas for the subquasivarieties of ``V(L_p, L_q)`` and ``V(L_{p^r})``."""

from dataclasses import dataclass

from .quasiequations import excludes_chain_qe, verify_axiomatization
from .quasivariety import canonicalize, enumerate_subquasivarieties
from .terms import Add, One, Quasiequation, Scalar, Neg, Var, VarietyAtom


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def variety_axiom(*moduli) -> Quasiequation:
    return Quasiequation((), VarietyAtom(tuple(moduli), Var(0)))


def cyclic_premise_qe(n: int, conclusion) -> Quasiequation:
    """``(n-1)(~x0) = x0 => conclusion``."""
    x = Var(0)
    return Quasiequation(((Scalar(n - 1, Neg(x)), x),), conclusion)


def bounded_pair_qe(r: int, conclusion) -> Quasiequation:
    """``r x0 = 1 & r(~x0) = 1 => conclusion``."""
    x = Var(0)
    return Quasiequation(((Scalar(r, x), One()), (Scalar(r, Neg(x)), One())), conclusion)


@dataclass
class Item:
    name: str
    generators: list
    axioms: list
    ambient: tuple


def two_primes_items(p: int, q: int) -> list:
    """The eight named subquasivarieties of ``V(L_p, L_q)`` with their axioms."""
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError(f"p and q must be distinct primes, got {p}, {q}")
    r = max(p, q)
    V = variety_axiom(p, q)
    amb = tuple(sorted((p, q)))
    y = Var(1)
    return [
        Item("1", [(p,), (p, q)], [V, excludes_chain_qe(q)], amb),
        Item("2", [(q,), (p, q)], [V, excludes_chain_qe(p)], amb),
        Item("3", [(p, q)], [V, excludes_chain_qe(p), excludes_chain_qe(q)], amb),
        Item("4", [(1, p)], [variety_axiom(p), excludes_chain_qe(p)], amb),
        Item("5", [(1, q)], [variety_axiom(q), excludes_chain_qe(q)], amb),
        Item(
            "6",
            [(p,), (1, q)],
            [V, excludes_chain_qe(q), bounded_pair_qe(r, VarietyAtom((p,), y))],
            amb,
        ),
        Item(
            "7",
            [(q,), (1, p)],
            [V, excludes_chain_qe(p), bounded_pair_qe(r, VarietyAtom((q,), y))],
            amb,
        ),
        Item(
            "8",
            [(1, p), (1, q)],
            [V, excludes_chain_qe(q), excludes_chain_qe(p), bounded_pair_qe(r, (Var(0), One()))],
            amb,
        ),
    ]


def _exponent(p, n):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


def prime_power_templates(generators, p: int, r: int) -> list:
    """Every template (1, 2 or 3) that a generating family of ``V(L_{p^r})`` fits.

    Returns ``(type, params)`` pairs where params hold exponents: ``s`` for the
    chain, ``pairs`` as ``[(n_1, m_1), ...]`` ordered by increasing ``n``.
    """
    chains, pairs = [], []
    for g in generators:
        exps = [_exponent(p, n) for n in g]
        if None in exps or any(e > r for e in exps):
            return []
        if len(g) == 1:
            chains.append(exps[0])
        elif len(g) == 2:
            pairs.append(tuple(exps))
        else:
            return []
    pairs.sort()
    staircase = all(n < m for n, m in pairs) and all(
        a[0] < b[0] and a[1] > b[1] for a, b in zip(pairs, pairs[1:])
    )
    out = []
    if len(chains) == 1 and not pairs:
        out.append((1, {"s": chains[0]}))
    if not chains and pairs and staircase:
        out.append((2, {"pairs": pairs}))
    if len(chains) == 1 and pairs and staircase:
        s = chains[0]
        if all(n < s < m for n, m in pairs):
            out.append((3, {"s": s, "pairs": pairs}))
    return out


def prime_power_axioms(kind: int, params: dict, p: int) -> list:
    y = Var(1)
    if kind == 1:
        return [variety_axiom(p ** params["s"])]
    pairs = params["pairs"]
    n = [a for a, _ in pairs]
    m = [b for _, b in pairs]
    k = len(pairs)
    axioms = [variety_axiom(p ** m[0])]
    if kind == 2:
        axioms.append(excludes_chain_qe(p ** (n[k - 1] + 1)))
    else:
        axioms.append(excludes_chain_qe(p ** (params["s"] + 1)))
    for j in range(1, k):
        axioms.append(cyclic_premise_qe(p ** (n[j - 1] + 1), VarietyAtom((p ** m[j],), y)))
    if kind == 3:
        axioms.append(cyclic_premise_qe(p ** (n[k - 1] + 1), VarietyAtom((p ** params["s"],), y)))
    return axioms


def verify_two_primes(p: int, q: int, budget=None) -> list:
    """``[(item, report), ...]`` for the eight items."""
    out = []
    for item in two_primes_items(p, q):
        spec = canonicalize(item.generators)
        out.append((item, verify_axiomatization(spec, item.axioms, item.ambient, budget)))
    return out


@dataclass
class NodeCheck:
    label: str
    generators: tuple
    templates: list
    report: object


def verify_prime_power(p: int, r: int, budget=None) -> list:
    """Classify and axiom-check every nontrivial subquasivariety of ``V(L_{p^r})``."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if r < 0:
        raise ValueError("r must be a natural number")
    ambient = (p**r,)
    lattice = enumerate_subquasivarieties(ambient)
    out = []
    for node in lattice.nodes:
        if not node.generators:
            continue
        templates = prime_power_templates(node.generators, p, r)
        report = None
        if len(templates) == 1:
            kind, params = templates[0]
            axioms = prime_power_axioms(kind, params, p)
            report = verify_axiomatization(node, axioms, ambient, budget)
        out.append(NodeCheck(node.label(), node.generators, templates, report))
    return out
