"""Exhaustive quasiequation model checking over finite MV-algebras."""

import itertools
from dataclasses import dataclass, field

from .config import DEFAULT, BudgetExceeded
from .criticality import enumerate_criticals, signature
from .morphisms import canonical_decomposition
from .quasivariety import QuasivarietySpec, canonicalize, qv_closure, qv_leq, variety_membership
from .algebra import ProductAlgebra
from .terms import (
    One,
    Quasiequation,
    Scalar,
    Neg,
    Var,
    VarietyAtom,
    eval_term,
)


class QuasiequationError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict = None

    def __bool__(self):
        return self.holds


def satisfies(A, q: Quasiequation, budget=None) -> Verdict:
    """Check ``q`` under every assignment; the witness is the first failure in lexicographic order.

    A :class:`VarietyAtom` conclusion must mention a variable absent from the
    premises; it is then settled once from the decomposition of ``A``.
    """
    limit = DEFAULT.assignments if budget is None else budget
    atom = q.conclusion if isinstance(q.conclusion, VarietyAtom) else None
    if atom is not None:
        if atom.var.index in q.premise_variables():
            raise QuasiequationError(
                f"variety atom variable x{atom.var.index} must not occur in the premises"
            )
        names = sorted(q.premise_variables())
    else:
        names = sorted(q.variables())
    count = A.size ** len(names)
    if count > limit:
        raise BudgetExceeded(
            f"assignments ({len(names)} variables over {A.size} elements)", count, limit
        )

    if atom is not None:
        if variety_membership(canonical_decomposition(A), atom.moduli):
            return Verdict(True)
        lhs_rhs = None
    else:
        lhs_rhs = q.conclusion

    for values in itertools.product(A.elements, repeat=len(names)):
        env = dict(zip(names, values))
        if not all(eval_term(A, a, env) == eval_term(A, b, env) for a, b in q.premises):
            continue
        if lhs_rhs is None or eval_term(A, lhs_rhs[0], env) != eval_term(A, lhs_rhs[1], env):
            return Verdict(False, env)
    return Verdict(True)


def excludes_chain_qe(n: int) -> Quasiequation:
    """``(n-1)(~x) = x => x = 1``: holds exactly in algebras with no copy of ``L_n``."""
    if n < 1:
        raise ValueError("n must be positive")
    x = Var(0)
    return Quasiequation(((Scalar(n - 1, Neg(x)), x),), (x, One()))


def contains_chain(n: int, sig) -> bool:
    """Whether ``L_n`` embeds in ``L_{s_1} x ... x L_{s_k}``.

    An embedding is a tuple of homomorphisms ``L_n -> L_{s_i}``; each exists
    iff ``n`` divides ``s_i``.  The trivial algebra contains no chain.
    """
    sig = signature(sig)
    return bool(sig) and all(s % n == 0 for s in sig)


def k_colon_ln(spec, n: int, ambient) -> QuasivarietySpec:
    """Generators of ``K : L_n``, the members of ``K = Q(spec)`` without a copy of ``L_n``."""
    crit = enumerate_criticals(ambient)
    kept = [c for c in sorted(qv_closure(spec, crit)) if not contains_chain(n, c)]
    return canonicalize(kept)


@dataclass
class AxiomReport:
    """Result of comparing a quasivariety with a candidate axiom set.

    The comparison runs over the critical algebras of the ambient variety and
    the trivial algebra; since every subquasivariety is generated by its
    critical members, this is the complete finite check.
    """

    spec: QuasivarietySpec
    ambient: tuple
    passed: bool
    rows: list = field(default_factory=list)
    counterexample: tuple = None

    scope = "critical algebras of the ambient variety plus the trivial algebra"


def verify_axiomatization(spec, axioms, ambient, budget=None) -> AxiomReport:
    ambient = signature(ambient)
    spec = spec if isinstance(spec, QuasivarietySpec) else canonicalize(spec)
    report = AxiomReport(spec, ambient, True)
    for c in [(), *enumerate_criticals(ambient)]:
        A = ProductAlgebra(c)
        expected = qv_leq({c}, spec.generators) if c else True
        failing = None
        for q in axioms:
            v = satisfies(A, q, budget)
            if not v:
                failing = (q, v.witness)
                break
        actual = failing is None
        report.rows.append((c, expected, actual))
        if expected != actual and report.passed:
            report.passed = False
            q, w = failing if failing else (None, None)
            report.counterexample = (c, q, w)
    return report
