import itertools

import pytest

from mvq.algebra import ProductAlgebra, generate_subuniverse
from mvq.config import BudgetExceeded
from mvq.criticality import enumerate_criticals
from mvq.quasiequations import (
    QuasiequationError,
    contains_chain,
    excludes_chain_qe,
    k_colon_ln,
    satisfies,
    verify_axiomatization,
)
from mvq.quasivariety import canonicalize, qv_leq
from mvq.terms import format_quasiequation, parse_quasiequation

from conftest import signatures


def test_satisfies_examples():
    q = parse_quasiequation("2*~x0 = x0 => x0 = 1")
    v = satisfies(ProductAlgebra([3]), q)
    # ~(2/3) = 1/3 and 2(1/3) = 2/3, so x0 = 2/3 satisfies the premise
    assert not v and v.witness == {0: (2,)}
    assert satisfies(ProductAlgebra([2]), q)
    v = satisfies(ProductAlgebra([4]), parse_quasiequation("1*~x0 = x0 => x0 = 1"))
    assert not v and v.witness == {0: (2,)}


def test_witness_is_lexicographically_first():
    q = parse_quasiequation("=> x0 + x1 = x0")
    v = satisfies(ProductAlgebra([2]), q)
    assert v.witness == {0: (0,), 1: (1,)}


def test_variety_atom_conclusions():
    q = parse_quasiequation("3*x0 = 1 & 3*~x0 = 1 => V[2](x1)")
    assert satisfies(ProductAlgebra([2]), q)
    v = satisfies(ProductAlgebra([2, 3]), q)
    assert not v and v.witness == {0: (1, 1)}
    # no element of L_1 x L_3 meets the premises, so the atom is never reached
    assert satisfies(ProductAlgebra([1, 3]), q)
    assert satisfies(ProductAlgebra([2, 3]), parse_quasiequation("=> V[6](x0)"))
    assert not satisfies(ProductAlgebra([4]), parse_quasiequation("=> V[2,3](x0)"))


def test_variety_atom_on_subuniverse():
    S = generate_subuniverse(ProductAlgebra([4]), [(2,)])
    assert satisfies(S, parse_quasiequation("=> V[2](x0)"))
    assert not satisfies(ProductAlgebra([4]), parse_quasiequation("=> V[2](x0)"))


def test_variety_atom_variable_must_be_fresh():
    with pytest.raises(QuasiequationError):
        satisfies(ProductAlgebra([2]), parse_quasiequation("x0 = 1 => V[2](x0)"))


def test_satisfies_budget():
    q = parse_quasiequation("=> x0 + x1 + x2 + x3 = x3 + x2 + x1 + x0")
    with pytest.raises(BudgetExceeded, match="4 variables over 64 elements"):
        satisfies(ProductAlgebra([3, 3, 3]), q, budget=10**6)


def test_excludes_chain_examples():
    q = excludes_chain_qe(3)
    assert format_quasiequation(q) == "2*~x0 = x0 => x0 = 1"
    assert not satisfies(ProductAlgebra([3]), q)
    assert satisfies(ProductAlgebra([2]), q)
    assert not satisfies(ProductAlgebra([2, 4]), excludes_chain_qe(2))


@pytest.mark.parametrize("n", range(1, 7))
def test_excludes_chain_iff_no_embedding(n):
    # L_n embeds in a product iff it maps into every factor, i.e. n divides all of them
    q = excludes_chain_qe(n)
    for sig in signatures(6, 3):
        assert bool(satisfies(ProductAlgebra(sig), q)) == (not all(s % n == 0 for s in sig)), sig


def test_contains_chain():
    assert contains_chain(2, (2, 4))
    assert not contains_chain(2, (1, 2))
    assert not contains_chain(3, ())


def _subuniverses_sample():
    A = ProductAlgebra([2, 4])
    for gens in [[(1, 2)], [(2, 1)], [(1, 0)], [(0, 1), (1, 0)]]:
        yield A, generate_subuniverse(A, gens)


@pytest.mark.parametrize(
    "text",
    [
        "2*~x0 = x0 => x0 = 1",
        "1*~x0 = x0 => x0 = 1",
        "3*~x0 = x0 => x0 = 1",
        "4*x0 = 1 & 4*~x0 = 1 => x0 = 1",
        "x0 + x0 = x0 => x0 = 0",
    ],
)
def test_quasiequations_persist_to_subalgebras(text):
    q = parse_quasiequation(text)
    for A, S in _subuniverses_sample():
        if satisfies(A, q):
            assert satisfies(S, q)


@pytest.mark.parametrize(
    "text", ["2*~x0 = x0 => x0 = 1", "1*~x0 = x0 => x0 = 1", "3*x0 = 1 & 3*~x0 = 1 => x0 = 1"]
)
def test_quasiequations_persist_to_products(text):
    q = parse_quasiequation(text)
    sigs = [s for s in signatures(4, 1)]
    for a, b in itertools.product(sigs, repeat=2):
        if satisfies(ProductAlgebra(a), q) and satisfies(ProductAlgebra(b), q):
            assert satisfies(ProductAlgebra(a + b), q)


def test_k_colon_ln_examples():
    crit = enumerate_criticals([2, 3])
    assert k_colon_ln(crit, 3, [2, 3]).generators == ((2,), (2, 3))
    assert k_colon_ln(crit, 2, [2, 3]).generators == ((3,), (2, 3))
    assert k_colon_ln([], 3, [2, 3]).generators == ()
    # L_1 x L_3 lies in Q(L_3) but has no copy of L_3
    assert k_colon_ln([(3,)], 3, [2, 3]).generators == ((1, 3),)
    assert k_colon_ln(k_colon_ln(crit, 2, [2, 3]), 3, [2, 3]).generators == ((2, 3),)


def test_verify_axiomatization_simple():
    rep = verify_axiomatization([(2,)], [parse_quasiequation("=> V[2](x0)")], [2, 3])
    assert rep.passed and rep.counterexample is None
    assert [c for c, _, _ in rep.rows] == [(), *enumerate_criticals([2, 3])]


def test_verify_axiomatization_reports_counterexample():
    # Q(L_2 x L_3) is not the whole variety
    rep = verify_axiomatization([(2, 3)], [parse_quasiequation("=> V[2,3](x0)")], [2, 3])
    assert not rep.passed
    assert rep.counterexample == ((2,), None, None)
    # the whole variety does not satisfy an exclusion axiom
    rep = verify_axiomatization(canonicalize(enumerate_criticals([2, 3])), [excludes_chain_qe(2)], [2, 3])
    c, q, w = rep.counterexample
    assert c == (2,) and q == excludes_chain_qe(2) and w == {0: (1,)}
