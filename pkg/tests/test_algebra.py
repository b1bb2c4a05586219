import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvq.algebra import (
    InvalidElement,
    LexElement,
    ProductAlgebra,
    all_subuniverses,
    chain_embeds,
    derived_op,
    generate_subuniverse,
    lex_add,
    lex_closure_growth,
    lex_neg,
    maximal_proper_subuniverses,
    mv_add,
    mv_neg,
    scalar,
)
from mvq.config import BudgetExceeded

import oracles

moduli_lists = st.lists(st.integers(1, 5), min_size=0, max_size=3)


@st.composite
def algebra_and_elements(draw, k=3):
    mods = draw(moduli_lists)
    elems = [tuple(draw(st.integers(0, n)) for n in mods) for _ in range(k)]
    return ProductAlgebra(mods), elems


def test_mv_add_examples():
    assert mv_add(ProductAlgebra([3]), (1,), (2,)) == (3,)
    assert mv_add(ProductAlgebra([3]), (0,), (2,)) == (2,)
    assert mv_add(ProductAlgebra([2, 3]), (1, 1), (2, 1)) == (2, 2)


def test_mv_neg_examples():
    A = ProductAlgebra([4])
    assert mv_neg(A, (1,)) == (3,)
    assert mv_neg(A, mv_neg(A, (1,))) == (1,)
    assert mv_neg(ProductAlgebra([2, 3]), (0, 3)) == (2, 0)


@pytest.mark.parametrize("bad", [(4,), (-1,), (1, 1), (), (1.0,)])
def test_invalid_elements_rejected(bad):
    with pytest.raises(InvalidElement):
        mv_add(ProductAlgebra([3]), bad, (0,))


def test_derived_ops_by_hand():
    # in L_3: 1/3 (.) 2/3 = max(0, 1/3 + 2/3 - 1) = 0 and
    # ~(~1/3 + 2/3) + 2/3 = ~(1) + 2/3 = 2/3
    A = ProductAlgebra([3])
    assert derived_op(A, "odot", (1,), (2,)) == (0,)
    assert derived_op(A, "join", (1,), (2,)) == (2,)
    assert derived_op(A, "meet", (1,), (2,)) == (1,)
    assert derived_op(A, "leq", (1,), (2,)) is True
    with pytest.raises(ValueError):
        derived_op(A, "xor", (1,), (2,))


@given(algebra_and_elements())
def test_derived_ops_match_their_definitions(case):
    A, (a, b, _) = case
    assert A.odot(a, b) == A.neg(A.add(A.neg(a), A.neg(b)))
    assert A.join(a, b) == A.add(A.neg(A.add(A.neg(a), b)), b)
    assert A.meet(a, b) == A.neg(A.join(A.neg(a), A.neg(b)))
    assert A.leq(a, b) == (A.join(a, b) == b)
    assert A.join(a, a) == a


def test_scalar_examples():
    A = ProductAlgebra([3])
    assert scalar(A, 0, (2,)) == (0,)
    assert scalar(A, 2, (2,)) == (3,)
    assert scalar(A, 1, (2,)) == (2,)


@given(algebra_and_elements(), st.integers(0, 8))
def test_scalar_is_iterated_addition(case, m):
    A, (a, _, _) = case
    acc = A.zero
    for _ in range(m):
        acc = A.add(a, acc)
    assert A.scalar(m, a) == acc


@pytest.mark.parametrize("n,m,expected", [(2, 4, True), (2, 3, False), (5, 5, True), (1, 7, True), (6, 3, False)])
def test_chain_embeds(n, m, expected):
    assert chain_embeds(n, m) is expected


def test_carrier_and_trivial_algebra():
    assert ProductAlgebra([2, 3]).size == 12
    assert len(ProductAlgebra([2, 3]).elements) == 12
    T = ProductAlgebra([])
    assert T.elements == ((),)
    assert T.zero == T.one == ()
    assert T.add((), ()) == () and T.neg(()) == ()
    with pytest.raises(ValueError):
        ProductAlgebra([0, 2])


@given(algebra_and_elements())
def test_mv_axioms_on_random_triples(case):
    A, (x, y, z) = case
    one = A.neg(A.zero)
    assert A.add(A.add(x, y), z) == A.add(x, A.add(y, z))
    assert A.add(x, y) == A.add(y, x)
    assert A.add(x, A.zero) == x
    assert A.neg(A.neg(x)) == x
    assert A.add(x, one) == one
    assert A.add(A.neg(A.add(A.neg(x), y)), y) == A.add(A.neg(A.add(x, A.neg(y))), x)
    assert A.add(x, A.neg(x)) == one


def test_elements_fraction_view():
    A = ProductAlgebra([2, 3])
    assert A.format((1, 2)) == "(1/2, 2/3)"
    assert ProductAlgebra([3]).format((2,)) == "2/3"


# -- subuniverses ------------------------------------------------------------


def test_generate_subuniverse_examples():
    assert generate_subuniverse(ProductAlgebra([2])).elements == ((0,), (2,))
    S = generate_subuniverse(ProductAlgebra([4]), [(2,)])
    assert S.elements == ((0,), (2,), (4,))
    A = ProductAlgebra([3])
    assert generate_subuniverse(A, A.elements).elements == A.elements


@pytest.mark.parametrize("mods", [(1,), (2,), (4,), (6,), (1, 1), (1, 2), (2, 3), (1, 1, 1), (2, 2)])
def test_all_subuniverses_match_subset_oracle(mods):
    ours = {S.as_set() for S in all_subuniverses(ProductAlgebra(mods))}
    assert ours == set(oracles.all_subuniverses(mods))


def test_maximal_proper_subuniverses():
    assert [S.elements for S in maximal_proper_subuniverses(ProductAlgebra([2]))] == [((0,), (2,))]
    assert maximal_proper_subuniverses(ProductAlgebra([1])) == []
    # frozen from the subset oracle: L_1 x L_3 and L_2 x L_1 inside L_2 x L_3
    got = sorted(S.elements for S in maximal_proper_subuniverses(ProductAlgebra([2, 3])))
    assert got == [
        ((0, 0), (0, 1), (0, 2), (0, 3), (2, 0), (2, 1), (2, 2), (2, 3)),
        ((0, 0), (0, 3), (1, 0), (1, 3), (2, 0), (2, 3)),
    ]


def test_subuniverse_budget():
    with pytest.raises(BudgetExceeded) as exc:
        all_subuniverses(ProductAlgebra([4, 4, 4]))
    assert exc.value.size == 125


def _random_instance(rng):
    mods = [rng.randint(1, 5) for _ in range(rng.randint(1, 3))]
    A = ProductAlgebra(mods)
    pick = lambda: [rng.choice(A.elements) for _ in range(rng.randint(0, 3))]
    return A, pick(), pick()


@pytest.mark.parametrize("seed", range(20))
def test_generate_subuniverse_is_closure_operator(seed):
    rng = random.Random(seed)
    A, X, Y = _random_instance(rng)
    cX = generate_subuniverse(A, X).as_set()
    cXY = generate_subuniverse(A, X + Y).as_set()
    assert set(X) <= cX
    assert cX <= cXY
    assert generate_subuniverse(A, sorted(cX)).as_set() == cX
    assert oracles.is_closed(A.moduli, cX)


# -- L_n^omega ---------------------------------------------------------------


def test_lex_element_validity():
    assert LexElement(0, 1).valid(1)
    assert not LexElement(0, -1).valid(1)
    assert LexElement(1, -3).valid(1)
    assert not LexElement(1, 2).valid(1)
    assert LexElement(1, -5).valid(3)


def test_lex_operations():
    n = 2
    assert lex_add(n, LexElement(1, 3), LexElement(1, 0)) == LexElement(2, 0)
    assert lex_add(n, LexElement(1, -3), LexElement(1, 0)) == LexElement(2, -3)
    assert lex_neg(n, LexElement(0, 4)) == LexElement(2, -4)


def test_lex_closure_growth_examples():
    assert lex_closure_growth(1, [LexElement(0, 1)], 100) == 101
    assert lex_closure_growth(1, [(0, 0)], 100) == 2
    assert lex_closure_growth(2, [(0, 1), (1, 0)], 50) == 51
    # a finite case that only stabilises after the full pairwise pass
    assert lex_closure_growth(4, [(1, 0)], 100) == 5
    with pytest.raises(InvalidElement):
        lex_closure_growth(1, [(0, -1)], 10)


def test_lex_closure_exceeds_every_bound():
    for bound in (3, 10, 57):
        assert lex_closure_growth(1, [(0, 1)], bound) == bound + 1
