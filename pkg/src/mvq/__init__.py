"""Critical algebras, quasivariety inclusion and quasiequation checking for finite MV-algebras."""

from .algebra import (
    InvalidElement,
    LexElement,
    ProductAlgebra,
    Subuniverse,
    chain_embeds,
    derived_op,
    generate_subuniverse,
    lex_closure_growth,
    maximal_proper_subuniverses,
    mv_add,
    mv_neg,
    scalar,
)
from .config import BudgetExceeded, Budgets
from .criticality import (
    check_critical_signature,
    critical_oracle,
    enumerate_criticals,
    is_critical,
    signature,
)
from .morphisms import Homomorphism, canonical_decomposition, enumerate_homomorphisms
from .quasiequations import (
    excludes_chain_qe,
    k_colon_ln,
    satisfies,
    verify_axiomatization,
)
from .quasivariety import (
    QuasivarietySpec,
    QvLattice,
    canonicalize,
    enumerate_subquasivarieties,
    isp_leq,
    qv_equal,
    qv_leq,
    variety_membership,
)
from .terms import (
    Quasiequation,
    VarietyAtom,
    eval_term,
    format_quasiequation,
    format_term,
    parse_quasiequation,
    parse_term,
)
