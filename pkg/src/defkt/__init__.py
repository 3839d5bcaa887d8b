"""defkt: exact invariants of free products of finitely generated groups.

Library layout mirrors the pipeline: parse expressions
(:mod:`defkt.presentation_dsl`), realize finite groups
(:mod:`defkt.finite_groups`), complete component monoids
(:mod:`defkt.commutative_monoid`, :mod:`defkt.rep_monoid`), evaluate the
free-product excision rule (:mod:`defkt.kdef_calculus`) and emit
representation-variety polynomial systems (:mod:`defkt.variety_emitter`).
"""

from .commutative_monoid import (
    BoundExhausted,
    FgAbelianGroup,
    FgCommMonoid,
    MonoidElement,
    TelescopeClass,
    add,
    equal_in_monoid,
    grothendieck_group,
    is_stably_group_like,
    parse_monoid,
    render_monoid,
    smith_normal_form,
    stable_inverse,
    telescope_equiv,
    telescope_pi0_group,
)
from .finite_groups import (
    FiniteGroup,
    GroupTableError,
    IrrepData,
    OrderCapError,
    build_group,
    conjugacy_classes,
    irrep_data,
    load_cayley_table,
)
from .kdef_calculus import (
    GradedRanks,
    KuWedge,
    UnsupportedLeafError,
    homotopy_groups,
    kdef,
    kdef_base,
    mv_free_product,
    wedge,
)
from .presentation_dsl import (
    Cyclic,
    Dihedral,
    FinitePresentation,
    FreeProduct,
    GroupExpr,
    IntegerGroup,
    ParseError,
    Quaternion8,
    Symmetric,
    TableRef,
    Trivial,
    parse_group_expr,
    parse_presentation,
    render_group_expr,
    render_presentation,
)
from .rep_monoid import (
    ComponentCount,
    FreeProductPi0,
    Pi0RepMonoid,
    count_components,
    free_product_components,
    free_product_k0,
    free_product_pi0,
    k0,
    pi0_rep_monoid,
)
from .variety_emitter import (
    EmitOptions,
    PolynomialSystem,
    TermBudgetError,
    evaluate_system,
    gl_variety,
    system_to_dict,
    system_to_text,
    unitary_variety,
)

__version__ = "0.1.0"
