"""Finite counting systems and the commutative monoids they determine."""

from .analysis import AnalysisReport, analyze
from .biadd import (
    BiadditiveTable,
    HomTable,
    OdotTable,
    biadditive_extend,
    derive_multiplication_indexed,
    derive_multiplication_single,
    direct_sum_check,
    direct_sum_report,
    hom_extend,
    is_free_report,
    projections,
)
from .closure import (
    EvaluationMap,
    TransformationMonoid,
    evaluation,
    is_invariant,
    monoid_closure,
)
from .core import (
    Carrier,
    CountingSystem,
    EndoMap,
    adjoin_omega,
    is_dedekind,
    is_minimal,
    minimal_core,
    new_system,
    pad_single,
    product,
)
from .derive import (
    Classification,
    MonoidTable,
    cayley_embedding,
    classify,
    derive_addition,
    product_table,
    verify_plus_axioms,
)
from .dsl import SystemDocument, emit_system, parse_odot, parse_system
from .morphisms import (
    FreeElement,
    SystemMorphism,
    bridge_check,
    free_add,
    free_eval,
    free_uniqueness_probe,
    initiality_report,
    is_isomorphism,
    is_morphism,
    morphism_find,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
