"""Finite quotients, almost conjugate subgroups and Sunada pairs."""
from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    all_subgroups,
    are_conjugate_subgroups,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    generated_subgroup,
    group_from_permutations,
    is_almost_conjugate,
    semidirect_zn,
)
from .pipeline import SunadaError, SunadaReport, subgroup_presentation, sunada_pipeline
from .rewriting import (
    RewriteError,
    eliminate_generator,
    random_tietze_moves,
    reidemeister_schreier,
    schreier_generators,
    schreier_transversal,
    tietze_simplify,
)
from .search import (
    BudgetExceeded,
    CosetTable,
    Homomorphism,
    count_epimorphisms_bruteforce,
    find_epimorphisms,
    preimage_coset_table,
)
