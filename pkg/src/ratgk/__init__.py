"""ratgk: rationality, cut and Gruenberg-Kegel graph computations for
small finite groups, with a registry of machine-checked facts about the
explicit matrix actions over GF(5) behind the classification of the graphs
of finite solvable rational groups.
"""

from ._core import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .elements import FpMat, Perm
from .errors import (CapExceeded, GroupSpecError, InvalidAction,
                     InvalidGenerators, NotASubgroup, NotNormal, RatgkError)
from .groups import (DEFAULT_ORDER_CAP, DirectProductGroup, FiniteGroup,
                     MatrixGroup, PermGroup, SemidirectProductGroup, Subgroup,
                     TableGroup, direct_product, generate_group, named_group,
                     semidirect_product, twisted_power_factor)
from .linalg import (ModuleAction, brauer_character_is_rational, charpoly,
                     eigenvector_property, induce_module, is_simple_module)
from .rationality import (MAIN_THEOREM_GRAPHS, Classification, PrimeGraph,
                          RationalityReport, check_corollary,
                          classify_rational_solvable, gk_graph, is_cut,
                          is_rational, rationality_normalizer_criterion,
                          rationality_report, search_witness)
from .facts import (CaseAction, Fact, FactReport, build_heg_case, full_suite,
                    verify_case_b_facts, verify_case_de_facts,
                    verify_prop_premises, verify_sl23_facts, witness_suite)
from .groupspec import GroupSpec, load_group_spec, parse_group_spec

__version__ = "0.1.0"

__all__ = [
    "KERNEL_IMPLEMENTATION", "FpMat", "Perm",
    "CapExceeded", "GroupSpecError", "InvalidAction", "InvalidGenerators",
    "NotASubgroup", "NotNormal", "RatgkError",
    "DEFAULT_ORDER_CAP", "DirectProductGroup", "FiniteGroup", "MatrixGroup",
    "PermGroup", "SemidirectProductGroup", "Subgroup", "TableGroup",
    "direct_product", "generate_group", "named_group", "semidirect_product",
    "twisted_power_factor",
    "ModuleAction", "brauer_character_is_rational", "charpoly",
    "eigenvector_property", "induce_module", "is_simple_module",
    "MAIN_THEOREM_GRAPHS", "Classification", "PrimeGraph",
    "RationalityReport", "check_corollary", "classify_rational_solvable",
    "gk_graph", "is_cut", "is_rational", "rationality_normalizer_criterion",
    "rationality_report", "search_witness",
    "CaseAction", "Fact", "FactReport", "build_heg_case", "full_suite",
    "verify_case_b_facts", "verify_case_de_facts", "verify_prop_premises",
    "verify_sl23_facts", "witness_suite",
    "GroupSpec", "load_group_spec", "parse_group_spec",
]
