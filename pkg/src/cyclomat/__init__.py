"""cyclomat: matroids with cyclic arrangements of circuits and cocircuits.

Exact, desk-scale toolkit: canonical basis-family matroids on up to 20
elements, the wheel/whirl/spike/swirl families with their canonical
orderings, connectivity and flower classification, cyclic-ordering
predicates and search, the truncation + Higgs-lift inflation, and a
verification harness with named suites.
"""

from .backend import BACKEND_NAME
from .connectivity import (
    Flower,
    FlowerClass,
    check_flower,
    classify_flower,
    is_exact_k_separating,
    lambda_,
    local_conn,
)
from .constructions import (
    InflationTrace,
    TheoremContradiction,
    free_coextension,
    free_extension,
    higgs_lift,
    inflate,
    truncation,
)
from .cyclic import (
    CyclicOrdering,
    ParityVerdict,
    WindowCertificate,
    WindowRecord,
    find_cyclic_ordering,
    has_cyclic_property,
    is_t_cyclic_ordering,
    petals_from_cuts,
    petals_from_sizes,
    theorem1_report,
    window,
)
from .families import (
    FamilyBundle,
    FamilySpec,
    relax,
    spike,
    swirl,
    uniform,
    validate_family,
    wheel,
    whirl,
)
from .harness import SuiteSpec, SUITE_NAMES, emit_report, run_suite
from .kernel import (
    ElementSet,
    LinearRep,
    Matroid,
    SizeCapError,
    construct,
    direct_sum,
    from_bases,
    from_circuits,
    from_graph,
    from_linear,
)
from .report import ClaimResult, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "ClaimResult",
    "CyclicOrdering",
    "ElementSet",
    "FamilyBundle",
    "FamilySpec",
    "Flower",
    "FlowerClass",
    "InflationTrace",
    "LinearRep",
    "Matroid",
    "ParityVerdict",
    "SizeCapError",
    "SuiteSpec",
    "SUITE_NAMES",
    "TheoremContradiction",
    "VerificationReport",
    "WindowCertificate",
    "WindowRecord",
    "check_flower",
    "classify_flower",
    "construct",
    "direct_sum",
    "emit_report",
    "find_cyclic_ordering",
    "free_coextension",
    "free_extension",
    "from_bases",
    "from_circuits",
    "from_graph",
    "from_linear",
    "has_cyclic_property",
    "higgs_lift",
    "inflate",
    "is_exact_k_separating",
    "is_t_cyclic_ordering",
    "lambda_",
    "local_conn",
    "petals_from_cuts",
    "petals_from_sizes",
    "relax",
    "run_suite",
    "spike",
    "swirl",
    "theorem1_report",
    "truncation",
    "uniform",
    "validate_family",
    "wheel",
    "whirl",
    "window",
]
