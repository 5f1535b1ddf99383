"""silt: a workbench for silting mutation over Dynkin-type path algebras.

The bounded derived category of a hereditary path algebra is modelled by its
indecomposable stalk summands (id, shift).  The package enumerates silting
objects inside a degree window, mutates them along exchange triangles, walks
complement chains, and verifies the structural facts the whole construction
rests on (hom bookkeeping, exchange graph shape, endomorphism algebra
properties, and the degree-window tilting model).
"""

from .derived import Complex, ChainMap, DerivedCategory, StalkSum, degree
from .endo import EndoAlgebra, FdModule, g_module, g_morphism
from .indecs import IndecTable
from .quiver import Quiver, parse_quiver
from .report import Report, ReportEntry
from .reps import Rep
from .silting import (
    ComplementChain,
    MutationTriangle,
    complement_chain,
    enumerate_silting,
    is_silting_in_window,
    mutate,
    mutation_edges,
    silting_quiver,
)

__version__ = "0.1.0"

__all__ = [
    "ChainMap",
    "Complex",
    "ComplementChain",
    "DerivedCategory",
    "EndoAlgebra",
    "FdModule",
    "IndecTable",
    "MutationTriangle",
    "Quiver",
    "Rep",
    "Report",
    "ReportEntry",
    "StalkSum",
    "complement_chain",
    "degree",
    "enumerate_silting",
    "g_module",
    "g_morphism",
    "is_silting_in_window",
    "mutate",
    "mutation_edges",
    "parse_quiver",
    "silting_quiver",
    "__version__",
]
