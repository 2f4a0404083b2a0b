"""Left-regular band families and the ten graded Hopf algebras built on them."""
from .axioms import AxiomReport, run_axiom_suite
from .hopf import ALGEBRA_TAGS, MAP_NAMES, HopfDiagram
from .linalg import LinComb, check_bialgebra_laws, check_morphism
from .lrb import Family, FamilyDataError, FamilyError, GradeError, is_lrb
from .setcomp import SetCompFamily, SetComposition
from .table import DescriptorError, TableFamily, export_family, load_descriptor

__all__ = [
    "ALGEBRA_TAGS", "AxiomReport", "DescriptorError", "Family", "FamilyDataError", "FamilyError",
    "GradeError", "HopfDiagram", "LinComb", "MAP_NAMES", "SetCompFamily", "SetComposition", "TableFamily",
    "check_bialgebra_laws", "check_morphism", "export_family", "is_lrb", "load_descriptor",
    "run_axiom_suite",
]
