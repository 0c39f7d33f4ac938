"""Low-degree mod-p cohomology, graph reconstruction and finite-quotient
invariants for right-angled Artin and Coxeter groups."""

from raagcoh.errors import (
    RaagcohError,
    GraphFormatError,
    DimensionError,
    MalformedAlgebraError,
    EnumerationCapError,
    VerificationError,
    SingularMatrixError,
)
from raagcoh.graphs import Graph, IsoWitness, parse_graph, degree, components, are_isomorphic
from raagcoh.linalg import Matrix, Subspace, is_prime
from raagcoh.cohomology import (
    CupAlgebra,
    BasisChange,
    raag_algebra,
    racg_algebra,
    cup,
    cup_rank,
    apply_basis_change,
    random_scramble,
    sigma_subspace,
    reduce_racg,
)
from raagcoh.reconstruction import (
    ReconstructionResult,
    projective_classes,
    reconstruct,
    algebras_isomorphic,
)
from raagcoh.groups import FiniteGroup, cyclic, direct_product, dihedral, quaternion8, heisenberg, catalog
from raagcoh.quotients import (
    Commutator,
    Power,
    CentralGen,
    Presentation,
    SeparationCertificate,
    raag_presentation,
    racg_presentation,
    remark_extension_presentation,
    count_homs,
    distinguish,
)

__version__ = "0.1.0"
