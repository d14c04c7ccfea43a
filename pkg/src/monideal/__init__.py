"""Exact computations with monomial ideals: powers, Frobenius powers,
symbolic powers, integral closures, Betti numbers, regularity and
splitting homomorphisms."""

from ._kernels import BACKEND
from .arithmetic import frobenius_power, intersection, localize_contract, power, product
from .betti import (
    QQ,
    BettiData,
    BettiTable,
    Field,
    SimplicialComplex,
    betti_numbers,
    betti_table,
    lcm_lattice,
    projdim,
    reduced_homology_rank,
    regularity,
    upper_koszul,
)
from .core import (
    Monomial,
    MonomialIdeal,
    PolyRing,
    contains,
    divides,
    is_squarefree,
    lcm,
    max_gen_degree,
    minimalize,
)
from .decomposition import MonomialPrime, minimal_primes, primary_component_of_power, symbolic_power
from .newton import RationalCertificate, in_newton_polyhedron, integral_closure_of_power
from .splitting import (
    SplittingMap,
    apply,
    apply_ideal,
    commutes_with,
    regularity_via_transfer,
    transfer_betti,
)

__version__ = "0.1.0"
