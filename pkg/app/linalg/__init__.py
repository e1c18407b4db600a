from .abelian import FinAbGroup, direct_sum
from .homology import cokernel, homology_from_matrices, segment_homology
from .lattice import EchelonLattice, hermite_normal_form, kernel_basis, solve_in_lattice
from .smith import smith_normal_form

__all__ = [
    "EchelonLattice",
    "FinAbGroup",
    "cokernel",
    "direct_sum",
    "hermite_normal_form",
    "homology_from_matrices",
    "kernel_basis",
    "segment_homology",
    "smith_normal_form",
    "solve_in_lattice",
]
