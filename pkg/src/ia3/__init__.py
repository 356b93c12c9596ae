"""Exact computations around the relator module of the IA-automorphism
group of a rank-3 free group: free Lie algebras in Hall bases, Magnus
expansions, Johnson homomorphisms, the relator bracket map, and GL(3, Q)
decompositions, together with a verification CLI."""

__version__ = "0.1.0"

from .words import Alphabet, Word, commutator, left_normed, magnus_alphabet, x_alphabet
from .magnus import NcSeries, expand, gamma_degree, lcs_class
from .lie import LieVector, bracket, hall_basis, tensor_to_hall, tree_to_str, witt_rank, word_class
from .autfn import Automorphism, eval_word, inner, iota_word, is_IA, magnus_gen, rho, tau
