"""Ordinary and symbolic powers of edge ideals of graphs."""

from .errors import (ConsistencyError, InvalidArgument, OutOfScope, ParseError,
                     ResourceLimit, SptError)
from .factorization import (Factorization, cycle_factorization, find_evens_pattern,
                            has_evens_pattern, max_edge_count, optimal_factorization,
                            rewrite_odd_path)
from .graphs import (CoverMatrix, Graph, complete, cover_matrix, cycle, cycle_with_pendant,
                     from_edge_list, minimal_vertex_covers)
from .ideals import EdgeIdeal, GeneratorSet
from .invariants import (containment_check, in_T, multichoose, resurgence_closed,
                         sdefect_bruteforce, sdefect_closed, witness_pair, witness_sequence)
from .monomials import degree, divides, vertex_weight
from .optimization import (LinearProgram, alpha_bruteforce, alpha_program, alpha_subprogram,
                           alpha_symbolic_closed, lp_solve, witness_monomial)

__version__ = "0.1.0"
