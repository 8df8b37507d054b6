"""Maximum bipartite matching with pair-dependent degree bounds (PD-matching).

Jobs are matched to machines; job ``j`` placed on machine ``i`` tolerates at
most ``b[j, i]`` jobs on that machine, itself included.
"""

from .classes import ClassReport, TypeProfile, classify, is_monotone, monotone_order
from .dispatch import ALGORITHM_NAMES, SolveReport, dispatch, solve
from .errors import (BudgetExceededError, ClassMismatchError, InstanceFormatError,
                     InvalidMatchingError, PDMatchError)
from .exact import (normalize_shared_machines, solve_const_m, solve_mono_general_greedy,
                    solve_mono_three_tol, solve_one_two, solve_t_types, solve_two_types,
                    solve_udep_complete, solve_udep_mono, solve_udep_mono_compact,
                    solve_uniform_tolerance, solve_vdep, solve_zero_k)
from .greedy import GreedyConfig, greedy_global, greedy_strongly_maximal
from .instance import (Instance, Matching, ValidityReport, Violation, dump_instance,
                       dump_matching, is_maximal, is_strongly_maximal, parse_instance,
                       parse_matching, verify)
from .oracle import oracle_enumerate_assignments, oracle_threshold_vectors
from .primitives import (CapacitatedBipartiteGraph, GeneralGraph, max_b_matching,
                         max_general_matching)

__version__ = "0.1.0"
