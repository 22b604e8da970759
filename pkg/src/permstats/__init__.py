"""Permutation statistics and two statistic-transporting bijections on S_n."""

from .perm import (
    CycleForm, Permutation, PermutationError, compose, first_letter,
    foata_cycle_form, identity, inverse, inversions, left_adjacent_transposition,
    make_permutation, parse_permutation, right_to_left_minima, sign,
    standardize, unstandardize,
)
from .poly import MultiPoly, binomial_expand
from .signed import (
    CaseLabel, DomainError, classify, f_map, foata_map, foata_map_inverse,
    phi_tilde, psi1, psi2,
)
from .statistics import (
    CyclicStats, LinearStats, cyclic_stats, depth, displacement, drp, linear_stats,
)
from .triple import (
    DropBiword, PhiTrace, Word, WordList, drop_biword, initial_words,
    phi_triple, phi_triple_inverse,
)
from .verify import (
    CheckReport, DistributionTable, check_theorem, enumerate_sn,
    joint_polynomial, set_valued_distribution,
)

__version__ = "0.1.0"
