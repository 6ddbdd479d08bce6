"""Ultrafilter calculus made computable on eventually periodic sets.

The package pairs an exact algebra of eventually periodic subsets of the
naturals with residue-system stand-ins for points at infinity, so that
generated ultrafilters, hyper-shifts, pseudo-sums, tensor products and
idempotency become decidable, and complements them with finite-window
density exploration and brute-force Ramsey-style combinatorics.
"""

from .errors import DomainError
from .pairs import (DELTA_PLUS, DiffBand, PairPoint, Rect, SumBand,
                    canonical_tensor_point, diagonal_member, diagonal_section,
                    fiber_membership_set, image_pair, pair_member, tensor_member)
from .profinite import (ProfinitePoint, add, add_integer, hyper_shift,
                        image_member, is_idempotent, member_set,
                        pseudo_sum_member, star_member, sub, ultrafilter_shift)
from .ramsey import (Coloring, FunctionalGraph, LinearEquation,
                     exhaustive_pr_check, find_fs_set, find_mono_solution, fs,
                     gamma_fip_witness, rado_single_pr, star_obstruction_check,
                     three_color, triadic_split, verify_coloring)
from .semilinear import (AffineMap, EMPTY, FULL, SemilinearSet, asymptotic,
                         banach, best_rotation, complement, finite, intersect,
                         interval, member, preimage_affine, residues,
                         schnirelmann, shift_left, shift_right, union)
from .setexpr import (format_expr, format_point, format_set, parse_expr,
                      parse_pair_set, parse_point, parse_predicate, parse_set)
from .windows import (PredicateSet, WindowSet, exact_embed_decide,
                      exact_embed_window, finite_hyper_shift, good_start,
                      noncomm_demo, squares_blocks, triadic_unit,
                      triadic_val_ge, window_banach, window_of)

__version__ = "0.1.0"
