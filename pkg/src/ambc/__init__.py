"""Affine matrix-ball construction for extended affine permutations."""

from ._kernels import BACKEND
from .asymptotic import insert_prefix, stabilized_p
from .backward import backward_numbering, backward_step, psi, stream_numbering
from .channels import (
    Channel,
    all_channels,
    channel_numbering,
    distance,
    northeast_channel,
    rivers,
    southwest_channel,
)
from .errors import *  # noqa: F401,F403
from .finite import ZigZag, mbc, mbc_inverse, rs_insert
from .forward import OmegaTriple, forward_step, phi, phi_with_numbering_policy, standardizable
from .numbering import Numbering, is_continuous, is_monotone, is_proper
from .perm import Cell, PartialAffinePermutation, center_of_gravity, inverse, knuth_move, parse_window
from .poset import ShiPoset, greene_kleitman, longest_antichains, shi_poset, width
from .shi import comb, shi_p
from .streams import Stream, concurrent_altitude, defining_data, is_compatible, offset_constants
from .weyl import dominant_representative, fiber_equivalent, is_dominant

__version__ = "0.1.0"
