"""Rank-selector curves over an allowable sequence and their weight tracks.

A curve follows the k-th leftmost member of a fixed subset through every
permutation of the period; its weight at time t is the prefix weight strictly
left of the tracked element. Weight tracks drive both the case split and the
certificate scans.
"""
from __future__ import annotations

import numpy as np
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .errors import BadParamsError, MixedColorsError, ProofGapError
from .geometry import Color
from .sequence import AllowableSequence, permutation_at, transposition_at


@dataclass(frozen=True)
class CurveSpec:
    members: frozenset[int]
    k: int

    def __post_init__(self):
        if not self.members:
            raise BadParamsError("curve subset must be nonempty")
        if not (1 <= self.k <= len(self.members)):
            raise BadParamsError(f"rank {self.k} out of range for subset of size {len(self.members)}")


class WeightTrack:
    """Materialized curve data over one full period (times 0..2N inclusive)."""

    def __init__(self, seq: AllowableSequence, spec: CurveSpec, elem, wt, pos):
        self.seq = seq
        self.spec = spec
        self.elem = elem
        self.wt = wt
        self.pos = pos
        self.period = seq.period

    def element_at(self, t: int) -> int:
        return int(self.elem[t % self.period])

    def weight_at(self, t: int) -> int:
        return int(self.wt[t % self.period])

    def position_at(self, t: int) -> int:
        return int(self.pos[t % self.period])

    def to_csv(self) -> str:
        lines = ["time,element,weight"]
        lines += [f"{t},{int(self.elem[t])},{int(self.wt[t])}" for t in range(self.period + 1)]
        return "\n".join(lines) + "\n"


class CurveClass(Enum):
    GE_DELTA = "ge_delta"
    LT_DELTA = "lt_delta"
    LE_DELTA = "le_delta"
    GT_DELTA = "gt_delta"
    CHANGING = "changing"


def track(seq: AllowableSequence, spec: CurveSpec) -> WeightTrack:
    """Incremental track of the curve over a full period.

    Asserts strong continuity: per-step weight change in {-1, 0, +1} and
    adjacent-or-equal positions.
    """
    member = np.zeros(seq.n, bool)
    member[list(spec.members)] = True
    elem, wt, pos = _kernels.track_rank(
        seq._pi0_a, seq.full_word(), seq._weights_a, member, spec.k
    )
    if np.abs(np.diff(wt)).max(initial=0) > 1 or np.abs(np.diff(pos)).max(initial=0) > 1:
        raise ProofGapError("strong continuity violated; sequence is malformed")
    if elem[0] != elem[-1]:
        raise ProofGapError("track is not periodic; sequence is malformed")
    return WeightTrack(seq, spec, elem, wt, pos)


def mirror_track(seq: AllowableSequence, spec: CurveSpec) -> WeightTrack:
    """Track of the mirror curve: same subset at the complementary rank.

    The k-th member from the left at time t-N is the (|Q|+1-k)-th from the
    left at time t, so the mirror is itself a rank curve.
    """
    return track(seq, CurveSpec(spec.members, len(spec.members) + 1 - spec.k))


def classify(seq: AllowableSequence, spec: CurveSpec) -> CurveClass:
    """Threshold classification of a monochromatic curve over a full period."""
    colors = {seq.colors[v] for v in spec.members}
    if len(colors) != 1:
        raise MixedColorsError("curve subset mixes colors")
    color = colors.pop()
    wt = track(seq, spec).wt[: seq.period]
    delta = seq.delta
    if color is Color.BLUE:
        if (wt >= delta).all():
            return CurveClass.GE_DELTA
        if (wt < delta).all():
            return CurveClass.LT_DELTA
    else:
        if (wt <= delta).all():
            return CurveClass.LE_DELTA
        if (wt > delta).all():
            return CurveClass.GT_DELTA
    return CurveClass.CHANGING


def find_weight_changes(trk: WeightTrack, from_w: int, to_w: int, window=None) -> list[int]:
    """Times t in the window with weight from_w at t and to_w at t+1."""
    if abs(from_w - to_w) != 1:
        raise BadParamsError("weight changes are between consecutive values")
    lo, hi = window if window is not None else (0, trk.period)
    return [
        t for t in range(lo, hi)
        if trk.weight_at(t) == from_w and trk.weight_at(t + 1) == to_w
    ]


@dataclass(frozen=True)
class ChangeEvent:
    """Outcome of the weight-change dichotomy at one curve event.

    ``balanced`` means branch (i): the subset member moved toward the
    opposite-color partner's side and the swap is a balanced transposition
    with exactly k-1 subset members to its left. Otherwise branch (ii): the
    member moved the other way past a same-color non-member.
    """

    t: int
    kind: str  # "descent" or "ascent"
    member: int
    partner: int
    balanced: bool
    members_left: int
    left_weight: int

    @property
    def pair(self) -> tuple[int, int]:
        return (min(self.member, self.partner), max(self.member, self.partner))


def classify_change(seq: AllowableSequence, spec: CurveSpec, t: int, kind: str) -> ChangeEvent:
    """From-scratch dichotomy check for a weight change of a rank curve.

    ``kind`` is "descent" for the change that can certify a rightward
    member/partner swap (blue: delta to delta-1; red: delta to delta+1) and
    "ascent" for its reverse. Exactly one branch of the dichotomy must hold;
    anything else raises ProofGapError.
    """
    colors = {seq.colors[v] for v in spec.members}
    if len(colors) != 1:
        raise MixedColorsError("curve subset mixes colors")
    color = colors.pop()
    delta = seq.delta
    lo_w, hi_w = (delta, delta - 1) if color is Color.BLUE else (delta, delta + 1)
    if kind == "ascent":
        lo_w, hi_w = hi_w, lo_w

    tr = transposition_at(seq, t + 1)
    in_members = [v for v in (tr.lo_id, tr.hi_id) if v in spec.members]
    if len(in_members) != 1:
        raise ProofGapError(f"weight change at t={t} does not involve exactly one member")
    member = in_members[0]
    partner = tr.hi_id if member == tr.lo_id else tr.lo_id
    member_moves_right = member == tr.lo_id

    prev = permutation_at(seq, t)
    members_left = sum(1 for v in prev[: tr.pos] if v in spec.members)

    if kind == "descent":
        balanced = member_moves_right
    else:
        balanced = not member_moves_right
    if balanced:
        if seq.colors[partner] is color:
            raise ProofGapError(f"branch (i) partner at t={t} has the member's color")
        if tr.left_weight != delta:
            raise ProofGapError(f"branch (i) swap at t={t} is not balanced")
        if members_left != spec.k - 1:
            raise ProofGapError(
                f"branch (i) at t={t}: {members_left} members left, expected {spec.k - 1}"
            )
    else:
        if seq.colors[partner] is not color or partner in spec.members:
            raise ProofGapError(f"branch (ii) partner at t={t} is not a same-color non-member")
    return ChangeEvent(
        t=t,
        kind=kind,
        member=member,
        partner=partner,
        balanced=balanced,
        members_left=members_left,
        left_weight=tr.left_weight,
    )
