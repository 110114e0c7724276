"""Allowable sequences: construction from points, validation, and sampling.

An allowable sequence is stored as one half-period: the starting permutation
plus the word of adjacent-swap positions tau_1..tau_N, N = C(n, 2). All other
times follow from the half-period reversal and 2N periodicity.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from . import _kernels
from .errors import BadParamsError, DegenerateInputError
from .geometry import Color, Instance, validate_general_position


class AllowableSequence:
    """Half-period representation of a two-colored allowable sequence.

    The constructor is permissive (it stores whatever shape it is given) so
    that ``validate`` can report on defective sequences; use ``validate`` to
    check the structural invariants.
    """

    def __init__(self, colors, pi0, word):
        self.colors: tuple[Color, ...] = tuple(colors)
        self.pi0: tuple[int, ...] = tuple(int(v) for v in pi0)
        self.word: tuple[int, ...] = tuple(int(v) for v in word)
        self.n = len(self.colors)
        self.weights: tuple[int, ...] = tuple(c.weight for c in self.colors)
        # numpy mirrors for the kernels
        self._pi0_a = np.asarray(self.pi0, np.int64)
        self._word_a = np.asarray(self.word, np.int64)
        self._weights_a = np.asarray(self.weights, np.int64)
        self._word2_a = np.concatenate(
            [self._word_a, (self.n - 2) - self._word_a]
        ) if self.n >= 2 else self._word_a.copy()

    @property
    def half_period(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def period(self) -> int:
        return 2 * self.half_period

    @property
    def b(self) -> int:
        return sum(1 for c in self.colors if c is Color.BLUE)

    @property
    def r(self) -> int:
        return self.n - self.b

    @property
    def delta(self) -> int:
        return (self.b - self.r) // 2

    def full_word(self) -> np.ndarray:
        """Word over a full period: tau_{t+N} mirrors tau_t's position."""
        return self._word2_a

    def __repr__(self):
        return f"AllowableSequence(n={self.n}, b={self.b}, r={self.r})"


@dataclass(frozen=True)
class Transposition:
    """The swap between pi^{t-1} and pi^t, with its left prefix weight."""

    t: int
    pos: int
    lo_id: int
    hi_id: int
    left_weight: int

    @property
    def pair(self) -> tuple[int, int]:
        return (min(self.lo_id, self.hi_id), max(self.lo_id, self.hi_id))


def permutation_at(seq: AllowableSequence, t: int) -> tuple[int, ...]:
    """pi^t for any integer t, via periodicity and half-period reversal."""
    n2 = seq.period
    tm = t % n2 if n2 else 0
    if tm > seq.half_period:
        return tuple(reversed(permutation_at(seq, tm - seq.half_period)))
    perm = list(seq.pi0)
    for step in range(tm):
        p = seq.word[step]
        perm[p], perm[p + 1] = perm[p + 1], perm[p]
    return tuple(perm)


def transposition_at(seq: AllowableSequence, t: int) -> Transposition:
    """Recompute tau_t from scratch (independent of the incremental kernels)."""
    n2 = seq.period
    tm = (t - 1) % n2 + 1  # in [1, 2N]
    if tm <= seq.half_period:
        pos = seq.word[tm - 1]
    else:
        pos = seq.n - 2 - seq.word[tm - seq.half_period - 1]
    prev = permutation_at(seq, tm - 1)
    left_weight = sum(seq.weights[v] for v in prev[:pos])
    return Transposition(t=t, pos=pos, lo_id=prev[pos], hi_id=prev[pos + 1], left_weight=left_weight)


@dataclass(frozen=True)
class SequenceReport:
    """Structural defects of a purported allowable sequence."""

    length_mismatch: tuple[int, int] | None  # (expected, actual)
    position_errors: tuple[tuple[int, int], ...]  # (step, position)
    repeated_pairs: tuple[tuple[int, int], ...]
    not_reversed: bool
    odd_size: bool
    red_majority: bool
    bad_pi0: bool

    @property
    def clean(self) -> bool:
        return not self.codes

    @property
    def codes(self) -> tuple[str, ...]:
        out = []
        if self.bad_pi0:
            out.append("BAD_PI0")
        if self.length_mismatch is not None:
            out.append("LENGTH_MISMATCH")
        if self.position_errors:
            out.append("POSITION_RANGE")
        if self.repeated_pairs:
            out.append("REPEATED_PAIR")
        if self.not_reversed:
            out.append("NOT_REVERSED")
        if self.odd_size:
            out.append("ODD_SIZE")
        if self.red_majority:
            out.append("RED_MAJORITY")
        return tuple(out)


def validate(seq: AllowableSequence) -> SequenceReport:
    """Check pair-swaps-once, half-period reversal, position bounds, and parity."""
    n = seq.n
    expected = n * (n - 1) // 2
    bad_pi0 = sorted(seq.pi0) != list(range(n))
    length_mismatch = None if len(seq.word) == expected else (expected, len(seq.word))
    position_errors = []
    repeated = []
    not_reversed = False
    if not bad_pi0:
        perm = list(seq.pi0)
        seen = set()
        for step, p in enumerate(seq.word, start=1):
            if not (0 <= p <= n - 2):
                position_errors.append((step, p))
                continue
            pair = (min(perm[p], perm[p + 1]), max(perm[p], perm[p + 1]))
            if pair in seen:
                repeated.append(pair)
            seen.add(pair)
            perm[p], perm[p + 1] = perm[p + 1], perm[p]
        if length_mismatch is None and not position_errors:
            not_reversed = perm != list(reversed(seq.pi0))
    return SequenceReport(
        length_mismatch=length_mismatch,
        position_errors=tuple(position_errors),
        repeated_pairs=tuple(sorted(set(repeated))),
        not_reversed=not_reversed,
        odd_size=n % 2 != 0,
        red_majority=seq.b < seq.r,
        bad_pi0=bad_pi0,
    )


def _choose_sweep_slope(coords, pairs) -> int:
    """Smallest nonnegative integer k such that u0=(1, k) is perpendicular to no spanned line."""
    forbidden = set()
    for (i, j) in pairs:
        dx = coords[j][0] - coords[i][0]
        dy = coords[j][1] - coords[i][1]
        if dy != 0:
            forbidden.add(Fraction(-dx, dy))
    k = 0
    while Fraction(k) in forbidden:
        k += 1
    return k


def build_from_points(inst: Instance) -> AllowableSequence:
    """Rotating-sweep construction of the allowable sequence of a clean instance.

    pi0 orders the points by projection onto a deterministically chosen
    direction with all projections distinct; the word lists each pair at the
    sweep angle where its spanned line becomes perpendicular to the sweep.
    """
    report = validate_general_position(inst)
    if not report.clean:
        raise DegenerateInputError(
            f"instance has {len(report.collinear_triples)} collinear triple(s), "
            f"{len(report.parallel_pair_pairs)} parallel spanned pair(s), and "
            f"{len(report.coincident_pairs)} coincident pair(s)"
        )
    coords = inst.scaled_coords()
    n = inst.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    k0 = _choose_sweep_slope(coords, pairs)

    pi0 = sorted(range(n), key=lambda i: coords[i][0] + k0 * coords[i][1])

    # Each pair swaps when the sweep direction is perpendicular to its spanned
    # line. In the frame rotating u0 to the x-axis the event direction has a
    # positive y-component, so event order is the order of angles in (0, pi).
    # Float angles are only a presort key; exact signs decide the final order.
    events = []
    for (i, j) in pairs:
        dx = coords[j][0] - coords[i][0]
        dy = coords[j][1] - coords[i][1]
        vx, vy = -dy, dx
        fb = vy - k0 * vx
        if fb < 0:
            vx, vy, fb = -vx, -vy, -fb
        fa = vx + k0 * vy
        shift = max(fa.bit_length(), fb.bit_length()) - 52
        if shift > 0:  # keep the ratio while staying in float range
            key = math.atan2(fb >> shift, fa >> shift)
        else:
            key = math.atan2(fb, fa)
        events.append((key, fa, fb, i, j))
    events.sort(key=lambda e: e[0])

    def exactly_ordered(evs) -> bool:
        return all(
            evs[t][1] * evs[t + 1][2] - evs[t][2] * evs[t + 1][1] > 0
            for t in range(len(evs) - 1)
        )

    if not exactly_ordered(events):
        # Float keys collided or mis-ordered: fall back to an exact sort.
        events.sort(key=lambda e: Fraction(-e[1], e[2]))
        if not exactly_ordered(events):
            raise DegenerateInputError("two spanned lines are parallel")

    ev_i = np.asarray([e[3] for e in events], np.int64)
    ev_j = np.asarray([e[4] for e in events], np.int64)
    word = _kernels.events_to_word(np.asarray(pi0, np.int64), ev_i, ev_j)
    if len(word) and word.min() < 0:
        raise DegenerateInputError("sweep produced a non-adjacent swap; input is degenerate")
    return AllowableSequence(colors=inst.colors(), pi0=pi0, word=word.tolist())


def random_sequence(n: int, blue_count: int, seed) -> AllowableSequence:
    """Random abstract allowable sequence (step-uniform reduced word).

    At each step one uniformly random adjacent position whose pair has not
    yet swapped is applied; this always terminates because a permutation in
    which every adjacent pair has swapped is fully reversed.
    """
    if n < 2 or n % 2 != 0:
        raise BadParamsError(f"n must be even and >= 2, got {n}")
    if not (0 <= blue_count <= n) or blue_count < n - blue_count:
        raise BadParamsError(f"need blue_count >= red_count, got {blue_count} of {n}")
    rng = random.Random(f"seq:{seed}")
    colors = [Color.BLUE] * blue_count + [Color.RED] * (n - blue_count)
    rng.shuffle(colors)
    perm = list(range(n))
    swapped = set()
    word = []
    total = n * (n - 1) // 2
    for _ in range(total):
        eligible = [
            p for p in range(n - 1)
            if (min(perm[p], perm[p + 1]), max(perm[p], perm[p + 1])) not in swapped
        ]
        p = rng.choice(eligible)
        pair = (min(perm[p], perm[p + 1]), max(perm[p], perm[p + 1]))
        swapped.add(pair)
        perm[p], perm[p + 1] = perm[p + 1], perm[p]
        word.append(p)
    return AllowableSequence(colors=colors, pi0=range(n), word=word)


def reverse_sequence(seq: AllowableSequence) -> AllowableSequence:
    """The time-reversed sequence: its permutation at t is permutation_at(seq, -t)."""
    n = seq.n
    word = [n - 2 - seq.word[len(seq.word) - 1 - t] for t in range(len(seq.word))]
    return AllowableSequence(colors=seq.colors, pi0=seq.pi0, word=word)


def sequence_to_text(seq: AllowableSequence) -> str:
    """Canonical text format: n, color string, pi0, then one word position per line."""
    lines = [
        str(seq.n),
        "".join(c.value for c in seq.colors),
        " ".join(str(v) for v in seq.pi0),
    ]
    lines.extend(str(p) for p in seq.word)
    return "\n".join(lines) + "\n"


def sequence_from_text(text: str) -> AllowableSequence:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 3:
        raise BadParamsError("sequence text needs at least n, colors, and pi0 lines")
    try:
        n = int(lines[0])
        colors = [Color(ch) for ch in lines[1].strip()]
        pi0 = [int(v) for v in lines[2].split()]
        word = [int(ln) for ln in lines[3:]]
    except ValueError as exc:
        raise BadParamsError(f"malformed sequence text: {exc}") from exc
    if len(colors) != n:
        raise BadParamsError("color line length does not match n")
    if sorted(pi0) != list(range(n)):
        raise BadParamsError("pi0 line is not a permutation of 0..n-1")
    return AllowableSequence(colors=colors, pi0=pi0, word=word)
