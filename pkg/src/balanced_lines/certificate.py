"""Certificate generation: a verified witness set of balanced transpositions.

The generator mechanizes the lower-bound proof. Case 1 (every mid-rank blue
curve crosses the delta threshold) reads two witnesses per rank straight off
the weight tracks. Case 2 builds a border curve, partitions the border-color
points into F/G/H, and scans one half-period with a charge ledger that
converts non-witness events into guaranteed witness events of other curves.
Every obligation the counting relies on is checked at runtime; failures
surface as InsufficientBorderError (retry with a better border) or
ProofGapError (never expected on valid input).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .balance import BalancedWitness, WitnessSource
from .curves import CurveClass, CurveSpec, classify, track
from .errors import BadParamsError, InsufficientBorderError, ProofGapError
from .geometry import Color
from .sequence import AllowableSequence, transposition_at


class Case(Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"


@dataclass(frozen=True)
class CaseInfo:
    case: Case
    preserving_rank: int | None  # least delta-preserving mid-rank, Case 2 only


def _blue_ids(seq: AllowableSequence) -> frozenset[int]:
    return frozenset(i for i in range(seq.n) if seq.colors[i] is Color.BLUE)


def _mid_rank_range(seq: AllowableSequence) -> range:
    return range(seq.delta + 1, seq.b // 2 + 1)


def classify_case(seq: AllowableSequence) -> CaseInfo:
    """Case 1 iff every blue mid-rank curve is delta-changing (vacuously if none)."""
    if seq.r == 0:
        return CaseInfo(Case.CASE1, None)
    blues = _blue_ids(seq)
    for k in _mid_rank_range(seq):
        if classify(seq, CurveSpec(blues, k)) is not CurveClass.CHANGING:
            return CaseInfo(Case.CASE2, k)
    return CaseInfo(Case.CASE1, None)


# ---------------------------------------------------------------------------
# Borders


@dataclass(frozen=True)
class Border:
    """A threshold-respecting weakly continuous curve lying left of its mirror."""

    color: Color
    elements: tuple[int, ...]  # element per time over [0, 2N)

    def element_at(self, t: int) -> int:
        return self.elements[t % len(self.elements)]

    def mirror_at(self, t: int) -> int:
        half = len(self.elements) // 2
        return self.elements[(t - half) % len(self.elements)]


def _walk_positions(seq: AllowableSequence, elems_per_time) -> tuple[np.ndarray, np.ndarray]:
    """Positions and prefix weights of one prescribed element per time, over [0, 2N]."""
    period = seq.period
    ext = np.asarray(
        [elems_per_time[t % period] for t in range(period + 1)], np.int64
    )
    return _kernels.element_walk(seq._pi0_a, seq.full_word(), seq._weights_a, ext)


def check_border(seq: AllowableSequence, border: Border) -> list[str]:
    """Independent border validity check; empty list means valid.

    Walks the permutations directly in Python rather than reusing the track
    kernels, so border acceptance never depends on the fast path.
    """
    period, n = seq.period, seq.n
    problems: list[str] = []
    if len(border.elements) != period:
        return [f"BAD_LENGTH expected {period} got {len(border.elements)}"]
    if any(seq.colors[e] is not border.color for e in border.elements):
        return ["WRONG_COLOR"]
    delta = seq.delta
    word2 = seq.full_word()
    perm = list(seq.pi0)
    pos = [0] * n
    for q, v in enumerate(perm):
        pos[v] = q
    pre = [0] * (n + 1)
    for q in range(n):
        pre[q + 1] = pre[q] + seq.weights[perm[q]]
    for t in range(period):
        e = border.elements[t]
        p = pos[e]
        w = pre[p]
        if border.color is Color.BLUE:
            if w < delta:
                problems.append(f"WEIGHT t={t}")
        elif w > delta:
            problems.append(f"WEIGHT t={t}")
        if not p < pos[border.mirror_at(t)]:
            problems.append(f"MIRROR_ORDER t={t}")
        # advance to pi^{t+1}
        sp = int(word2[t])
        a, bb = perm[sp], perm[sp + 1]
        perm[sp], perm[sp + 1] = bb, a
        pos[bb], pos[a] = sp, sp + 1
        pre[sp + 1] = pre[sp] + seq.weights[bb]
        e_next = border.elements[(t + 1) % period]
        if e_next != e:
            q1, q2 = pos[e], pos[e_next]
            lo_q, hi_q = min(q1, q2), max(q1, q2)
            for q in range(lo_q + 1, hi_q):
                if seq.colors[perm[q]] is border.color:
                    problems.append(f"WEAK_CONTINUITY t={t}")
                    break
    return problems


def _nearest_left_curve(seq: AllowableSequence, positions, want: Color) -> tuple[int, ...]:
    """Per time, the nearest want-colored element strictly left of the given position."""
    period, n = seq.period, seq.n
    word2 = seq.full_word()
    perm = list(seq.pi0)
    out = []
    for t in range(period):
        q = int(positions[t]) - 1
        while q >= 0 and seq.colors[perm[q]] is not want:
            q -= 1
        if q < 0:
            raise ProofGapError(f"no {want.value} element left of position {positions[t]} at t={t}")
        out.append(perm[q])
        sp = int(word2[t])
        perm[sp], perm[sp + 1] = perm[sp + 1], perm[sp]
    return tuple(out)


def initial_border(seq: AllowableSequence, k: int) -> Border:
    """Border seeded from the delta-preserving blue rank-k curve.

    A threshold-respecting blue curve is its own border; otherwise the
    nearest-red-left curve of the blue curve is one.
    """
    if k not in _mid_rank_range(seq):
        raise BadParamsError(f"rank {k} outside the mid-rank range")
    blues = _blue_ids(seq)
    spec = CurveSpec(blues, k)
    cls = classify(seq, spec)
    trk = track(seq, spec)
    if cls is CurveClass.GE_DELTA:
        border = Border(Color.BLUE, tuple(int(v) for v in trk.elem[: seq.period]))
    elif cls is CurveClass.LT_DELTA:
        border = Border(Color.RED, _nearest_left_curve(seq, trk.pos, Color.RED))
    else:
        raise BadParamsError(f"blue rank {k} is delta-changing; no border seed")
    problems = check_border(seq, border)
    if problems:
        raise ProofGapError(f"seed border invalid: {problems[:3]}")
    return border


def partition_fgh(seq: AllowableSequence, border: Border):
    """Split the border-color points by position at time 0.

    F: at or left of the border element (inclusive); G: strictly between the
    border element and its mirror; H: at or right of the mirror element. Each
    part is ordered by position at time 0, so index j holds the rank-j curve's
    starting element.
    """
    c = border.color
    rank0 = {v: q for q, v in enumerate(seq.pi0)}
    gq = rank0[border.element_at(0)]
    mq = rank0[border.mirror_at(0)]
    if not gq < mq:
        raise ProofGapError("border is not left of its mirror at time 0")
    members = sorted((i for i in range(seq.n) if seq.colors[i] is c), key=rank0.get)
    f = tuple(v for v in members if rank0[v] <= gq)
    g = tuple(v for v in members if gq < rank0[v] < mq)
    h = tuple(v for v in members if rank0[v] >= mq)
    return f, g, h


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class ChargeLedger:
    ch_f: tuple[int, ...]
    ch_h: tuple[int, ...]
    transactions: tuple[tuple[int, str, str], ...]  # (time, source curve, charged curve)

    @property
    def total_charges(self) -> int:
        return sum(self.ch_f) + sum(self.ch_h)


@dataclass(frozen=True)
class CurveEvent:
    curve: str
    t: int  # transposition index
    kind: str  # "descent" | "ascent"
    confined: bool | None
    outcome: str  # "witness" | "charge" | "unconfined"
    pair: tuple[int, int]
    charged: str | None = None


@dataclass(frozen=True)
class Certificate:
    case: str
    target: int
    witnesses: tuple[BalancedWitness, ...]
    witness_origins: tuple[tuple[tuple[int, int], str], ...]
    border: Border | None = None
    f_set: tuple[int, ...] | None = None
    g_set: tuple[int, ...] | None = None
    h_set: tuple[int, ...] | None = None
    ledger: ChargeLedger | None = None
    events: tuple[CurveEvent, ...] = ()


class _WitnessPool:
    """Collects witnesses keyed by pair, rejecting duplicates."""

    def __init__(self, seq: AllowableSequence):
        self.seq = seq
        self.by_pair: dict[tuple[int, int], BalancedWitness] = {}
        self.origins: list[tuple[tuple[int, int], str]] = []

    def add(self, a: int, b: int, t: int, origin: str):
        pair = (min(a, b), max(a, b))
        if pair in self.by_pair:
            raise ProofGapError(f"witness pair {pair} found twice (t={t} and earlier)")
        blue, red = (a, b) if self.seq.colors[a] is Color.BLUE else (b, a)
        self.by_pair[pair] = BalancedWitness(blue, red, WitnessSource.SCAN, t, self.seq.delta)
        self.origins.append((pair, origin))

    def sorted_witnesses(self) -> tuple[BalancedWitness, ...]:
        return tuple(self.by_pair[p] for p in sorted(self.by_pair))


def case1_certificate(seq: AllowableSequence) -> Certificate:
    """Two witnesses per mid-rank blue curve plus the odd-b middle witness.

    With the full blue set there is no branch (ii), so every threshold change
    of a mid-rank curve is a balanced transposition; the two per-rank events
    are distinct pairs because a coincidence would force b = 2k-1.
    """
    delta, b = seq.delta, seq.b
    blues = _blue_ids(seq)
    lo, hi, lw, _ = _kernels.run_word(seq._pi0_a, seq.full_word(), seq._weights_a)
    pool = _WitnessPool(seq)
    events = []

    def harvest(k: int, kinds) -> None:
        trk = track(seq, CurveSpec(blues, k))
        picked = []
        for kind, from_w, to_w in kinds:
            ts = [
                t for t in range(seq.period)
                if trk.wt[t] == from_w and trk.weight_at(t + 1) == to_w
            ]
            if not ts:
                raise ProofGapError(f"B_{k} has no {kind} despite being delta-changing")
            t = ts[0]
            a, bb, w = int(lo[t]), int(hi[t]), int(lw[t])
            member = int(trk.elem[t])
            moved_right = member == a
            expect_right = kind == "descent"
            if moved_right is not expect_right:
                raise ProofGapError(f"B_{k} {kind} at t={t} has the member on the wrong side")
            partner = bb if moved_right else a
            if seq.colors[partner] is Color.BLUE or w != delta:
                raise ProofGapError(f"B_{k} {kind} at t={t} is not a balanced transposition")
            pool.add(member, partner, t + 1, f"B{k}")
            picked.append((min(member, partner), max(member, partner)))
            events.append(CurveEvent(f"B{k}", t + 1, kind, None, "witness", picked[-1]))
        if len(picked) == 2 and picked[0] == picked[1]:
            raise ProofGapError(f"B_{k} events collapsed to one pair; forces b = 2k-1")

    for k in _mid_rank_range(seq):
        harvest(k, [("descent", delta, delta - 1), ("ascent", delta - 1, delta)])
    if b % 2 == 1:
        k0 = (b + 1) // 2
        trk = track(seq, CurveSpec(blues, k0))
        found = None
        for t in range(seq.period):
            w0, w1 = int(trk.wt[t]), trk.weight_at(t + 1)
            if (w0, w1) in ((delta, delta - 1), (delta - 1, delta)):
                found = (t, "descent" if w0 == delta else "ascent")
                break
        if found is None:
            raise ProofGapError(f"middle curve B_{k0} never crosses the threshold")
        t, kind = found
        a, bb, w = int(lo[t]), int(hi[t]), int(lw[t])
        member = int(trk.elem[t])
        partner = bb if member == a else a
        if seq.colors[partner] is Color.BLUE or w != delta:
            raise ProofGapError(f"middle event at t={t} is not balanced")
        pool.add(member, partner, t + 1, f"B{k0}")
        events.append(CurveEvent(f"B{k0}", t + 1, kind, None, "witness", pool.origins[-1][0]))

    witnesses = pool.sorted_witnesses()
    if len(witnesses) < seq.r:
        raise ProofGapError(f"case-1 counting got {len(witnesses)} < r = {seq.r}")
    return Certificate(
        case=Case.CASE1.value,
        target=seq.r,
        witnesses=witnesses,
        witness_origins=tuple(pool.origins),
        events=tuple(events),
    )


def case2_certificate(seq: AllowableSequence, border: Border) -> Certificate:
    """Half-period F/G/H scan with the charge ledger, for a fixed border.

    Raises InsufficientBorderError when a border-dependent obligation fails;
    structural violations raise ProofGapError.
    """
    c = border.color
    delta = seq.delta
    s = c.weight  # descent: delta -> delta - s
    n_half = seq.half_period
    f_ids, g_ids, h_ids = partition_fgh(seq, border)
    members = frozenset(f_ids) | frozenset(g_ids) | frozenset(h_ids)
    target = len(members)

    lo, hi, lw, _ = _kernels.run_word(seq._pi0_a, seq.full_word(), seq._weights_a)
    bpos, _ = _walk_positions(seq, border.elements)
    mirror_elems = [border.mirror_at(t) for t in range(seq.period)]
    mpos, _ = _walk_positions(seq, mirror_elems)

    def tracks_for(ids):
        sub = frozenset(ids)
        return [track(seq, CurveSpec(sub, k)) for k in range(1, len(ids) + 1)] if ids else []

    f_tracks, g_tracks, h_tracks = tracks_for(f_ids), tracks_for(g_ids), tracks_for(h_ids)

    def window_changes(trk, from_w, to_w):
        return [t for t in range(n_half) if trk.wt[t] == from_w and trk.wt[t + 1] == to_w]

    def swap_parts(t, member_set, expected):
        a, bb = int(lo[t]), int(hi[t])
        in_set = [v for v in (a, bb) if v in member_set]
        if len(in_set) != 1:
            raise ProofGapError(f"change at t={t} does not involve exactly one member")
        member = in_set[0]
        if member != expected:
            raise ProofGapError(f"change at t={t} bypassed the tracked element")
        partner = bb if member == a else a
        return member, partner, member == a, int(lw[t])

    def rank_in(tracks, element, t):
        for idx, trk in enumerate(tracks):
            if int(trk.elem[t]) == element:
                return idx + 1
        raise ProofGapError(f"element {element} has no rank at t={t}")

    pool = _WitnessPool(seq)
    events: list[CurveEvent] = []
    ch_f = [0] * len(f_ids)
    ch_h = [0] * len(h_ids)
    transactions: list[tuple[int, str, str]] = []
    g_confined = [0] * (len(g_ids) + 1)

    g_set = frozenset(g_ids)
    for rank, trk in enumerate(g_tracks, start=1):
        for kind, from_w, to_w in (
            ("descent", delta, delta - s),
            ("ascent", delta - s, delta),
        ):
            for t in window_changes(trk, from_w, to_w):
                confined = (
                    trk.pos[t] >= bpos[t]
                    and trk.pos[t + 1] > bpos[t + 1]
                    and trk.pos[t] <= mpos[t]
                    and trk.pos[t + 1] < mpos[t + 1]
                )
                member, partner, moved_right, w = swap_parts(t, g_set, int(trk.elem[t]))
                pair = (min(member, partner), max(member, partner))
                name = f"G{rank}"
                if not confined:
                    events.append(CurveEvent(name, t + 1, kind, False, "unconfined", pair))
                    continue
                g_confined[rank] += 1
                balanced = moved_right if kind == "descent" else not moved_right
                if balanced:
                    if seq.colors[partner] is c or w != delta:
                        raise ProofGapError(f"G event at t={t} misclassified as balanced")
                    pool.add(member, partner, t + 1, name)
                    events.append(CurveEvent(name, t + 1, kind, True, "witness", pair))
                elif kind == "descent":
                    if partner not in f_ids:
                        raise ProofGapError(f"deflected G descent at t={t} missed F")
                    j = rank_in(f_tracks, partner, t)
                    fj = f_tracks[j - 1]
                    if not (fj.wt[t] == delta - s and fj.wt[t + 1] == delta):
                        raise ProofGapError(f"charge target F{j} shows no matching change at t={t}")
                    ch_f[j - 1] += 1
                    transactions.append((t + 1, name, f"F{j}"))
                    events.append(CurveEvent(name, t + 1, kind, True, "charge", pair, f"F{j}"))
                else:
                    if partner not in h_ids:
                        raise ProofGapError(f"deflected G ascent at t={t} missed H")
                    i = rank_in(h_tracks, partner, t)
                    hrk = h_tracks[i - 1]
                    if not (hrk.wt[t] == delta and hrk.wt[t + 1] == delta - s):
                        raise ProofGapError(f"charge target H{i} shows no matching change at t={t}")
                    ch_h[i - 1] += 1
                    transactions.append((t + 1, name, f"H{i}"))
                    events.append(CurveEvent(name, t + 1, kind, True, "charge", pair, f"H{i}"))

    # Confined-change quotas on the G ranks (mirror-rank pairs share one quota).
    for k in range(1, len(g_ids) // 2 + 1):
        if g_confined[k] + g_confined[len(g_ids) + 1 - k] < 2:
            raise InsufficientBorderError(
                f"G rank pair ({k}, {len(g_ids) + 1 - k}) has "
                f"{g_confined[k] + g_confined[len(g_ids) + 1 - k]} confined changes",
                hint=("G", k),
            )
    if len(g_ids) % 2 == 1:
        mid = (len(g_ids) + 1) // 2
        if g_confined[mid] < 1:
            raise InsufficientBorderError(
                f"middle G rank {mid} has no confined change", hint=("G", mid)
            )

    f_set = frozenset(f_ids)
    for j, trk in enumerate(f_tracks, start=1):
        descents = window_changes(trk, delta, delta - s)
        if len(descents) < ch_f[j - 1] + 1:
            raise InsufficientBorderError(
                f"F{j} has {len(descents)} descents for charge {ch_f[j - 1]}",
                hint=("F", j),
            )
        for t in descents:
            member, partner, moved_right, w = swap_parts(t, f_set, int(trk.elem[t]))
            if not moved_right or seq.colors[partner] is c or w != delta:
                raise ProofGapError(
                    f"in-window F{j} descent at t={t} is not a rightward swap "
                    f"with an opposite-color partner"
                )
            pool.add(member, partner, t + 1, f"F{j}")
            events.append(
                CurveEvent(f"F{j}", t + 1, "descent", None, "witness",
                           (min(member, partner), max(member, partner)))
            )

    h_set = frozenset(h_ids)
    for i, trk in enumerate(h_tracks, start=1):
        ascents = window_changes(trk, delta - s, delta)
        if len(ascents) < ch_h[i - 1] + 1:
            raise InsufficientBorderError(
                f"H{i} has {len(ascents)} ascents for charge {ch_h[i - 1]}",
                hint=("H", i),
            )
        for t in ascents:
            member, partner, moved_right, w = swap_parts(t, h_set, int(trk.elem[t]))
            if moved_right or seq.colors[partner] is c or w != delta:
                raise ProofGapError(
                    f"in-window H{i} ascent at t={t} is not a leftward swap "
                    f"with an opposite-color partner"
                )
            pool.add(member, partner, t + 1, f"H{i}")
            events.append(
                CurveEvent(f"H{i}", t + 1, "ascent", None, "witness",
                           (min(member, partner), max(member, partner)))
            )

    witnesses = pool.sorted_witnesses()
    if len(witnesses) < target:
        raise InsufficientBorderError(
            f"scan found {len(witnesses)} witnesses for target {target}", hint=None
        )
    return Certificate(
        case=Case.CASE2.value,
        target=target,
        witnesses=witnesses,
        witness_origins=tuple(pool.origins),
        border=border,
        f_set=f_ids,
        g_set=g_ids,
        h_set=h_ids,
        ledger=ChargeLedger(tuple(ch_f), tuple(ch_h), tuple(transactions)),
        events=tuple(events),
    )


# ---------------------------------------------------------------------------
# Border maximization


def _position_sum(seq: AllowableSequence, border: Border) -> int:
    bpos, _ = _walk_positions(seq, border.elements)
    return int(bpos[: seq.period].sum())


def _cyclic_runs(flags) -> list[list[int]]:
    """Maximal cyclic runs of true entries, as lists of indices."""
    m = len(flags)
    if all(flags):
        return [list(range(m))]
    runs, current = [], []
    start = next(i for i in range(m) if not flags[i])
    for off in range(1, m + 1):
        i = (start + off) % m
        if flags[i]:
            current.append(i)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs


def _improve_once(seq: AllowableSequence, border: Border, hint=None) -> Border | None:
    """One strict improvement of the border, or None at a fixed point.

    Devices: adopt a threshold-respecting curve lying right of the border,
    replace the border by the nearest-opposite-color-left curve of a
    threshold-avoiding curve right of it, or splice the border along a curve
    that crosses it while holding the threshold side.
    """
    c = border.color
    delta = seq.delta
    period = seq.period
    f_ids, g_ids, h_ids = partition_fgh(seq, border)
    all_ids = tuple(sorted(frozenset(f_ids) | frozenset(g_ids) | frozenset(h_ids)))
    base_sum = _position_sum(seq, border)
    bpos, _ = _walk_positions(seq, border.elements)
    bpos = bpos[:period]

    candidates = [("G", g_ids, k) for k in range(1, len(g_ids) + 1)]
    candidates += [("ALL", all_ids, k) for k in range(1, len(all_ids) + 1)]
    if hint is not None and hint[0] == "G":
        candidates.sort(key=lambda cand: (cand[0], cand[2]) != ("G", hint[1]))

    def accept(cand: Border) -> bool:
        return not check_border(seq, cand) and _position_sum(seq, cand) > base_sum

    for _, ids, k in candidates:
        trk = track(seq, CurveSpec(frozenset(ids), k))
        wt = trk.wt[:period]
        pos = trk.pos[:period]
        rel = pos - bpos
        on_side = wt >= delta if c is Color.BLUE else wt <= delta
        off_side = wt < delta if c is Color.BLUE else wt > delta
        if (rel >= 0).all():
            if on_side.all() and (rel > 0).any():
                cand = Border(c, tuple(int(v) for v in trk.elem[:period]))
                if accept(cand):
                    return cand
            if off_side.all() and (rel > 0).all():
                rho = _nearest_left_curve(seq, trk.pos, c.opposite)
                cand = Border(c.opposite, rho)
                if accept(cand):
                    return cand
        else:
            for run in _cyclic_runs([bool(v) for v in (rel >= 0)]):
                if all(on_side[t] for t in run) and any(rel[t] > 0 for t in run):
                    elems = list(border.elements)
                    for t in run:
                        elems[t] = int(trk.elem[t])
                    cand = Border(c, tuple(elems))
                    if accept(cand):
                        return cand
    return None


def maximize_border(seq: AllowableSequence, start: Border, hint=None) -> Border:
    """Iterate the improvement devices to a fixed point.

    Each round strictly increases the total position of the border, so the
    loop terminates within n * 2N rounds.
    """
    border = start
    for _ in range(seq.n * seq.period + 1):
        improved = _improve_once(seq, border, hint)
        if improved is None:
            return border
        hint = None
        border = improved
    raise ProofGapError("border improvement exceeded its termination bound")


def certify(seq: AllowableSequence) -> Certificate:
    """Produce a verified certificate of at least r distinct balanced transpositions."""
    info = classify_case(seq)
    if info.case is Case.CASE1:
        return case1_certificate(seq)
    border = initial_border(seq, info.preserving_rank)
    hint = None
    for _ in range(seq.n * seq.period + 1):
        border = maximize_border(seq, border, hint)
        try:
            return case2_certificate(seq, border)
        except InsufficientBorderError as exc:
            improved = _improve_once(seq, border, exc.hint)
            if improved is None:
                raise ProofGapError(
                    f"obligation failed at a fixed-point border: {exc}"
                ) from exc
            border = improved
            hint = None
    raise ProofGapError("certify did not converge")


# ---------------------------------------------------------------------------
# Independent verification


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    diagnostics: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_certificate(seq: AllowableSequence, cert: Certificate) -> VerificationResult:
    """Re-check a certificate from scratch, without the incremental kernels."""
    diagnostics: list[str] = []
    seen = set()
    for w in cert.witnesses:
        if w.pair in seen:
            diagnostics.append(f"DUPLICATE_PAIR {w.pair}")
        seen.add(w.pair)
        if w.t is None:
            diagnostics.append(f"NOT_BALANCED {w.pair}: witness carries no time")
            continue
        tr = transposition_at(seq, w.t)
        ok = (
            tr.pair == w.pair
            and seq.colors[w.blue_id] is Color.BLUE
            and seq.colors[w.red_id] is Color.RED
            and tr.left_weight == seq.delta
            and w.left_weight == seq.delta
        )
        if not ok:
            diagnostics.append(f"NOT_BALANCED {w.pair} at t={w.t}")
    if len(cert.witnesses) < cert.target:
        diagnostics.append(f"INSUFFICIENT_COUNT {len(cert.witnesses)} < {cert.target}")

    if cert.case == Case.CASE2.value:
        if cert.border is None or cert.ledger is None:
            diagnostics.append("MISSING_CASE2_DATA")
        else:
            if check_border(seq, cert.border):
                diagnostics.append("BAD_BORDER")
            c = cert.border.color
            members = {i for i in range(seq.n) if seq.colors[i] is c}
            parts = [set(cert.f_set), set(cert.g_set), set(cert.h_set)]
            if (
                parts[0] | parts[1] | parts[2] != members
                or sum(len(p) for p in parts) != len(members)
            ):
                diagnostics.append("BAD_PARTITION")
            ledger = cert.ledger
            if any(v < 0 for v in ledger.ch_f + ledger.ch_h):
                diagnostics.append("BAD_LEDGER negative charge")
            if ledger.total_charges != len(ledger.transactions):
                diagnostics.append("BAD_LEDGER charge/transaction mismatch")
            origin = dict(cert.witness_origins)
            fh = sum(1 for p in seen if origin.get(p, "?")[0] in ("F", "H"))
            gg = sum(1 for p in seen if origin.get(p, "?")[0] == "G")
            g_n = len(cert.g_set)
            if fh < len(cert.f_set) + len(cert.h_set) + ledger.total_charges:
                diagnostics.append("LEDGER_FH_COUNT")
            if gg < 2 * (g_n // 2) + (g_n % 2) - ledger.total_charges:
                diagnostics.append("LEDGER_G_COUNT")
    return VerificationResult(ok=not diagnostics, diagnostics=tuple(diagnostics))


def certificate_to_json(cert: Certificate) -> str:
    """Deterministic JSON rendering for golden-file tests and the CLI."""
    payload = {
        "case": cert.case,
        "target": cert.target,
        "witnesses": [
            {
                "pair": list(w.pair),
                "blue": w.blue_id,
                "red": w.red_id,
                "t": w.t,
                "left_weight": w.left_weight,
            }
            for w in cert.witnesses
        ],
        "witness_origins": [[list(p), label] for p, label in sorted(cert.witness_origins)],
        "border": (
            None
            if cert.border is None
            else {"color": cert.border.color.value, "elements": list(cert.border.elements)}
        ),
        "f": list(cert.f_set) if cert.f_set is not None else None,
        "g": list(cert.g_set) if cert.g_set is not None else None,
        "h": list(cert.h_set) if cert.h_set is not None else None,
        "ledger": (
            None
            if cert.ledger is None
            else {
                "ch_f": list(cert.ledger.ch_f),
                "ch_h": list(cert.ledger.ch_h),
                "transactions": [list(tr) for tr in cert.ledger.transactions],
            }
        ),
        "events": [
            {
                "curve": e.curve,
                "t": e.t,
                "kind": e.kind,
                "confined": e.confined,
                "outcome": e.outcome,
                "pair": list(e.pair),
                "charged": e.charged,
            }
            for e in cert.events
        ],
    }
    return json.dumps(payload, separators=(",", ":"))
