"""The two balanced-line enumerators and their correspondence check.

A balanced line is identified by its bichromatic spanning pair; the geometric
enumerator counts halfplane weights directly, the scan enumerator finds
balanced transpositions in one half-period of the allowable sequence. The two
pair sets must coincide on every clean instance.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .geometry import Color, Instance, halfplane_weights
from .sequence import AllowableSequence, build_from_points


class WitnessSource(Enum):
    GEOMETRIC = "geometric"
    SCAN = "scan"


@dataclass(frozen=True, eq=False)
class BalancedWitness:
    """A balanced line/transposition, identified by its unordered point pair.

    Equality and hashing use only the pair, per the one-to-one correspondence
    between balanced lines and balanced transpositions.
    """

    blue_id: int
    red_id: int
    source: WitnessSource
    t: int | None
    left_weight: int

    @property
    def pair(self) -> tuple[int, int]:
        return (min(self.blue_id, self.red_id), max(self.blue_id, self.red_id))

    def __eq__(self, other):
        return isinstance(other, BalancedWitness) and self.pair == other.pair

    def __hash__(self):
        return hash(self.pair)


def enumerate_balanced_lines(inst: Instance) -> set[BalancedWitness]:
    """All bichromatic pairs whose open halfplanes both have weight delta."""
    delta = inst.delta
    out = set()
    blues = [i for i in range(inst.n) if inst.color_of(i) is Color.BLUE]
    reds = [i for i in range(inst.n) if inst.color_of(i) is Color.RED]
    for bi in blues:
        for ri in reds:
            if halfplane_weights(inst, bi, ri) == (delta, delta):
                out.add(BalancedWitness(bi, ri, WitnessSource.GEOMETRIC, None, delta))
    return out


def scan_balanced_transpositions(seq: AllowableSequence) -> set[BalancedWitness]:
    """One half-period scan emitting every bichromatic swap with left weight delta."""
    delta = seq.delta
    lo, hi, lw, _ = _kernels.run_word(seq._pi0_a, seq._word_a, seq._weights_a)
    out = set()
    for t in range(len(lo)):
        a, b = int(lo[t]), int(hi[t])
        if seq.colors[a] is not seq.colors[b] and lw[t] == delta:
            blue, red = (a, b) if seq.colors[a] is Color.BLUE else (b, a)
            out.add(BalancedWitness(blue, red, WitnessSource.SCAN, t + 1, delta))
    return out


@dataclass(frozen=True)
class CorrespondenceReport:
    geometric: frozenset[BalancedWitness]
    scan: frozenset[BalancedWitness]

    @property
    def equal(self) -> bool:
        return {w.pair for w in self.geometric} == {w.pair for w in self.scan}


def check_correspondence(inst: Instance) -> CorrespondenceReport:
    """Run both enumerators on one instance and compare their pair sets."""
    geometric = enumerate_balanced_lines(inst)
    scan = scan_balanced_transpositions(build_from_points(inst))
    return CorrespondenceReport(frozenset(geometric), frozenset(scan))


def witnesses_to_json(witnesses, delta: int) -> str:
    """Witness pair set as canonical JSON, sorted for reproducible diffs."""
    pairs = sorted(w.pair for w in witnesses)
    return json.dumps(
        {"pairs": [list(p) for p in pairs], "count": len(pairs), "delta": delta},
        separators=(",", ":"),
    )
