"""Shared fixtures and independent oracles.

The oracles recompute everything from first principles (Fraction arithmetic,
from-scratch permutation replay) so they share no code path with the
incremental implementations they check.
"""
from fractions import Fraction

import pytest

from balanced_lines.geometry import ChromaticPoint, Color, Instance
from balanced_lines.harness import separated_instance


def make_instance(rows):
    """rows: iterable of (x, y, 'B'|'R') in id order."""
    return Instance(
        ChromaticPoint(i, Fraction(x), Fraction(y), Color(c))
        for i, (x, y, c) in enumerate(rows)
    )


@pytest.fixture
def t1():
    return make_instance([(0, 0, "B"), (1, 1, "R")])


@pytest.fixture
def t2():
    return separated_instance(3)


@pytest.fixture
def t_red_border():
    # Blues inside a red triangle: the leftmost-blue curve stays below the
    # threshold, forcing Case 2 with a red border.
    return make_instance([
        (0, 1, "B"), (1, 2, "B"), (Fraction(-1, 2), Fraction(5, 2), "B"),
        (-20, -10, "R"), (21, -11, "R"), (1, 30, "R"),
    ])


@pytest.fixture
def t_blue_border():
    # Reds strictly inside the blue hull with delta=0: the leftmost-blue curve
    # never dips below the threshold, forcing Case 2 with a blue border.
    return make_instance([
        (-100, -99, "B"), (101, -98, "B"), (99, 103, "B"), (-102, 97, "B"),
        (-1, -2, "R"), (2, -1, "R"), (1, 3, "R"), (-3, 1, "R"),
    ])


# ---------------------------------------------------------------------------
# Oracles


def oracle_halfplane(inst, i, j):
    """Direct Fraction-arithmetic halfplane weights, no scaling tricks."""
    pi, pj = inst.points[i], inst.points[j]
    left = right = 0
    for k in range(inst.n):
        if k in (i, j):
            continue
        pk = inst.points[k]
        det = (pj.x - pi.x) * (pk.y - pi.y) - (pj.y - pi.y) * (pk.x - pi.x)
        if det == 0:
            raise ValueError("collinear")
        if det > 0:
            left += inst.weight(k)
        else:
            right += inst.weight(k)
    return left, right


def oracle_balanced_pairs(inst):
    """Brute-force balanced-line pairs from halfplane counts."""
    delta = inst.delta
    out = set()
    for i in range(inst.n):
        for j in range(i + 1, inst.n):
            if inst.color_of(i) is inst.color_of(j):
                continue
            if oracle_halfplane(inst, i, j) == (delta, delta):
                out.add((i, j))
    return out


def all_permutations(seq):
    """pi^0 .. pi^{2N} by naive replay of the word and its mirrored half."""
    n = seq.n
    perms = [list(seq.pi0)]
    word2 = list(seq.word) + [n - 2 - p for p in seq.word]
    for p in word2:
        nxt = list(perms[-1])
        nxt[p], nxt[p + 1] = nxt[p + 1], nxt[p]
        perms.append(nxt)
    return perms


def oracle_scan_pairs(seq):
    """Balanced transpositions in [1, N] with per-step from-scratch weights."""
    perms = all_permutations(seq)
    delta = seq.delta
    out = set()
    for t in range(1, seq.half_period + 1):
        p = seq.word[t - 1]
        prev = perms[t - 1]
        a, b = prev[p], prev[p + 1]
        left = sum(seq.weights[v] for v in prev[:p])
        if seq.colors[a] is not seq.colors[b] and left == delta:
            out.add((min(a, b), max(a, b)))
    return out


def oracle_track(seq, members, k):
    """(element, weight) per time in [0, 2N], from scratch."""
    perms = all_permutations(seq)
    out = []
    for perm in perms:
        ranked = [v for v in perm if v in members]
        e = ranked[k - 1]
        q = perm.index(e)
        out.append((e, sum(seq.weights[v] for v in perm[:q])))
    return out
