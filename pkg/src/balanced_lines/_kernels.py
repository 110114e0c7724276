"""Hot inner loops over permutation words.

Every kernel walks an adjacent-transposition word while maintaining the
permutation and a prefix-weight table in O(1) per step. The same source is
used twice: compiled with numba's @njit when available, or executed as plain
Python over numpy arrays when numba is missing or disabled via
``BALANCED_LINES_NUMBA=0``. ``benchmarks/bench_kernels.py`` compares the two.
"""
from __future__ import annotations

import os

import numpy as np


def _numba_enabled() -> bool:
    flag = os.environ.get("BALANCED_LINES_NUMBA", "auto").strip().lower()
    if flag in ("0", "false", "no", "off"):
        return False
    return True


def run_word_py(pi0, word, weights):
    """Replay a word; per step return (left element, right element, prefix weight).

    The prefix weight is the weight sum strictly left of the swapped pair,
    which a single adjacent swap never changes.
    """
    n = pi0.shape[0]
    m = word.shape[0]
    perm = pi0.copy()
    pre = np.zeros(n + 1, np.int64)
    for q in range(n):
        pre[q + 1] = pre[q] + weights[perm[q]]
    lo = np.empty(m, np.int64)
    hi = np.empty(m, np.int64)
    lw = np.empty(m, np.int64)
    for t in range(m):
        p = word[t]
        a = perm[p]
        b = perm[p + 1]
        lo[t] = a
        hi[t] = b
        lw[t] = pre[p]
        perm[p] = b
        perm[p + 1] = a
        pre[p + 1] = pre[p] + weights[b]
    return lo, hi, lw, perm


def track_rank_py(pi0, word, weights, member, k):
    """Follow the k-th member (1-based, left to right) of a subset through a word.

    Returns per-time arrays (element, prefix weight, position), one entry per
    permutation visited, i.e. len(word)+1 entries.
    """
    n = pi0.shape[0]
    m = word.shape[0]
    perm = pi0.copy()
    pre = np.zeros(n + 1, np.int64)
    for q in range(n):
        pre[q + 1] = pre[q] + weights[perm[q]]
    tp = -1
    seen = 0
    for q in range(n):
        if member[perm[q]]:
            seen += 1
            if seen == k:
                tp = q
                break
    elem = np.empty(m + 1, np.int64)
    wt = np.empty(m + 1, np.int64)
    pos = np.empty(m + 1, np.int64)
    elem[0] = perm[tp]
    wt[0] = pre[tp]
    pos[0] = tp
    for t in range(m):
        p = word[t]
        a = perm[p]
        b = perm[p + 1]
        perm[p] = b
        perm[p + 1] = a
        pre[p + 1] = pre[p] + weights[b]
        # Only a member/non-member swap shifts the subset's position multiset.
        if member[a] and not member[b]:
            if tp == p:
                tp = p + 1
        elif member[b] and not member[a]:
            if tp == p + 1:
                tp = p
        elem[t + 1] = perm[tp]
        wt[t + 1] = pre[tp]
        pos[t + 1] = tp
    return elem, wt, pos


def element_walk_py(pi0, word, weights, elems):
    """Positions and prefix weights of a prescribed element per time step.

    ``elems`` gives one element id per time (len(word)+1 entries, cyclic
    curves pass their full period).
    """
    n = pi0.shape[0]
    m = word.shape[0]
    perm = pi0.copy()
    pos_of = np.empty(n, np.int64)
    for q in range(n):
        pos_of[perm[q]] = q
    pre = np.zeros(n + 1, np.int64)
    for q in range(n):
        pre[q + 1] = pre[q] + weights[perm[q]]
    pos = np.empty(m + 1, np.int64)
    wt = np.empty(m + 1, np.int64)
    pos[0] = pos_of[elems[0]]
    wt[0] = pre[pos[0]]
    for t in range(m):
        p = word[t]
        a = perm[p]
        b = perm[p + 1]
        perm[p] = b
        perm[p + 1] = a
        pos_of[b] = p
        pos_of[a] = p + 1
        pre[p + 1] = pre[p] + weights[b]
        e = elems[t + 1]
        pos[t + 1] = pos_of[e]
        wt[t + 1] = pre[pos[t + 1]]
    return pos, wt


def events_to_word_py(pi0, ev_i, ev_j):
    """Convert a sequence of swap pairs into word positions.

    Each event's pair must be adjacent when its turn comes; a -1 entry in the
    output flags a violation (the caller raises).
    """
    n = pi0.shape[0]
    m = ev_i.shape[0]
    perm = pi0.copy()
    pos_of = np.empty(n, np.int64)
    for q in range(n):
        pos_of[perm[q]] = q
    word = np.empty(m, np.int64)
    for t in range(m):
        pi = pos_of[ev_i[t]]
        pj = pos_of[ev_j[t]]
        if pi > pj:
            pi, pj = pj, pi
        if pj != pi + 1:
            word[t] = -1
            return word
        word[t] = pi
        a = perm[pi]
        b = perm[pj]
        perm[pi] = b
        perm[pj] = a
        pos_of[b] = pi
        pos_of[a] = pj
    return word


if _numba_enabled():
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - exercised only without numba
        njit = None
else:
    njit = None

if njit is not None:
    BACKEND = "numba"
    run_word = njit(cache=True)(run_word_py)
    track_rank = njit(cache=True)(track_rank_py)
    element_walk = njit(cache=True)(element_walk_py)
    events_to_word = njit(cache=True)(events_to_word_py)
else:
    BACKEND = "python"
    run_word = run_word_py
    track_rank = track_rank_py
    element_walk = element_walk_py
    events_to_word = events_to_word_py
