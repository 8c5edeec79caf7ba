"""Pure-Python backtracking kernels.

Same signatures and output order as the compiled ``_kernels`` module. Masks are
Python ints so there is no size limit here.

Sequences: ``masks[a]`` has bit ``b`` set iff item ``b`` may appear anywhere
after item ``a``. A sequence is valid iff every later item is allowed by every
earlier one. Candidates at each position are tried in increasing index order.

Trees: chords ``0..len(ends)-1`` with endpoints ``ends[k]`` on ``n_points``
points, ``cross[k]`` the mask of chords crossing chord ``k``. Chords are chosen
in increasing index order, skipping any that cross a chosen chord or close a
cycle.
"""

from __future__ import annotations


def _prefix_candidates(masks, prefix):
    cand = (1 << len(masks)) - 1
    for a in prefix:
        if not (cand >> a) & 1:
            return None
        cand &= masks[a]
    return cand


def extend_sequences(masks, length, prefix=()):
    cand = _prefix_candidates(masks, prefix)
    if cand is None:
        return []
    out = []
    seq = list(prefix)

    def rec(cand):
        need = length - len(seq)
        if need == 0:
            out.append(tuple(seq))
            return
        if bin(cand).count("1") < need:
            return
        m = cand
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            seq.append(b)
            rec(cand & masks[b])
            seq.pop()

    rec(cand)
    return out


def count_sequences(masks, length, prefix=()):
    cand = _prefix_candidates(masks, prefix)
    if cand is None:
        return 0

    def rec(cand, need):
        if need == 0:
            return 1
        if bin(cand).count("1") < need:
            return 0
        total = 0
        m = cand
        while m:
            low = m & -m
            m ^= low
            total += rec(cand & masks[low.bit_length() - 1], need - 1)
        return total

    return rec(cand, length - len(prefix))


def _tree_search(n_points, ends, cross, size, prefix, emit):
    nchords = len(ends)
    label = list(range(n_points))
    forbidden = 0
    chosen = []
    for k in prefix:
        if chosen and k <= chosen[-1]:
            return
        if (forbidden >> k) & 1:
            return
        p, q = ends[k]
        lp, lq = label[p], label[q]
        if lp == lq:
            return
        label = [lp if x == lq else x for x in label]
        forbidden |= cross[k]
        chosen.append(k)

    def rec(start, forbidden, label):
        need = size - len(chosen)
        if need == 0:
            emit(chosen)
            return
        for k in range(start, nchords - need + 1):
            if (forbidden >> k) & 1:
                continue
            p, q = ends[k]
            lp, lq = label[p], label[q]
            if lp == lq:
                continue
            chosen.append(k)
            rec(k + 1, forbidden | cross[k], [lp if x == lq else x for x in label])
            chosen.pop()

    rec(chosen[-1] + 1 if chosen else 0, forbidden, label)


def extend_trees(n_points, ends, cross, size, prefix=()):
    out = []
    _tree_search(n_points, ends, cross, size, prefix, lambda c: out.append(tuple(c)))
    return out


def count_trees(n_points, ends, cross, size, prefix=()):
    box = [0]

    def bump(_):
        box[0] += 1

    _tree_search(n_points, ends, cross, size, prefix, bump)
    return box[0]
