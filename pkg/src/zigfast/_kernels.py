"""Numba kernels: the scalar sampling loops and their bulk/bench wrappers.

Every bulk operation runs the same word-for-word draw body as the scalar
entry point, so filling a buffer is bit-identical to repeated single draws
from the same state.  The uniform generator is selected by an integer id so
one compiled kernel serves every generator:

* gid 0 -- xoshiro256++ (state: 4 words)
* gid 1 -- splitmix64   (state: 1 word)
* gid 2 -- replay       (state: cursor followed by a fixed word list; wraps)

The draw bodies are duplicated into each entry point instead of being shared
through a helper function.  A call boundary costs atomic reference-count
updates on every array argument (an order of magnitude in throughput at
these draw rates), and numba-level inlining of a loop-bearing body produces
equally slow code, so the bodies are written in single-exit flag form and
pasted where they run.  Tests pin the fill/sample streams against each other
bit for bit, which catches any drift between the copies.

Table packs are likewise passed as flat argument lists, never as tuples:
arrays extracted from a tuple argument also pay per-access reference counts.

Counter slots (int64[6]) for the counted variants:
0 byte draws, 1 common-path exits, 2 overhang fast accepts,
3 band density evaluations, 4 tail entries, 5 overhang box attempts.
For the traditional kernels: 0 rounds, 1 fast accepts, 2 density
evaluations, 3 tail entries.
"""

import numpy as np
from numba import njit

TWO_NEG_64 = 2.0 ** -64
MASK8 = np.uint64(0xFF)
_U17 = np.uint64(17)
_U23 = np.uint64(23)
_U45 = np.uint64(45)
_U64W = np.uint64(64)
_SM_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM_M1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_M2 = np.uint64(0x94D049BB133111EB)
_U30 = np.uint64(30)
_U27 = np.uint64(27)
_U31 = np.uint64(31)
_ONE = np.uint64(1)

XOSHIRO256PP = 0
SPLITMIX64 = 1
REPLAY = 2


@njit(cache=True, nogil=True, inline="always")
def _rotl(x, k):
    return (x << k) | (x >> (_U64W - k))


@njit(cache=True, nogil=True, inline="always")
def next_u64(state, gid):
    if gid == 0:
        s0 = state[0]
        s1 = state[1]
        s2 = state[2]
        s3 = state[3]
        result = _rotl(s0 + s3, _U23) + s0
        t = s1 << _U17
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, _U45)
        state[0] = s0
        state[1] = s1
        state[2] = s2
        state[3] = s3
        return result
    elif gid == 1:
        state[0] += _SM_GAMMA
        z = state[0]
        z = (z ^ (z >> _U30)) * _SM_M1
        z = (z ^ (z >> _U27)) * _SM_M2
        return z ^ (z >> _U31)
    else:
        n = np.uint64(state.shape[0] - 1)
        pos = state[0]
        v = state[_ONE + pos % n]
        state[0] = pos + _ONE
        return v


@njit(cache=True, nogil=True)
def next_block(state, gid, out):
    for i in range(out.shape[0]):
        out[i] = next_u64(state, gid)


@njit(cache=True, nogil=True, inline="always")
def _u01(state, gid):
    return np.float64(next_u64(state, gid)) * TWO_NEG_64


@njit(cache=True, nogil=True, inline="always")
def _u01_pos(state, gid):
    # in (0, 1]; safe under log
    return (np.float64(next_u64(state, gid)) + 1.0) * TWO_NEG_64


@njit(cache=True, nogil=True, inline="always")
def _xstep(s0, s1, s2, s3):
    """One xoshiro256++ step on register-resident state.

    The bench kernels keep the four state words in locals for the whole
    timed loop; going through the state array costs a store-load round trip
    per word per draw, which halves throughput and (worse) hides the
    algorithmic difference the benchmark exists to measure.
    """
    u = _rotl(s0 + s3, _U23) + s0
    t = s1 << _U17
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = _rotl(s3, _U45)
    return u, s0, s1, s2, s3


@njit(cache=True, nogil=True, inline="always")
def _alias_pick(state, gid, prob, alias):
    n = prob.shape[0]
    k = np.int64(_u01(state, gid) * n)
    if k >= n:
        k = n - 1
    if _u01(state, gid) < prob[k]:
        return k
    return alias[k]


# ---------------------------------------------------------------------------
# modified ziggurat, exponential
#
# Draw body: byte below lmax exits through the common path with one multiply;
# otherwise the alias table picks an overhang slot.  Slot 0 is the tail:
# shift right by X[1] and restart (memorylessness).  Bounded slots reflect
# the never-accept triangle onto the lower half, fast-accept below the chord
# minus the rejection band, and only evaluate exp(-x) inside the band.
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def exp_one(state, gid, lmax, sx, xlo, xw, flo, fh, eps, prob, alias, tailx):
    shift = 0.0
    val = 0.0
    live = True
    while live:
        u = next_u64(state, gid)
        i = np.int64(u & MASK8)
        if i < lmax:
            val = shift + np.float64(u) * sx[i + 1]
            live = False
        else:
            j = _alias_pick(state, gid, prob, alias)
            if j == 0:
                shift += tailx
            else:
                while live:
                    ux = _u01(state, gid)
                    uy = _u01(state, gid)
                    if ux > 1.0 - uy:
                        t = ux
                        ux = 1.0 - uy
                        uy = 1.0 - t
                    if uy < 1.0 - ux - eps:
                        val = shift + xlo[j] + ux * xw[j]
                        live = False
                    else:
                        x = xlo[j] + ux * xw[j]
                        y = flo[j] + uy * fh[j]
                        if y < np.exp(-x):
                            val = shift + x
                            live = False
    return val


@njit(cache=True, nogil=True)
def exp_one_counted(state, gid, lmax, sx, xlo, xw, flo, fh, eps, prob,
                    alias, tailx, cnt):
    shift = 0.0
    val = 0.0
    live = True
    while live:
        u = next_u64(state, gid)
        cnt[0] += 1
        i = np.int64(u & MASK8)
        if i < lmax:
            cnt[1] += 1
            val = shift + np.float64(u) * sx[i + 1]
            live = False
        else:
            j = _alias_pick(state, gid, prob, alias)
            if j == 0:
                cnt[4] += 1
                shift += tailx
            else:
                while live:
                    cnt[5] += 1
                    ux = _u01(state, gid)
                    uy = _u01(state, gid)
                    if ux > 1.0 - uy:
                        t = ux
                        ux = 1.0 - uy
                        uy = 1.0 - t
                    if uy < 1.0 - ux - eps:
                        cnt[2] += 1
                        val = shift + xlo[j] + ux * xw[j]
                        live = False
                    else:
                        cnt[3] += 1
                        x = xlo[j] + ux * xw[j]
                        y = flo[j] + uy * fh[j]
                        if y < np.exp(-x):
                            val = shift + x
                            live = False
    return val


@njit(cache=True, nogil=True)
def fill_exp(state, gid, lmax, sx, xlo, xw, flo, fh, eps, prob, alias,
             tailx, out):
    for k in range(out.shape[0]):
        shift = 0.0
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            i = np.int64(u & MASK8)
            if i < lmax:
                val = shift + np.float64(u) * sx[i + 1]
                live = False
            else:
                j = _alias_pick(state, gid, prob, alias)
                if j == 0:
                    shift += tailx
                else:
                    while live:
                        ux = _u01(state, gid)
                        uy = _u01(state, gid)
                        if ux > 1.0 - uy:
                            t = ux
                            ux = 1.0 - uy
                            uy = 1.0 - t
                        if uy < 1.0 - ux - eps:
                            val = shift + xlo[j] + ux * xw[j]
                            live = False
                        else:
                            x = xlo[j] + ux * xw[j]
                            y = flo[j] + uy * fh[j]
                            if y < np.exp(-x):
                                val = shift + x
                                live = False
        out[k] = val


@njit(cache=True, nogil=True)
def fill_exp_counted(state, gid, lmax, sx, xlo, xw, flo, fh, eps, prob,
                     alias, tailx, out, cnt):
    for k in range(out.shape[0]):
        shift = 0.0
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            cnt[0] += 1
            i = np.int64(u & MASK8)
            if i < lmax:
                cnt[1] += 1
                val = shift + np.float64(u) * sx[i + 1]
                live = False
            else:
                j = _alias_pick(state, gid, prob, alias)
                if j == 0:
                    cnt[4] += 1
                    shift += tailx
                else:
                    while live:
                        cnt[5] += 1
                        ux = _u01(state, gid)
                        uy = _u01(state, gid)
                        if ux > 1.0 - uy:
                            t = ux
                            ux = 1.0 - uy
                            uy = 1.0 - t
                        if uy < 1.0 - ux - eps:
                            cnt[2] += 1
                            val = shift + xlo[j] + ux * xw[j]
                            live = False
                        else:
                            cnt[3] += 1
                            x = xlo[j] + ux * xw[j]
                            y = flo[j] + uy * fh[j]
                            if y < np.exp(-x):
                                val = shift + x
                                live = False
        out[k] = val


@njit(cache=True, nogil=True)
def bench_exp(state, gid, lmax, sx, xlo, xw, flo, fh, eps, prob, alias,
              tailx, n):
    if gid == 0:
        s0 = state[0]
        s1 = state[1]
        s2 = state[2]
        s3 = state[3]
        nn = prob.shape[0]
        acc = 0.0
        for _ in range(n):
            shift = 0.0
            val = 0.0
            live = True
            while live:
                u, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                i = np.int64(u & MASK8)
                if i < lmax:
                    val = shift + np.float64(u) * sx[i + 1]
                    live = False
                else:
                    u1, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    k = np.int64(np.float64(u1) * TWO_NEG_64 * nn)
                    if k >= nn:
                        k = nn - 1
                    u2, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    j = k if np.float64(u2) * TWO_NEG_64 < prob[k] else alias[k]
                    if j == 0:
                        shift += tailx
                    else:
                        while live:
                            ua, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                            ub, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                            ux = np.float64(ua) * TWO_NEG_64
                            uy = np.float64(ub) * TWO_NEG_64
                            if ux > 1.0 - uy:
                                t = ux
                                ux = 1.0 - uy
                                uy = 1.0 - t
                            if uy < 1.0 - ux - eps:
                                val = shift + xlo[j] + ux * xw[j]
                                live = False
                            else:
                                x = xlo[j] + ux * xw[j]
                                y = flo[j] + uy * fh[j]
                                if y < np.exp(-x):
                                    val = shift + x
                                    live = False
            acc += val
        state[0] = s0
        state[1] = s1
        state[2] = s2
        state[3] = s3
        return acc
    acc = 0.0
    for _ in range(n):
        shift = 0.0
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            i = np.int64(u & MASK8)
            if i < lmax:
                val = shift + np.float64(u) * sx[i + 1]
                live = False
            else:
                j = _alias_pick(state, gid, prob, alias)
                if j == 0:
                    shift += tailx
                else:
                    while live:
                        ux = _u01(state, gid)
                        uy = _u01(state, gid)
                        if ux > 1.0 - uy:
                            t = ux
                            ux = 1.0 - uy
                            uy = 1.0 - t
                        if uy < 1.0 - ux - eps:
                            val = shift + xlo[j] + ux * xw[j]
                            live = False
                        else:
                            x = xlo[j] + ux * xw[j]
                            y = flo[j] + uy * fh[j]
                            if y < np.exp(-x):
                                val = shift + x
                                live = False
        acc += val
    return acc


# ---------------------------------------------------------------------------
# modified ziggurat, normal (half-normal magnitude + sign bit)
#
# Draw body: the signed word supplies layer byte, sign, and magnitude in one
# draw.  Overhang boxes use plain rejection (the half-normal changes
# curvature at x = 1, so the chord decomposition is unsound there); the tail
# transforms exponential draws from the embedded exponential body running on
# the same word stream.
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def normal_one(state, gid, lmax, sx2, xlo, xw, flo, fh, prob, alias, r,
               elmax, esx, exlo, exw, eflo, efh, eeps, eprob, ealias, etailx):
    u = next_u64(state, gid)
    i = np.int64(u & MASK8)
    s = np.int64(u)
    if i < lmax:
        return np.float64(s) * sx2[i + 1]
    neg = s < 0
    val = 0.0
    j = _alias_pick(state, gid, prob, alias)
    if j == 0:
        tl = True
        while tl:
            # embedded exponential draw body, twice (e1 then e2)
            eshift = 0.0
            e1 = 0.0
            live = True
            while live:
                eu = next_u64(state, gid)
                ei = np.int64(eu & MASK8)
                if ei < elmax:
                    e1 = eshift + np.float64(eu) * esx[ei + 1]
                    live = False
                else:
                    ej = _alias_pick(state, gid, eprob, ealias)
                    if ej == 0:
                        eshift += etailx
                    else:
                        while live:
                            ux = _u01(state, gid)
                            uy = _u01(state, gid)
                            if ux > 1.0 - uy:
                                t = ux
                                ux = 1.0 - uy
                                uy = 1.0 - t
                            if uy < 1.0 - ux - eeps:
                                e1 = eshift + exlo[ej] + ux * exw[ej]
                                live = False
                            else:
                                x = exlo[ej] + ux * exw[ej]
                                y = eflo[ej] + uy * efh[ej]
                                if y < np.exp(-x):
                                    e1 = eshift + x
                                    live = False
            eshift = 0.0
            e2 = 0.0
            live = True
            while live:
                eu = next_u64(state, gid)
                ei = np.int64(eu & MASK8)
                if ei < elmax:
                    e2 = eshift + np.float64(eu) * esx[ei + 1]
                    live = False
                else:
                    ej = _alias_pick(state, gid, eprob, ealias)
                    if ej == 0:
                        eshift += etailx
                    else:
                        while live:
                            ux = _u01(state, gid)
                            uy = _u01(state, gid)
                            if ux > 1.0 - uy:
                                t = ux
                                ux = 1.0 - uy
                                uy = 1.0 - t
                            if uy < 1.0 - ux - eeps:
                                e2 = eshift + exlo[ej] + ux * exw[ej]
                                live = False
                            else:
                                x = exlo[ej] + ux * exw[ej]
                                y = eflo[ej] + uy * efh[ej]
                                if y < np.exp(-x):
                                    e2 = eshift + x
                                    live = False
            x = e1 / r
            if e2 + e2 > x * x:
                val = r + x
                tl = False
    else:
        bx = True
        while bx:
            ux = _u01(state, gid)
            uy = _u01(state, gid)
            x = xlo[j] + ux * xw[j]
            y = flo[j] + uy * fh[j]
            if y < np.exp(-0.5 * x * x):
                val = x
                bx = False
    return -val if neg else val


@njit(cache=True, nogil=True)
def normal_one_counted(state, gid, lmax, sx2, xlo, xw, flo, fh, prob, alias,
                       r, elmax, esx, exlo, exw, eflo, efh, eeps, eprob,
                       ealias, etailx, cnt):
    u = next_u64(state, gid)
    cnt[0] += 1
    i = np.int64(u & MASK8)
    s = np.int64(u)
    if i < lmax:
        cnt[1] += 1
        return np.float64(s) * sx2[i + 1]
    neg = s < 0
    val = 0.0
    j = _alias_pick(state, gid, prob, alias)
    if j == 0:
        cnt[4] += 1
        tl = True
        while tl:
            # tail helper draws stay out of the counters: they describe the
            # normal sampler's own paths, not the embedded exponential's
            eshift = 0.0
            e1 = 0.0
            live = True
            while live:
                eu = next_u64(state, gid)
                ei = np.int64(eu & MASK8)
                if ei < elmax:
                    e1 = eshift + np.float64(eu) * esx[ei + 1]
                    live = False
                else:
                    ej = _alias_pick(state, gid, eprob, ealias)
                    if ej == 0:
                        eshift += etailx
                    else:
                        while live:
                            ux = _u01(state, gid)
                            uy = _u01(state, gid)
                            if ux > 1.0 - uy:
                                t = ux
                                ux = 1.0 - uy
                                uy = 1.0 - t
                            if uy < 1.0 - ux - eeps:
                                e1 = eshift + exlo[ej] + ux * exw[ej]
                                live = False
                            else:
                                x = exlo[ej] + ux * exw[ej]
                                y = eflo[ej] + uy * efh[ej]
                                if y < np.exp(-x):
                                    e1 = eshift + x
                                    live = False
            eshift = 0.0
            e2 = 0.0
            live = True
            while live:
                eu = next_u64(state, gid)
                ei = np.int64(eu & MASK8)
                if ei < elmax:
                    e2 = eshift + np.float64(eu) * esx[ei + 1]
                    live = False
                else:
                    ej = _alias_pick(state, gid, eprob, ealias)
                    if ej == 0:
                        eshift += etailx
                    else:
                        while live:
                            ux = _u01(state, gid)
                            uy = _u01(state, gid)
                            if ux > 1.0 - uy:
                                t = ux
                                ux = 1.0 - uy
                                uy = 1.0 - t
                            if uy < 1.0 - ux - eeps:
                                e2 = eshift + exlo[ej] + ux * exw[ej]
                                live = False
                            else:
                                x = exlo[ej] + ux * exw[ej]
                                y = eflo[ej] + uy * efh[ej]
                                if y < np.exp(-x):
                                    e2 = eshift + x
                                    live = False
            x = e1 / r
            if e2 + e2 > x * x:
                val = r + x
                tl = False
    else:
        bx = True
        while bx:
            cnt[5] += 1
            cnt[3] += 1
            ux = _u01(state, gid)
            uy = _u01(state, gid)
            x = xlo[j] + ux * xw[j]
            y = flo[j] + uy * fh[j]
            if y < np.exp(-0.5 * x * x):
                val = x
                bx = False
    return -val if neg else val


@njit(cache=True, nogil=True)
def fill_normal(state, gid, lmax, sx2, xlo, xw, flo, fh, prob, alias, r,
                elmax, esx, exlo, exw, eflo, efh, eeps, eprob, ealias,
                etailx, out):
    for k in range(out.shape[0]):
        u = next_u64(state, gid)
        i = np.int64(u & MASK8)
        s = np.int64(u)
        if i < lmax:
            out[k] = np.float64(s) * sx2[i + 1]
            continue
        neg = s < 0
        val = 0.0
        j = _alias_pick(state, gid, prob, alias)
        if j == 0:
            tl = True
            while tl:
                # embedded exponential draw body, twice (e1 then e2)
                eshift = 0.0
                e1 = 0.0
                live = True
                while live:
                    eu = next_u64(state, gid)
                    ei = np.int64(eu & MASK8)
                    if ei < elmax:
                        e1 = eshift + np.float64(eu) * esx[ei + 1]
                        live = False
                    else:
                        ej = _alias_pick(state, gid, eprob, ealias)
                        if ej == 0:
                            eshift += etailx
                        else:
                            while live:
                                ux = _u01(state, gid)
                                uy = _u01(state, gid)
                                if ux > 1.0 - uy:
                                    t = ux
                                    ux = 1.0 - uy
                                    uy = 1.0 - t
                                if uy < 1.0 - ux - eeps:
                                    e1 = eshift + exlo[ej] + ux * exw[ej]
                                    live = False
                                else:
                                    x = exlo[ej] + ux * exw[ej]
                                    y = eflo[ej] + uy * efh[ej]
                                    if y < np.exp(-x):
                                        e1 = eshift + x
                                        live = False
                eshift = 0.0
                e2 = 0.0
                live = True
                while live:
                    eu = next_u64(state, gid)
                    ei = np.int64(eu & MASK8)
                    if ei < elmax:
                        e2 = eshift + np.float64(eu) * esx[ei + 1]
                        live = False
                    else:
                        ej = _alias_pick(state, gid, eprob, ealias)
                        if ej == 0:
                            eshift += etailx
                        else:
                            while live:
                                ux = _u01(state, gid)
                                uy = _u01(state, gid)
                                if ux > 1.0 - uy:
                                    t = ux
                                    ux = 1.0 - uy
                                    uy = 1.0 - t
                                if uy < 1.0 - ux - eeps:
                                    e2 = eshift + exlo[ej] + ux * exw[ej]
                                    live = False
                                else:
                                    x = exlo[ej] + ux * exw[ej]
                                    y = eflo[ej] + uy * efh[ej]
                                    if y < np.exp(-x):
                                        e2 = eshift + x
                                        live = False
                x = e1 / r
                if e2 + e2 > x * x:
                    val = r + x
                    tl = False
        else:
            bx = True
            while bx:
                ux = _u01(state, gid)
                uy = _u01(state, gid)
                x = xlo[j] + ux * xw[j]
                y = flo[j] + uy * fh[j]
                if y < np.exp(-0.5 * x * x):
                    val = x
                    bx = False
        out[k] = -val if neg else val


@njit(cache=True, nogil=True)
def fill_normal_counted(state, gid, lmax, sx2, xlo, xw, flo, fh, prob,
                        alias, r, elmax, esx, exlo, exw, eflo, efh, eeps,
                        eprob, ealias, etailx, out, cnt):
    for k in range(out.shape[0]):
        out[k] = normal_one_counted(state, gid, lmax, sx2, xlo, xw, flo, fh,
                                    prob, alias, r, elmax, esx, exlo, exw,
                                    eflo, efh, eeps, eprob, ealias, etailx,
                                    cnt)


@njit(cache=True, nogil=True)
def bench_normal(state, gid, lmax, sx2, xlo, xw, flo, fh, prob, alias, r,
                 elmax, esx, exlo, exw, eflo, efh, eeps, eprob, ealias,
                 etailx, n):
    if gid == 0:
        s0 = state[0]
        s1 = state[1]
        s2 = state[2]
        s3 = state[3]
        nn = prob.shape[0]
        enn = eprob.shape[0]
        acc = 0.0
        for _ in range(n):
            u, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
            i = np.int64(u & MASK8)
            s = np.int64(u)
            if i < lmax:
                acc += np.float64(s) * sx2[i + 1]
                continue
            neg = s < 0
            val = 0.0
            u1, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
            k = np.int64(np.float64(u1) * TWO_NEG_64 * nn)
            if k >= nn:
                k = nn - 1
            u2, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
            j = k if np.float64(u2) * TWO_NEG_64 < prob[k] else alias[k]
            if j == 0:
                tl = True
                while tl:
                    # embedded exponential draw body, twice (e1 then e2)
                    eshift = 0.0
                    e1 = 0.0
                    live = True
                    while live:
                        eu, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                        ei = np.int64(eu & MASK8)
                        if ei < elmax:
                            e1 = eshift + np.float64(eu) * esx[ei + 1]
                            live = False
                        else:
                            v1, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                            ek = np.int64(np.float64(v1) * TWO_NEG_64 * enn)
                            if ek >= enn:
                                ek = enn - 1
                            v2, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                            ej = ek if np.float64(v2) * TWO_NEG_64 < eprob[ek] \
                                else ealias[ek]
                            if ej == 0:
                                eshift += etailx
                            else:
                                while live:
                                    ua, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                                    ub, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                                    ux = np.float64(ua) * TWO_NEG_64
                                    uy = np.float64(ub) * TWO_NEG_64
                                    if ux > 1.0 - uy:
                                        t = ux
                                        ux = 1.0 - uy
                                        uy = 1.0 - t
                                    if uy < 1.0 - ux - eeps:
                                        e1 = eshift + exlo[ej] + ux * exw[ej]
                                        live = False
                                    else:
                                        x = exlo[ej] + ux * exw[ej]
                                        y = eflo[ej] + uy * efh[ej]
                                        if y < np.exp(-x):
                                            e1 = eshift + x
                                            live = False
                    eshift = 0.0
                    e2 = 0.0
                    live = True
                    while live:
                        eu, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                        ei = np.int64(eu & MASK8)
                        if ei < elmax:
                            e2 = eshift + np.float64(eu) * esx[ei + 1]
                            live = False
                        else:
                            v1, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                            ek = np.int64(np.float64(v1) * TWO_NEG_64 * enn)
                            if ek >= enn:
                                ek = enn - 1
                            v2, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                            ej = ek if np.float64(v2) * TWO_NEG_64 < eprob[ek] \
                                else ealias[ek]
                            if ej == 0:
                                eshift += etailx
                            else:
                                while live:
                                    ua, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                                    ub, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                                    ux = np.float64(ua) * TWO_NEG_64
                                    uy = np.float64(ub) * TWO_NEG_64
                                    if ux > 1.0 - uy:
                                        t = ux
                                        ux = 1.0 - uy
                                        uy = 1.0 - t
                                    if uy < 1.0 - ux - eeps:
                                        e2 = eshift + exlo[ej] + ux * exw[ej]
                                        live = False
                                    else:
                                        x = exlo[ej] + ux * exw[ej]
                                        y = eflo[ej] + uy * efh[ej]
                                        if y < np.exp(-x):
                                            e2 = eshift + x
                                            live = False
                    x = e1 / r
                    if e2 + e2 > x * x:
                        val = r + x
                        tl = False
            else:
                bx = True
                while bx:
                    ua, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    ub, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    ux = np.float64(ua) * TWO_NEG_64
                    uy = np.float64(ub) * TWO_NEG_64
                    x = xlo[j] + ux * xw[j]
                    y = flo[j] + uy * fh[j]
                    if y < np.exp(-0.5 * x * x):
                        val = x
                        bx = False
            acc += -val if neg else val
        state[0] = s0
        state[1] = s1
        state[2] = s2
        state[3] = s3
        return acc
    acc = 0.0
    for _ in range(n):
        u = next_u64(state, gid)
        i = np.int64(u & MASK8)
        s = np.int64(u)
        if i < lmax:
            acc += np.float64(s) * sx2[i + 1]
            continue
        neg = s < 0
        val = 0.0
        j = _alias_pick(state, gid, prob, alias)
        if j == 0:
            tl = True
            while tl:
                # embedded exponential draw body, twice (e1 then e2)
                eshift = 0.0
                e1 = 0.0
                live = True
                while live:
                    eu = next_u64(state, gid)
                    ei = np.int64(eu & MASK8)
                    if ei < elmax:
                        e1 = eshift + np.float64(eu) * esx[ei + 1]
                        live = False
                    else:
                        ej = _alias_pick(state, gid, eprob, ealias)
                        if ej == 0:
                            eshift += etailx
                        else:
                            while live:
                                ux = _u01(state, gid)
                                uy = _u01(state, gid)
                                if ux > 1.0 - uy:
                                    t = ux
                                    ux = 1.0 - uy
                                    uy = 1.0 - t
                                if uy < 1.0 - ux - eeps:
                                    e1 = eshift + exlo[ej] + ux * exw[ej]
                                    live = False
                                else:
                                    x = exlo[ej] + ux * exw[ej]
                                    y = eflo[ej] + uy * efh[ej]
                                    if y < np.exp(-x):
                                        e1 = eshift + x
                                        live = False
                eshift = 0.0
                e2 = 0.0
                live = True
                while live:
                    eu = next_u64(state, gid)
                    ei = np.int64(eu & MASK8)
                    if ei < elmax:
                        e2 = eshift + np.float64(eu) * esx[ei + 1]
                        live = False
                    else:
                        ej = _alias_pick(state, gid, eprob, ealias)
                        if ej == 0:
                            eshift += etailx
                        else:
                            while live:
                                ux = _u01(state, gid)
                                uy = _u01(state, gid)
                                if ux > 1.0 - uy:
                                    t = ux
                                    ux = 1.0 - uy
                                    uy = 1.0 - t
                                if uy < 1.0 - ux - eeps:
                                    e2 = eshift + exlo[ej] + ux * exw[ej]
                                    live = False
                                else:
                                    x = exlo[ej] + ux * exw[ej]
                                    y = eflo[ej] + uy * efh[ej]
                                    if y < np.exp(-x):
                                        e2 = eshift + x
                                        live = False
                x = e1 / r
                if e2 + e2 > x * x:
                    val = r + x
                    tl = False
        else:
            bx = True
            while bx:
                ux = _u01(state, gid)
                uy = _u01(state, gid)
                x = xlo[j] + ux * xw[j]
                y = flo[j] + uy * fh[j]
                if y < np.exp(-0.5 * x * x):
                    val = x
                    bx = False
        acc += -val if neg else val
    return acc


# ---------------------------------------------------------------------------
# traditional ziggurat baseline
#
# Draw body: unconditional x = word * edge, integer compare against the
# precomputed per-byte threshold for the fast accept, tail fallback in strip
# 0, otherwise one density evaluation; any rejection restarts from scratch.
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def trad_exp_one(state, gid, se, kk, flo, fh, r):
    val = 0.0
    live = True
    while live:
        u = next_u64(state, gid)
        i = np.int64(u & MASK8)
        x = np.float64(u) * se[i]
        if u < kk[i]:
            val = x
            live = False
        elif i == 0:
            val = r - np.log(_u01_pos(state, gid))
            live = False
        else:
            y = flo[i] + _u01(state, gid) * fh[i]
            if y < np.exp(-x):
                val = x
                live = False
    return val


@njit(cache=True, nogil=True)
def trad_exp_one_counted(state, gid, se, kk, flo, fh, r, cnt):
    val = 0.0
    live = True
    while live:
        u = next_u64(state, gid)
        cnt[0] += 1
        i = np.int64(u & MASK8)
        x = np.float64(u) * se[i]
        if u < kk[i]:
            cnt[1] += 1
            val = x
            live = False
        elif i == 0:
            cnt[3] += 1
            val = r - np.log(_u01_pos(state, gid))
            live = False
        else:
            cnt[2] += 1
            y = flo[i] + _u01(state, gid) * fh[i]
            if y < np.exp(-x):
                val = x
                live = False
    return val


@njit(cache=True, nogil=True)
def fill_trad_exp(state, gid, se, kk, flo, fh, r, out):
    for k in range(out.shape[0]):
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            i = np.int64(u & MASK8)
            x = np.float64(u) * se[i]
            if u < kk[i]:
                val = x
                live = False
            elif i == 0:
                val = r - np.log(_u01_pos(state, gid))
                live = False
            else:
                y = flo[i] + _u01(state, gid) * fh[i]
                if y < np.exp(-x):
                    val = x
                    live = False
        out[k] = val


@njit(cache=True, nogil=True)
def fill_trad_exp_counted(state, gid, se, kk, flo, fh, r, out, cnt):
    for k in range(out.shape[0]):
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            cnt[0] += 1
            i = np.int64(u & MASK8)
            x = np.float64(u) * se[i]
            if u < kk[i]:
                cnt[1] += 1
                val = x
                live = False
            elif i == 0:
                cnt[3] += 1
                val = r - np.log(_u01_pos(state, gid))
                live = False
            else:
                cnt[2] += 1
                y = flo[i] + _u01(state, gid) * fh[i]
                if y < np.exp(-x):
                    val = x
                    live = False
        out[k] = val


@njit(cache=True, nogil=True)
def bench_trad_exp(state, gid, se, kk, flo, fh, r, n):
    if gid == 0:
        s0 = state[0]
        s1 = state[1]
        s2 = state[2]
        s3 = state[3]
        acc = 0.0
        for _ in range(n):
            val = 0.0
            live = True
            while live:
                u, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                i = np.int64(u & MASK8)
                x = np.float64(u) * se[i]
                if u < kk[i]:
                    val = x
                    live = False
                elif i == 0:
                    ut, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    val = r - np.log((np.float64(ut) + 1.0) * TWO_NEG_64)
                    live = False
                else:
                    uy, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    y = flo[i] + np.float64(uy) * TWO_NEG_64 * fh[i]
                    if y < np.exp(-x):
                        val = x
                        live = False
            acc += val
        state[0] = s0
        state[1] = s1
        state[2] = s2
        state[3] = s3
        return acc
    acc = 0.0
    for _ in range(n):
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            i = np.int64(u & MASK8)
            x = np.float64(u) * se[i]
            if u < kk[i]:
                val = x
                live = False
            elif i == 0:
                val = r - np.log(_u01_pos(state, gid))
                live = False
            else:
                y = flo[i] + _u01(state, gid) * fh[i]
                if y < np.exp(-x):
                    val = x
                    live = False
        acc += val
    return acc


@njit(cache=True, nogil=True)
def trad_normal_one(state, gid, se2, kk, flo, fh, r):
    val = 0.0
    live = True
    while live:
        u = next_u64(state, gid)
        i = np.int64(u & MASK8)
        s = np.int64(u)
        x = np.float64(s) * se2[i]
        a = u if s >= 0 else np.uint64(0) - u
        if a < kk[i]:
            val = x
            live = False
        elif i == 0:
            while live:
                xt = -np.log(_u01_pos(state, gid)) / r
                yt = -np.log(_u01_pos(state, gid))
                if yt + yt > xt * xt:
                    val = -(r + xt) if s < 0 else r + xt
                    live = False
        else:
            y = flo[i] + _u01(state, gid) * fh[i]
            if y < np.exp(-0.5 * x * x):
                val = x
                live = False
    return val


@njit(cache=True, nogil=True)
def trad_normal_one_counted(state, gid, se2, kk, flo, fh, r, cnt):
    val = 0.0
    live = True
    while live:
        u = next_u64(state, gid)
        cnt[0] += 1
        i = np.int64(u & MASK8)
        s = np.int64(u)
        x = np.float64(s) * se2[i]
        a = u if s >= 0 else np.uint64(0) - u
        if a < kk[i]:
            cnt[1] += 1
            val = x
            live = False
        elif i == 0:
            cnt[3] += 1
            while live:
                xt = -np.log(_u01_pos(state, gid)) / r
                yt = -np.log(_u01_pos(state, gid))
                if yt + yt > xt * xt:
                    val = -(r + xt) if s < 0 else r + xt
                    live = False
        else:
            cnt[2] += 1
            y = flo[i] + _u01(state, gid) * fh[i]
            if y < np.exp(-0.5 * x * x):
                val = x
                live = False
    return val


@njit(cache=True, nogil=True)
def fill_trad_normal(state, gid, se2, kk, flo, fh, r, out):
    for k in range(out.shape[0]):
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            i = np.int64(u & MASK8)
            s = np.int64(u)
            x = np.float64(s) * se2[i]
            a = u if s >= 0 else np.uint64(0) - u
            if a < kk[i]:
                val = x
                live = False
            elif i == 0:
                while live:
                    xt = -np.log(_u01_pos(state, gid)) / r
                    yt = -np.log(_u01_pos(state, gid))
                    if yt + yt > xt * xt:
                        val = -(r + xt) if s < 0 else r + xt
                        live = False
            else:
                y = flo[i] + _u01(state, gid) * fh[i]
                if y < np.exp(-0.5 * x * x):
                    val = x
                    live = False
        out[k] = val


@njit(cache=True, nogil=True)
def fill_trad_normal_counted(state, gid, se2, kk, flo, fh, r, out, cnt):
    for k in range(out.shape[0]):
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            cnt[0] += 1
            i = np.int64(u & MASK8)
            s = np.int64(u)
            x = np.float64(s) * se2[i]
            a = u if s >= 0 else np.uint64(0) - u
            if a < kk[i]:
                cnt[1] += 1
                val = x
                live = False
            elif i == 0:
                cnt[3] += 1
                while live:
                    xt = -np.log(_u01_pos(state, gid)) / r
                    yt = -np.log(_u01_pos(state, gid))
                    if yt + yt > xt * xt:
                        val = -(r + xt) if s < 0 else r + xt
                        live = False
            else:
                cnt[2] += 1
                y = flo[i] + _u01(state, gid) * fh[i]
                if y < np.exp(-0.5 * x * x):
                    val = x
                    live = False
        out[k] = val


@njit(cache=True, nogil=True)
def bench_trad_normal(state, gid, se2, kk, flo, fh, r, n):
    if gid == 0:
        s0 = state[0]
        s1 = state[1]
        s2 = state[2]
        s3 = state[3]
        acc = 0.0
        for _ in range(n):
            val = 0.0
            live = True
            while live:
                u, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                i = np.int64(u & MASK8)
                s = np.int64(u)
                x = np.float64(s) * se2[i]
                a = u if s >= 0 else np.uint64(0) - u
                if a < kk[i]:
                    val = x
                    live = False
                elif i == 0:
                    while live:
                        ua, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                        ub, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                        xt = -np.log((np.float64(ua) + 1.0) * TWO_NEG_64) / r
                        yt = -np.log((np.float64(ub) + 1.0) * TWO_NEG_64)
                        if yt + yt > xt * xt:
                            val = -(r + xt) if s < 0 else r + xt
                            live = False
                else:
                    uy, s0, s1, s2, s3 = _xstep(s0, s1, s2, s3)
                    y = flo[i] + np.float64(uy) * TWO_NEG_64 * fh[i]
                    if y < np.exp(-0.5 * x * x):
                        val = x
                        live = False
            acc += val
        state[0] = s0
        state[1] = s1
        state[2] = s2
        state[3] = s3
        return acc
    acc = 0.0
    for _ in range(n):
        val = 0.0
        live = True
        while live:
            u = next_u64(state, gid)
            i = np.int64(u & MASK8)
            s = np.int64(u)
            x = np.float64(s) * se2[i]
            a = u if s >= 0 else np.uint64(0) - u
            if a < kk[i]:
                val = x
                live = False
            elif i == 0:
                while live:
                    xt = -np.log(_u01_pos(state, gid)) / r
                    yt = -np.log(_u01_pos(state, gid))
                    if yt + yt > xt * xt:
                        val = -(r + xt) if s < 0 else r + xt
                        live = False
            else:
                y = flo[i] + _u01(state, gid) * fh[i]
                if y < np.exp(-0.5 * x * x):
                    val = x
                    live = False
        acc += val
    return acc
