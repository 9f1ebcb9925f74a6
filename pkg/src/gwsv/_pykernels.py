"""Pure-NumPy implementations of the hot kernels.

Same contracts as the compiled module ``gwsv._ckernels``; ``gwsv.kernels``
picks whichever is available (the environment variable GWSV_PURE_PYTHON=1
forces this module). The compiled core accumulates pair sums with
compensated (Kahan) addition; here ``np.bincount`` does plain float64
accumulation, which stays well inside the 1e-9 identity contracts at the
table sizes this package supports.
"""

import numpy as np


def mark_odd_segment(seg, start, base_primes):
    """Clear composite flags in a segment of the odd-only sieve.

    seg[i] flags the odd integer start + 2*i (start must be odd).
    base_primes: ascending odd primes covering sqrt of the segment end.
    """
    nseg = seg.shape[0]
    end = start + 2 * (nseg - 1)
    for p in base_primes:
        p = int(p)
        if p * p > end:
            break
        lo = max(p * p, start)
        m = lo + (-lo) % p          # first multiple of p >= lo
        if m % 2 == 0:              # p odd, want odd multiples only
            m += p
        if m > end:
            continue
        seg[(m - start) // 2 :: p] = 0


def spf_fill(limit):
    """Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0)."""
    spf = np.zeros(limit + 1, dtype=np.uint32)
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == 0:
            spf[p] = p
            tail = spf[p * p :: p]
            tail[tail == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    return spf


def char_divisor_table(limit, dlo, dhi):
    """out[m] = sum of chi(d) over divisors d of m with dlo <= d <= dhi.

    chi is the non-principal character mod 4, so only odd d contribute.
    """
    out = np.zeros(limit + 1, dtype=np.int64)
    dlo = max(1, int(dlo))
    dhi = min(limit, int(dhi))
    d = dlo + (dlo % 2 == 0)
    while d <= dhi:
        if d % 4 == 1:
            out[d::d] += 1
        else:
            out[d::d] -= 1
        d += 2
    return out


def divisor_count_table(limit, dlo, dhi):
    """out[m] = number of divisors d of m with dlo <= d <= dhi."""
    out = np.zeros(limit + 1, dtype=np.int64)
    dlo = max(1, int(dlo))
    dhi = min(limit, int(dhi))
    for d in range(dlo, dhi + 1):
        out[d::d] += 1
    return out


def lambda_table(limit, odd_primes):
    """out[k] = prod over odd primes p | k of (p-1)/(p-2); out[0]=out[1]=1."""
    out = np.ones(limit + 1, dtype=np.float64)
    for p in odd_primes:
        p = int(p)
        if p > limit:
            break
        out[p::p] *= (p - 1.0) / (p - 2.0)
    return out


def pair_accumulate(left, wleft, right, rlogs, limit):
    """Row sums over prime pairs: out[c][pl+pr] += wleft[c][i] * rlogs[j].

    left, right: ascending int64 arrays of primes; rlogs aligned with right;
    wleft has shape (ncols, len(left)). Pairs with pl + pr > limit are
    skipped. Works in chunks of left primes and accumulates with bincount.
    """
    ncols = wleft.shape[0]
    out = np.zeros((ncols, limit + 1), dtype=np.float64)
    nright = right.shape[0]
    if left.shape[0] == 0 or nright == 0:
        return out
    chunk = max(4, (1 << 21) // nright)
    for s in range(0, left.shape[0], chunk):
        lp = left[s : s + chunk]
        if lp[0] + right[0] > limit:
            break
        kmax = int(np.searchsorted(right, limit - int(lp[0]), side="right"))
        r = right[:kmax]
        idx = lp[:, None] + r[None, :]
        valid = idx <= limit
        flat = idx[valid]
        lw = rlogs[:kmax]
        for c in range(ncols):
            vals = (wleft[c, s : s + chunk][:, None] * lw[None, :])[valid]
            out[c] += np.bincount(flat, weights=vals, minlength=limit + 1)
    return out
