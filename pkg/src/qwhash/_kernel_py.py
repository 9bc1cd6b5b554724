"""Pure numpy walk kernel; the fallback when the compiled core is absent.

The state lives in a ``(4, cells)`` float64 array of planes
``[Re up, Im up, Re down, Im down]``. Arithmetic order here must stay
identical to ``_kernel.pyx`` so both backends produce bit-identical digests.
"""

import numpy as np


def evolve_planes(planes, bits, cos2, sin2, src_plus, src_minus):
    cur = np.array(planes, dtype=np.float64, copy=True)
    nxt = np.empty_like(cur)
    d = src_plus.shape[0]
    for bit in bits:
        c = cos2[bit]
        s = sin2[bit]
        for a in range(d):
            g = cur[:, src_plus[a]]
            h = cur[:, src_minus[a]]
            nxt[0:2] = c * g[0:2] + s * g[2:4]
            nxt[2:4] = s * h[0:2] - c * h[2:4]
            cur, nxt = nxt, cur
    return cur


def probabilities(planes):
    p = np.asarray(planes, dtype=np.float64)
    return (p[0] * p[0] + p[1] * p[1]) + (p[2] * p[2] + p[3] * p[3])
