"""Vectorized numpy implementation of the link alternation count.

Same contract as the compiled kernel in ``_plcore``: for every CSR row count
how often the classification "neighbour above / below the centre" alternates
while walking the (cyclic) link once.  A neighbour ``w`` of centre ``v`` is
above when ``u[w] - u[v] > tol``, below when ``< -tol``, and ties inside the
band are broken by the secondary keys (strictly ordered, so the count is
always well defined).
"""

import numpy as np


def link_sign_changes(values, keys, centers, flat, offsets, next_idx, tol):
    counts = np.diff(offsets)
    center_rep = np.repeat(centers, counts)
    d = values[flat] - values[center_rep]
    above = (d > tol) | ((d >= -tol) & (keys[flat] > keys[center_rep]))
    alternation = above != above[next_idx]
    seg = np.repeat(np.arange(len(centers)), counts)
    return np.bincount(seg[alternation], minlength=len(centers)).astype(np.int64)
