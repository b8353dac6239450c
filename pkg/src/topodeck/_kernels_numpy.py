"""Pure-numpy kernels. Same contracts as :mod:`topodeck._kernels_numba`."""

import numpy as np


def compress(colors):
    _, inv = np.unique(colors, return_inverse=True)
    return inv.reshape(-1).astype(np.int64)


def refine(adj, colors):
    """Coarsest equitable refinement of ``colors`` under the multiplicity matrix ``adj``.

    Colours are renumbered ``0..k-1`` by the lexicographic order of
    ``(old colour, weighted neighbour-colour counts)``, so the result depends
    only on the coloured multigraph, never on vertex order.
    """
    cur = compress(colors)
    n = adj.shape[0]
    while True:
        k = int(cur.max()) + 1
        onehot = np.zeros((n, k), dtype=np.int64)
        onehot[np.arange(n), cur] = 1
        sig = np.empty((n, k + 1), dtype=np.int64)
        sig[:, 0] = cur
        sig[:, 1:] = adj @ onehot
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1).astype(np.int64)
        if int(new.max()) + 1 == k:
            return new
        cur = new


def encodings(mult, opens, loops, perms):
    """Row ``p`` is the encoding of the vertex order ``perms[p]``."""
    n = mult.shape[0]
    iu, ju = np.triu_indices(n, 1)
    pm = mult[perms[:, :, None], perms[:, None, :]][:, iu, ju]
    return np.concatenate([opens[perms], loops[perms], pm], axis=1)


def min_encoding(mult, opens, loops, perms):
    """Index of the permutation with the lexicographically smallest encoding (first on ties)."""
    enc = encodings(mult, opens, loops, perms)
    if enc.shape[1] == 0:
        return 0
    order = np.lexsort(enc.T[::-1])
    return int(order[0])
