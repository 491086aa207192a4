"""Pure-Python tree-growing kernel.

Reference implementation of the CART builder; the compiled kernel in
``_core.pyx`` mirrors it draw for draw and float for float, so both
backends grow bit-identical trees from the same RNG state. Split proxies
are computed as exact integer sums divided once, in a fixed order, to
keep float comparisons reproducible.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from ..rng import Xorshift64Star


def build_tree(X: np.ndarray, y: np.ndarray, n_labels: int, state: int,
               max_features: int, min_samples_split: int, bootstrap: bool):
    """Grow one CART tree on binary features.

    Nodes are processed in creation (breadth-first) order; feature value
    0 goes to the left child, 1 to the right. Returns (feature, left,
    right, counts): feature is -1 at leaves, counts holds the label
    counts of the sample rows reaching each node.
    """
    n_rows, n_features = X.shape
    rng = Xorshift64Star(state=state)
    if bootstrap:
        idx = np.fromiter((rng.randint(n_rows) for _ in range(n_rows)),
                          dtype=np.int64, count=n_rows)
    else:
        idx = np.arange(n_rows, dtype=np.int64)

    cap = 2 * n_rows + 1  # every split sends at least one row each way
    feature = np.full(cap, -1, dtype=np.int32)
    left = np.full(cap, -1, dtype=np.int32)
    right = np.full(cap, -1, dtype=np.int32)
    counts = np.zeros((cap, n_labels), dtype=np.int64)

    node_rows = {0: idx}
    n_nodes = 1
    queue = deque([0])
    while queue:
        node = queue.popleft()
        rows = node_rows.pop(node)
        y_node = y[rows]
        cnt = np.bincount(y_node, minlength=n_labels).astype(np.int64)
        counts[node] = cnt
        n = len(rows)
        if n < min_samples_split or np.count_nonzero(cnt) <= 1:
            continue

        m = min(max_features, n_features)
        cand = rng.sample_indices(n_features, m)
        parent_proxy = int((cnt * cnt).sum()) / n

        ones = np.zeros((n_labels, m), dtype=np.int64)
        np.add.at(ones, y_node, X[rows][:, cand])
        n_ones = ones.sum(axis=0)

        best_feature = -1
        best_proxy = -1.0
        for ci, f in enumerate(cand):
            o1 = int(n_ones[ci])
            o0 = n - o1
            if o1 == 0 or o0 == 0:
                continue
            c1 = ones[:, ci]
            c0 = cnt - c1
            a0 = int((c0 * c0).sum())
            a1 = int((c1 * c1).sum())
            proxy = a0 / o0 + a1 / o1
            if proxy > best_proxy or (proxy == best_proxy and f < best_feature):
                best_proxy = proxy
                best_feature = f

        if best_feature < 0 or not best_proxy > parent_proxy:
            continue

        hot = X[rows, best_feature] == 1
        feature[node] = best_feature
        left[node] = n_nodes
        right[node] = n_nodes + 1
        node_rows[n_nodes] = rows[~hot]
        node_rows[n_nodes + 1] = rows[hot]
        queue.append(n_nodes)
        queue.append(n_nodes + 1)
        n_nodes += 2

    return (feature[:n_nodes].copy(), left[:n_nodes].copy(),
            right[:n_nodes].copy(), counts[:n_nodes].copy())
