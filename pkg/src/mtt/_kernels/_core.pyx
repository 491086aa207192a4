# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tree-growing kernel; see _fallback.py for the reference.

Every RNG draw, loop order, and float expression matches the fallback,
so both backends produce bit-identical trees.
"""

import numpy as np


cdef unsigned long long GOLDEN = 0x9E3779B97F4A7C15ULL
cdef unsigned long long XS_MULT = 0x2545F4914F6CDD1DULL


cdef inline unsigned long long xs_next(unsigned long long* state) noexcept nogil:
    cdef unsigned long long x = state[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    state[0] = x
    return x * XS_MULT


cdef inline unsigned long long xs_randint(unsigned long long* state,
                                          unsigned long long n) noexcept nogil:
    return xs_next(state) % n


def build_tree(const unsigned char[:, ::1] X, const int[::1] y, int n_labels,
               unsigned long long state, int max_features,
               int min_samples_split, bint bootstrap):
    cdef Py_ssize_t n_rows = X.shape[0]
    cdef Py_ssize_t n_features = X.shape[1]
    cdef Py_ssize_t cap = 2 * n_rows + 1

    order_arr = np.empty(n_rows, dtype=np.int64)
    tmp_arr = np.empty(n_rows, dtype=np.int64)
    feature_arr = np.full(cap, -1, dtype=np.int32)
    left_arr = np.full(cap, -1, dtype=np.int32)
    right_arr = np.full(cap, -1, dtype=np.int32)
    counts_arr = np.zeros((cap, n_labels), dtype=np.int64)
    start_arr = np.empty(cap, dtype=np.int64)
    end_arr = np.empty(cap, dtype=np.int64)
    queue_arr = np.empty(cap, dtype=np.int32)
    pool_arr = np.empty(n_features, dtype=np.int32)
    cnt1_arr = np.empty(n_labels, dtype=np.int64)

    cdef long long[::1] order = order_arr
    cdef long long[::1] tmp = tmp_arr
    cdef int[::1] feature = feature_arr
    cdef int[::1] left = left_arr
    cdef int[::1] right = right_arr
    cdef long long[:, ::1] counts = counts_arr
    cdef long long[::1] node_start = start_arr
    cdef long long[::1] node_end = end_arr
    cdef int[::1] queue = queue_arr
    cdef int[::1] pool = pool_arr
    cdef long long[::1] cnt1 = cnt1_arr

    cdef int n_nodes = 1, node, best_feature, f, lab, distinct
    cdef Py_ssize_t qhead = 0, qtail = 0, i, j, p, row, split, m, ci
    cdef long long n, n1, n0, a0, a1, c0, total2
    cdef double parent_proxy, proxy, best_proxy

    if state == 0:
        state = GOLDEN

    with nogil:
        if bootstrap:
            for i in range(n_rows):
                order[i] = <long long>xs_randint(&state, <unsigned long long>n_rows)
        else:
            for i in range(n_rows):
                order[i] = i

        node_start[0] = 0
        node_end[0] = n_rows
        queue[0] = 0
        qtail = 1

        while qhead < qtail:
            node = queue[qhead]
            qhead += 1
            n = node_end[node] - node_start[node]

            for lab in range(n_labels):
                counts[node, lab] = 0
            for p in range(node_start[node], node_end[node]):
                counts[node, y[order[p]]] += 1
            distinct = 0
            for lab in range(n_labels):
                if counts[node, lab] > 0:
                    distinct += 1
            if n < min_samples_split or distinct <= 1:
                continue

            m = max_features if max_features < n_features else n_features
            for i in range(n_features):
                pool[i] = <int>i
            for i in range(m):
                j = i + <Py_ssize_t>xs_randint(&state,
                                               <unsigned long long>(n_features - i))
                pool[i], pool[j] = pool[j], pool[i]

            total2 = 0
            for lab in range(n_labels):
                total2 += counts[node, lab] * counts[node, lab]
            parent_proxy = <double>total2 / <double>n

            best_feature = -1
            best_proxy = -1.0
            for ci in range(m):
                f = pool[ci]
                for lab in range(n_labels):
                    cnt1[lab] = 0
                n1 = 0
                for p in range(node_start[node], node_end[node]):
                    row = <Py_ssize_t>order[p]
                    if X[row, f]:
                        cnt1[y[row]] += 1
                        n1 += 1
                n0 = n - n1
                if n1 == 0 or n0 == 0:
                    continue
                a0 = 0
                a1 = 0
                for lab in range(n_labels):
                    c0 = counts[node, lab] - cnt1[lab]
                    a0 += c0 * c0
                    a1 += cnt1[lab] * cnt1[lab]
                proxy = <double>a0 / <double>n0 + <double>a1 / <double>n1
                if proxy > best_proxy or (proxy == best_proxy and f < best_feature):
                    best_proxy = proxy
                    best_feature = f

            if best_feature < 0 or not best_proxy > parent_proxy:
                continue

            # stable partition: feature value 0 first, then 1
            split = node_start[node]
            for p in range(node_start[node], node_end[node]):
                row = <Py_ssize_t>order[p]
                if not X[row, best_feature]:
                    tmp[split] = row
                    split += 1
            j = split
            for p in range(node_start[node], node_end[node]):
                row = <Py_ssize_t>order[p]
                if X[row, best_feature]:
                    tmp[j] = row
                    j += 1
            for p in range(node_start[node], node_end[node]):
                order[p] = tmp[p]

            feature[node] = best_feature
            left[node] = n_nodes
            right[node] = n_nodes + 1
            node_start[n_nodes] = node_start[node]
            node_end[n_nodes] = split
            node_start[n_nodes + 1] = split
            node_end[n_nodes + 1] = node_end[node]
            queue[qtail] = n_nodes
            queue[qtail + 1] = n_nodes + 1
            qtail += 2
            n_nodes += 2

    return (feature_arr[:n_nodes].copy(), left_arr[:n_nodes].copy(),
            right_arr[:n_nodes].copy(), counts_arr[:n_nodes].copy())
