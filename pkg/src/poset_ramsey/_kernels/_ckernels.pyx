# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; behavioral twin of ``poset_ramsey._kernels.pure``.

Same primitives, same visit order, same node accounting.  See the pure
module for the contract; divergence between the two is a bug.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport int8_t, int32_t, uint64_t

import time as _time

BACKEND_NAME = "compiled"

STATUS_NONE = 0
STATUS_FOUND = 1
STATUS_BUDGET = 2
STATUS_TIMEOUT = 3


cdef bint _consistent(int m, uint64_t *below, uint64_t *above, uint64_t *images,
                      uint64_t assigned, int e, uint64_t h) noexcept:
    cdef uint64_t be = below[e]
    cdef uint64_t ae = above[e]
    cdef uint64_t g
    cdef bint below_holds, above_holds
    cdef int f
    for f in range(m):
        if f == e or not ((assigned >> f) & 1):
            continue
        g = images[f]
        if g == h:
            return False
        below_holds = (g & h) == g
        above_holds = (h & g) == h
        if (((be >> f) & 1) != 0) != below_holds:
            return False
        if (((ae >> f) & 1) != 0) != above_holds:
            return False
    return True


cdef int _find_copy(int m, uint64_t *below, uint64_t *above,
                    uint64_t *hosts, long volume,
                    int anchor_idx, uint64_t anchor_mask,
                    uint64_t *images, int *order, long *cand) noexcept:
    """Fill ``images`` with the first embedding and return 1, else 0."""
    cdef uint64_t assigned = 0
    cdef int npos = 0, i, e, level
    cdef long c, lo, hi, mid
    if m == 0:
        return 1
    if volume < m:
        return 0
    if anchor_idx >= 0:
        lo = 0
        hi = volume
        while lo < hi:
            mid = (lo + hi) // 2
            if hosts[mid] < anchor_mask:
                lo = mid + 1
            else:
                hi = mid
        if lo >= volume or hosts[lo] != anchor_mask:
            return 0
        images[anchor_idx] = anchor_mask
        assigned |= (<uint64_t> 1) << anchor_idx
    for i in range(m):
        if i != anchor_idx:
            order[npos] = i
            npos += 1
    if npos == 0:
        return 1
    level = 0
    cand[0] = 0
    while level >= 0:
        e = order[level]
        c = cand[level]
        while c < volume and not _consistent(m, below, above, images, assigned, e, hosts[c]):
            c += 1
        if c < volume:
            images[e] = hosts[c]
            assigned |= (<uint64_t> 1) << e
            cand[level] = c + 1
            if level == npos - 1:
                return 1
            level += 1
            cand[level] = 0
        else:
            level -= 1
            if level >= 0:
                assigned &= ~((<uint64_t> 1) << order[level])
    return 0


cdef uint64_t *_mask_array(seq) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef uint64_t *arr = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = seq[i]
    return arr


def find_induced_copy(below, above, hosts, int anchor_idx=-1, anchor_mask=0):
    """First induced embedding of the target into the hosts, or None."""
    cdef int m = len(below)
    if m == 0:
        return []
    if len(hosts) < m:
        return None
    cdef uint64_t *c_below = NULL
    cdef uint64_t *c_above = NULL
    cdef uint64_t *c_hosts = NULL
    cdef uint64_t *images = NULL
    cdef int *order = NULL
    cdef long *cand = NULL
    cdef int found
    try:
        c_below = _mask_array(below)
        c_above = _mask_array(above)
        c_hosts = _mask_array(hosts)
        images = <uint64_t *> malloc(m * sizeof(uint64_t))
        order = <int *> malloc(m * sizeof(int))
        cand = <long *> malloc(m * sizeof(long))
        if images == NULL or order == NULL or cand == NULL:
            raise MemoryError()
        found = _find_copy(m, c_below, c_above, c_hosts, len(hosts),
                           anchor_idx, anchor_mask, images, order, cand)
        if not found:
            return None
        return [images[i] for i in range(m)]
    finally:
        free(c_below)
        free(c_above)
        free(c_hosts)
        free(images)
        free(order)
        free(cand)


def witness_search(int num_bits, p_below, p_above, p_max_elems,
                   q_below, q_above, int q_top,
                   perm_tables, long max_nodes, double time_limit):
    """Exhaustive coloring search: (status, witness bits, nodes visited)."""
    cdef long volume = (<long> 1) << num_bits
    cdef int pm = len(p_below)
    cdef int qm = len(q_below)
    cdef int scratch_m = max(pm, qm, 1)
    cdef int n_anchor = len(p_max_elems)
    cdef int nperm = len(perm_tables)

    cdef uint64_t *pb = NULL
    cdef uint64_t *pa = NULL
    cdef uint64_t *qb = NULL
    cdef uint64_t *qa = NULL
    cdef int *anchors = NULL
    cdef int32_t *perms = NULL
    cdef int8_t *colors = NULL
    cdef int8_t *state = NULL
    cdef uint64_t *blue = NULL
    cdef uint64_t *red = NULL
    cdef uint64_t *images = NULL
    cdef int *order = NULL
    cdef long *cand = NULL

    cdef long nblue = 0, nred = 0, nodes = 0
    cdef long v, m, base
    cdef int c, e, t, status
    cdef int8_t a, b
    cdef long u
    cdef bint ok
    cdef double deadline = 0.0
    cdef bint have_deadline = time_limit > 0
    cdef object witness_bits = 0

    if have_deadline:
        deadline = _time.monotonic() + time_limit

    try:
        pb = _mask_array(p_below)
        pa = _mask_array(p_above)
        qb = _mask_array(q_below)
        qa = _mask_array(q_above)
        anchors = <int *> malloc(max(n_anchor, 1) * sizeof(int))
        colors = <int8_t *> malloc(volume * sizeof(int8_t))
        state = <int8_t *> malloc(volume * sizeof(int8_t))
        blue = <uint64_t *> malloc(volume * sizeof(uint64_t))
        red = <uint64_t *> malloc(volume * sizeof(uint64_t))
        images = <uint64_t *> malloc(scratch_m * sizeof(uint64_t))
        order = <int *> malloc(scratch_m * sizeof(int))
        cand = <long *> malloc(scratch_m * sizeof(long))
        if (anchors == NULL or colors == NULL or state == NULL or blue == NULL
                or red == NULL or images == NULL or order == NULL or cand == NULL):
            raise MemoryError()
        for c in range(n_anchor):
            anchors[c] = p_max_elems[c]
        if nperm:
            perms = <int32_t *> malloc(nperm * volume * sizeof(int32_t))
            if perms == NULL:
                raise MemoryError()
            for t in range(nperm):
                table = perm_tables[t]
                base = t * volume
                for m in range(volume):
                    perms[base + m] = table[m]
        for v in range(volume):
            colors[v] = -1

        status = STATUS_NONE
        v = 0
        state[0] = 0
        while v >= 0:
            c = state[v]
            if c == 2:
                v -= 1
                if v >= 0:
                    if colors[v] == 1:
                        nblue -= 1
                    else:
                        nred -= 1
                    colors[v] = -1
                continue
            state[v] = c + 1
            nodes += 1
            if nodes > max_nodes:
                status = STATUS_BUDGET
                break
            if have_deadline and nodes % 1024 == 0 and _time.monotonic() > deadline:
                status = STATUS_TIMEOUT
                break
            colors[v] = <int8_t> c
            if c == 1:
                blue[nblue] = <uint64_t> v
                nblue += 1
                ok = True
                for t in range(n_anchor):
                    if _find_copy(pm, pb, pa, blue, nblue, anchors[t],
                                  <uint64_t> v, images, order, cand):
                        ok = False
                        break
            else:
                red[nred] = <uint64_t> v
                nred += 1
                ok = not _find_copy(qm, qb, qa, red, nred, q_top,
                                    <uint64_t> v, images, order, cand)
            if ok and nperm:
                for t in range(nperm):
                    base = t * volume
                    for m in range(v + 1):
                        u = perms[base + m]
                        if u > v:
                            break
                        a = colors[u]
                        b = colors[m]
                        if a != b:
                            if a < b:
                                ok = False
                            break
                    if not ok:
                        break
            if ok:
                if v == volume - 1:
                    if (not _find_copy(pm, pb, pa, blue, nblue, -1, 0,
                                       images, order, cand)
                            and not _find_copy(qm, qb, qa, red, nred, -1, 0,
                                               images, order, cand)):
                        status = STATUS_FOUND
                        for m in range(nblue):
                            # object shift: vertex ids reach 2^num_bits - 1,
                            # past any C integer width
                            witness_bits = witness_bits | ((<object> 1) << <long> blue[m])
                        break
                    if colors[v] == 1:
                        nblue -= 1
                    else:
                        nred -= 1
                    colors[v] = -1
                else:
                    v += 1
                    state[v] = 0
            else:
                if colors[v] == 1:
                    nblue -= 1
                else:
                    nred -= 1
                colors[v] = -1
        return status, witness_bits, nodes
    finally:
        free(pb)
        free(pa)
        free(qb)
        free(qa)
        free(anchors)
        free(perms)
        free(colors)
        free(state)
        free(blue)
        free(red)
        free(images)
        free(order)
        free(cand)
