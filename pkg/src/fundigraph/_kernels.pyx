# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Output is bit-identical to ``_kernels_py``."""
from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    OPEN = 1
    CLOSE = 0
    SEP = 2


cdef inline int _cmp_seg(const int* buf, int sa, int la, int sb, int lb) noexcept nogil:
    cdef int i, m = la if la < lb else lb
    for i in range(m):
        if buf[sa + i] != buf[sb + i]:
            return -1 if buf[sa + i] < buf[sb + i] else 1
    if la != lb:
        return -1 if la < lb else 1
    return 0


cdef void _msort(int* idx, int* tmp, int lo, int hi, const int* buf,
                 const int* start, const int* length) noexcept nogil:
    # sorts idx[lo:hi] by the segment buf[start[x]:start[x]+length[x]], ties by x
    cdef int mid, i, j, k, a, b, c
    if hi - lo < 2:
        return
    mid = (lo + hi) // 2
    _msort(idx, tmp, lo, mid, buf, start, length)
    _msort(idx, tmp, mid, hi, buf, start, length)
    i = lo
    j = mid
    k = lo
    while i < mid and j < hi:
        a = idx[i]
        b = idx[j]
        c = _cmp_seg(buf, start[a], length[a], start[b], length[b])
        if c < 0 or (c == 0 and a < b):
            tmp[k] = a
            i += 1
        else:
            tmp[k] = b
            j += 1
        k += 1
    while i < mid:
        tmp[k] = idx[i]
        i += 1
        k += 1
    while j < hi:
        tmp[k] = idx[j]
        j += 1
        k += 1
    for k in range(lo, hi):
        idx[k] = tmp[k]


cdef int _least_rotation(const int* seq, int n, int* s, int* f) noexcept nogil:
    cdef int j, i, k = 0, sj
    if n == 0:
        return 0
    for j in range(n):
        s[j] = seq[j]
        s[j + n] = seq[j]
    for j in range(2 * n):
        f[j] = -1
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def least_rotation(seq):
    cdef int n = len(seq), j, r
    cdef int* a = <int*> malloc((5 * n + 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    try:
        for j in range(n):
            a[j] = seq[j]
        r = _least_rotation(a, n, a + n, a + 3 * n)
    finally:
        free(a)
    return r


def canonical_labeling(succ):
    cdef int n = len(succ)
    cdef int i, j, k, v, w, h, lo, hi, pos, vpos, top, r, c, ncomp, ell, start, cnt
    cdef int max_h = -1
    # one block for every scratch array
    cdef int* mem = <int*> malloc((30 * n + 8) * sizeof(int))
    if mem == NULL:
        raise MemoryError()
    cdef int* s = mem
    cdef int* indeg = s + n
    cdef int* peel = indeg + n
    cdef int* height = peel + n
    cdef int* on_cycle = height + n
    cdef int* cstart = on_cycle + n
    cdef int* ccount = cstart + n + 1
    cdef int* child = ccount + n
    cdef int* keybuf = child + n
    cdef int* rank = keybuf + n
    cdef int* hstart = rank + n
    cdef int* horder = hstart + n + 1
    cdef int* tmp = horder + n
    cdef int* cyc = tmp + n
    cdef int* rseq = cyc + n
    cdef int* rot_s = rseq + n
    cdef int* rot_f = rot_s + 2 * n
    cdef int* code = rot_f + 2 * n
    cdef int* visit = code + 2 * n
    cdef int* comp_cs = visit + n
    cdef int* comp_cl = comp_cs + n
    cdef int* comp_vs = comp_cl + n
    cdef int* comp_idx = comp_vs + n
    cdef int* stk_v = comp_idx + n
    cdef int* stk_j = stk_v + n
    cdef int npeel, nfill
    cdef list out
    cdef list order
    try:
        for i in range(n):
            v = succ[i]
            if v < 0 or v >= n:
                raise ValueError("successor out of range")
            s[i] = v
            indeg[i] = 0
            height[i] = 0
            on_cycle[i] = 1
            ccount[i] = 0
        for i in range(n):
            indeg[s[i]] += 1
        npeel = 0
        for i in range(n):
            if indeg[i] == 0:
                peel[npeel] = i
                npeel += 1
        i = 0
        while i < npeel:
            v = peel[i]
            i += 1
            w = s[v]
            on_cycle[v] = 0
            if height[v] + 1 > height[w]:
                height[w] = height[v] + 1
            indeg[w] -= 1
            if indeg[w] == 0:
                peel[npeel] = w
                npeel += 1

        # children in CSR form, filled in peel order
        for i in range(npeel):
            ccount[s[peel[i]]] += 1
        cstart[0] = 0
        for i in range(n):
            cstart[i + 1] = cstart[i] + ccount[i]
            ccount[i] = 0
        for i in range(npeel):
            v = peel[i]
            w = s[v]
            child[cstart[w] + ccount[w]] = v
            ccount[w] += 1

        # vertices bucketed by height
        for i in range(n):
            if height[i] > max_h:
                max_h = height[i]
        for h in range(max_h + 2):
            hstart[h] = 0
        for i in range(n):
            hstart[height[i] + 1] += 1
        for h in range(max_h + 1):
            hstart[h + 1] += hstart[h]
        for h in range(max_h + 1):
            tmp[h] = hstart[h]
        for i in range(n):
            horder[tmp[height[i]]] = i
            tmp[height[i]] += 1

        r = 0
        for h in range(max_h + 1):
            lo = hstart[h]
            hi = hstart[h + 1]
            for k in range(lo, hi):
                v = horder[k]
                # insertion sort of children by rank
                for i in range(cstart[v] + 1, cstart[v + 1]):
                    w = child[i]
                    j = i - 1
                    while j >= cstart[v] and rank[child[j]] > rank[w]:
                        child[j + 1] = child[j]
                        j -= 1
                    child[j + 1] = w
                for i in range(cstart[v], cstart[v + 1]):
                    keybuf[i] = rank[child[i]]
            _msort(horder, tmp, lo, hi, keybuf, cstart, ccount)
            for k in range(lo, hi):
                v = horder[k]
                if k > lo:
                    w = horder[k - 1]
                    if _cmp_seg(keybuf, cstart[v], ccount[v], cstart[w], ccount[w]) != 0:
                        r += 1
                rank[v] = r
            if hi > lo:
                r += 1

        # components: least rotation of cycle ranks, then bracket encoding
        for i in range(n):
            tmp[i] = 0
        pos = 0
        vpos = 0
        ncomp = 0
        for c in range(n):
            if not on_cycle[c] or tmp[c]:
                continue
            ell = 0
            v = c
            while not tmp[v]:
                tmp[v] = 1
                cyc[ell] = v
                rseq[ell] = rank[v]
                ell += 1
                v = s[v]
            start = _least_rotation(rseq, ell, rot_s, rot_f)
            comp_cs[ncomp] = pos
            comp_vs[ncomp] = vpos
            for k in range(ell):
                v = cyc[(start + k) % ell]
                code[pos] = OPEN
                pos += 1
                visit[vpos] = v
                vpos += 1
                top = 0
                stk_v[0] = v
                stk_j[0] = cstart[v]
                while top >= 0:
                    v = stk_v[top]
                    j = stk_j[top]
                    if j < cstart[v + 1]:
                        stk_j[top] = j + 1
                        w = child[j]
                        code[pos] = OPEN
                        pos += 1
                        visit[vpos] = w
                        vpos += 1
                        top += 1
                        stk_v[top] = w
                        stk_j[top] = cstart[w]
                    else:
                        code[pos] = CLOSE
                        pos += 1
                        top -= 1
            comp_cl[ncomp] = pos - comp_cs[ncomp]
            comp_idx[ncomp] = ncomp
            ncomp += 1

        _msort(comp_idx, tmp, 0, ncomp, code, comp_cs, comp_cl)
        out = []
        order = []
        for k in range(ncomp):
            c = comp_idx[k]
            if k:
                out.append(SEP)
            for i in range(comp_cs[c], comp_cs[c] + comp_cl[c]):
                out.append(code[i])
            # a component's vertex count is half its code length
            cnt = comp_cl[c] // 2
            for i in range(comp_vs[c], comp_vs[c] + cnt):
                order.append(visit[i])
    finally:
        free(mem)
    return tuple(out), order


def product_successors(sa, sb):
    cdef int na = len(sa), nb = len(sb), x, y, i
    cdef int* a = <int*> malloc((na + nb + 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    cdef int* b = a + na
    cdef list out = [0] * (na * nb)
    try:
        for i in range(na):
            a[i] = sa[i]
        for i in range(nb):
            b[i] = sb[i]
        i = 0
        for x in range(na):
            for y in range(nb):
                out[i] = a[x] * nb + b[y]
                i += 1
    finally:
        free(a)
    return out
