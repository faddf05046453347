# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled equitable refinement kernel; mirrors ``hatlab._refine_py`` exactly."""

from libc.stdlib cimport malloc, free, qsort
from libc.string cimport memset

ctypedef unsigned long long u64

cdef u64 PRIME = 1099511628211ULL
cdef u64 SEED = 14695981039346656037ULL


cdef inline u64 _mix(u64 h, u64 x) nogil:
    return (h ^ x) * PRIME


cdef int _cmp_int(const void *a, const void *b) noexcept nogil:
    cdef int x = (<int*>a)[0]
    cdef int y = (<int*>b)[0]
    return (x > y) - (x < y)


def refine(int[::1] xadj, int[::1] adjncy, int[::1] lab, int[::1] pos,
           int[::1] cstart, int[::1] clen, splitters, int ncells):
    cdef int n = lab.shape[0]
    cdef int maxdeg = 0
    cdef int v, u, w, p, e, c, size, i, q, s, sz, cc, fs, fc, nfr, big
    cdef int qhead = 0, qtail = 0, ntouched, ntc, cmax, c0, same
    cdef u64 h = SEED
    if n == 0:
        return ncells, int(_mix(h, <u64>ncells))
    for v in range(n):
        if xadj[v + 1] - xadj[v] > maxdeg:
            maxdeg = xadj[v + 1] - xadj[v]
    cdef char *inq = <char*>malloc(n)
    cdef char *tmark = <char*>malloc(n)
    cdef int *queue = <int*>malloc((n + 1) * sizeof(int))
    cdef int *cnt = <int*>malloc(n * sizeof(int))
    cdef int *touched = <int*>malloc(n * sizeof(int))
    cdef int *tcells = <int*>malloc(n * sizeof(int))
    cdef int *tmp = <int*>malloc(n * sizeof(int))
    cdef int *bucket = <int*>malloc((maxdeg + 2) * sizeof(int))
    cdef int *fstart = <int*>malloc((maxdeg + 2) * sizeof(int))
    cdef int *fsize = <int*>malloc((maxdeg + 2) * sizeof(int))
    cdef int *fcount = <int*>malloc((maxdeg + 2) * sizeof(int))
    memset(inq, 0, n)
    memset(tmark, 0, n)
    memset(cnt, 0, n * sizeof(int))
    # circular queue of cell starts; each start is queued at most once
    for s in splitters:
        if not inq[s]:
            inq[s] = 1
            queue[qtail] = s
            qtail = (qtail + 1) % (n + 1)
    try:
        while qhead != qtail and ncells < n:
            w = queue[qhead]
            qhead = (qhead + 1) % (n + 1)
            inq[w] = 0
            ntouched = 0
            for p in range(w, w + clen[w]):
                v = lab[p]
                for e in range(xadj[v], xadj[v + 1]):
                    u = adjncy[e]
                    if cnt[u] == 0:
                        touched[ntouched] = u
                        ntouched += 1
                    cnt[u] += 1
            ntc = 0
            for i in range(ntouched):
                c = cstart[pos[touched[i]]]
                if not tmark[c]:
                    tmark[c] = 1
                    tcells[ntc] = c
                    ntc += 1
            qsort(tcells, ntc, sizeof(int), _cmp_int)
            for i in range(ntc):
                c = tcells[i]
                tmark[c] = 0
                size = clen[c]
                if size == 1:
                    continue
                c0 = cnt[lab[c]]
                same = 1
                cmax = c0
                for q in range(c + 1, c + size):
                    cc = cnt[lab[q]]
                    if cc != c0:
                        same = 0
                    if cc > cmax:
                        cmax = cc
                if same:
                    continue
                # counting sort of the cell by neighbor count
                for q in range(cmax + 1):
                    bucket[q] = 0
                for q in range(c, c + size):
                    bucket[cnt[lab[q]]] += 1
                nfr = 0
                s = c
                for q in range(cmax + 1):
                    if bucket[q]:
                        fstart[nfr] = s
                        fsize[nfr] = bucket[q]
                        fcount[nfr] = q
                        nfr += 1
                        sz = bucket[q]
                        bucket[q] = s
                        s += sz
                for q in range(c, c + size):
                    v = lab[q]
                    tmp[bucket[cnt[v]]] = v
                    bucket[cnt[v]] += 1
                for q in range(c, c + size):
                    lab[q] = tmp[q]
                    pos[tmp[q]] = q
                for fs in range(nfr):
                    clen[fstart[fs]] = fsize[fs]
                    for q in range(fstart[fs], fstart[fs] + fsize[fs]):
                        cstart[q] = fstart[fs]
                ncells += nfr - 1
                h = _mix(h, <u64>c)
                h = _mix(h, <u64>nfr)
                for fs in range(nfr):
                    h = _mix(h, <u64>fcount[fs])
                    h = _mix(h, <u64>fsize[fs])
                if inq[c]:
                    for fs in range(1, nfr):
                        inq[fstart[fs]] = 1
                        queue[qtail] = fstart[fs]
                        qtail = (qtail + 1) % (n + 1)
                else:
                    big = 0
                    for fs in range(1, nfr):
                        if fsize[fs] > fsize[big]:
                            big = fs
                    for fs in range(nfr):
                        if fs != big:
                            inq[fstart[fs]] = 1
                            queue[qtail] = fstart[fs]
                            qtail = (qtail + 1) % (n + 1)
            for i in range(ntouched):
                cnt[touched[i]] = 0
        h = _mix(h, <u64>ncells)
    finally:
        free(inq); free(tmark); free(queue); free(cnt); free(touched); free(tcells)
        free(tmp); free(bucket); free(fstart); free(fsize); free(fcount)
    return ncells, int(h)
