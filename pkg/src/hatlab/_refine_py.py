"""Pure-Python equitable refinement kernel (fallback for ``hatlab._refine``).

Both kernels must produce identical partitions and trace hashes; the trace is
an FNV-1a style fold over the split events.
"""

from __future__ import annotations

from collections import deque

MASK = (1 << 64) - 1
PRIME = 1099511628211
SEED = 14695981039346656037


def _mix(h: int, x: int) -> int:
    return ((h ^ x) * PRIME) & MASK


def refine(xadj, adjncy, lab, pos, cstart, clen, splitters, ncells: int) -> tuple[int, int]:
    """Refine the ordered partition in place to the coarsest equitable refinement.

    ``lab`` maps positions to vertices, ``pos`` is its inverse, ``cstart[p]`` is
    the first position of the cell holding position ``p`` and ``clen[c]`` the
    length of the cell starting at ``c``.  Returns (cell count, trace hash).
    """
    n = len(lab)
    xa = xadj.tolist()
    aj = adjncy.tolist()
    L = lab.tolist()
    P = pos.tolist()
    CS = cstart.tolist()
    CL = clen.tolist()
    inq = [False] * n
    queue: deque[int] = deque()
    for s in splitters:
        if not inq[s]:
            inq[s] = True
            queue.append(s)
    cnt = [0] * n
    h = SEED
    while queue and ncells < n:
        w = queue.popleft()
        inq[w] = False
        touched = []
        for p in range(w, w + CL[w]):
            v = L[p]
            for e in range(xa[v], xa[v + 1]):
                u = aj[e]
                if cnt[u] == 0:
                    touched.append(u)
                cnt[u] += 1
        for c in sorted({CS[P[u]] for u in touched}):
            size = CL[c]
            if size == 1:
                continue
            mem = L[c:c + size]
            c0 = cnt[mem[0]]
            if all(cnt[x] == c0 for x in mem):
                continue
            mem.sort(key=cnt.__getitem__)
            L[c:c + size] = mem
            frags = []
            fs, fc = c, cnt[mem[0]]
            for idx in range(1, size):
                cc = cnt[mem[idx]]
                if cc != fc:
                    frags.append((fs, c + idx - fs, fc))
                    fs, fc = c + idx, cc
            frags.append((fs, c + size - fs, fc))
            for s, sz, _ in frags:
                CL[s] = sz
                for q in range(s, s + sz):
                    CS[q] = s
            for q in range(c, c + size):
                P[L[q]] = q
            ncells += len(frags) - 1
            h = _mix(h, c)
            h = _mix(h, len(frags))
            for _, sz, cc in frags:
                h = _mix(h, cc)
                h = _mix(h, sz)
            if inq[c]:
                for s, _, _ in frags[1:]:
                    inq[s] = True
                    queue.append(s)
            else:
                big = 0
                for i in range(1, len(frags)):
                    if frags[i][1] > frags[big][1]:
                        big = i
                for i, (s, _, _) in enumerate(frags):
                    if i != big:
                        inq[s] = True
                        queue.append(s)
        for u in touched:
            cnt[u] = 0
    h = _mix(h, ncells)
    lab[:] = L
    pos[:] = P
    cstart[:] = CS
    clen[:] = CL
    return ncells, h
