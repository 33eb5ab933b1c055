"""Branch-and-bound enumeration core over proper surjective edge colorings.

One kernel body serves every search mode; `build_kernel` compiles it with
numba or returns the plain-Python variant, so both backends execute literally
the same statements.  The kernel owns no allocation and no policy: the driver
in `search` hands it pre-permuted edge arrays, scratch state, and a node
quota, and the kernel suspends by returning whenever the quota is hit.  All
position state lives in the passed arrays, so a suspended search resumes by
calling the kernel again with a larger quota.

State encoding, per vertex: a color bitmask, the count of still-uncolored
incident edges, and a 3-way flag (0 open, 1 dead, 2 finished-interval).
Properness makes every finished spectrum have exactly degree-many colors, so
a finished vertex is interval iff its mask span equals its degree, and a
span exceeding the degree is irrevocable at any depth.  Dead counts give the
upper bound for maximization, finished-interval counts the lower bound for
minimization.
"""

from __future__ import annotations

import functools

MODE_MAX = 0
MODE_MIN = 1
MODE_FEASIBLE = 2
MODE_COUNT = 3
MODE_LINFOREST = 4

# scalar-state slots
S_D = 0
S_USED = 1
S_DEAD = 2
S_REQDEAD = 3
S_CLOSED = 4
S_NODES = 5
S_LEAVES = 6
S_COUNT = 7
S_VIOL = 8
S_BEST = 9
S_WFOUND = 10
S_DONE = 11
S_SIZE = 12


@functools.cache
def build_kernel(use_jit: bool):
    """Build the search kernel, jitted when use_jit, else pure Python."""
    if use_jit:
        from numba import njit

        wrap = njit(cache=True, nogil=True)
    else:

        def wrap(f):
            return f

    @wrap
    def _span(mask):
        # width of [lowest set bit .. highest set bit], 0 for empty
        if mask == 0:
            return 0
        hi = 0
        m = mask
        while m:
            hi += 1
            m >>= 1
        lo = 0
        while (mask >> lo) & 1 == 0:
            lo += 1
        return hi - lo

    @wrap
    def _assign(d, c, eu, ev, deg, req, masks, cnt, left, vstate, S):
        bit = 1 << (c - 1)
        cnt[c] += 1
        if cnt[c] == 1:
            S[S_USED] += 1
        for k in range(2):
            v = eu[d] if k == 0 else ev[d]
            masks[v] |= bit
            left[v] -= 1
            if vstate[v] == 0:
                if _span(masks[v]) > deg[v]:
                    vstate[v] = 1
                    S[S_DEAD] += 1
                    if req[v] == 1:
                        S[S_REQDEAD] += 1
                elif left[v] == 0:
                    # span <= deg and popcount == deg forces span == deg
                    vstate[v] = 2
                    S[S_CLOSED] += 1

    @wrap
    def _unassign(d, c, eu, ev, deg, req, masks, cnt, left, vstate, S):
        bit = 1 << (c - 1)
        cnt[c] -= 1
        if cnt[c] == 0:
            S[S_USED] -= 1
        for k in range(2):
            v = eu[d] if k == 0 else ev[d]
            left[v] += 1
            masks[v] &= ~bit
            if vstate[v] == 2:
                vstate[v] = 0
                S[S_CLOSED] -= 1
            elif vstate[v] == 1:
                if _span(masks[v]) <= deg[v]:
                    vstate[v] = 0
                    S[S_DEAD] -= 1
                    if req[v] == 1:
                        S[S_REQDEAD] -= 1

    @wrap
    def _linear_forest_ok(eu, ev, vstate, parent, ideg):
        # at a leaf: non-dead == interval; check max degree 2 + acyclicity
        # on the subgraph induced by interval vertices
        V = parent.shape[0]
        E = eu.shape[0]
        for v in range(V):
            parent[v] = v
            ideg[v] = 0
        for e in range(E):
            u = eu[e]
            w = ev[e]
            if vstate[u] != 1 and vstate[w] != 1:
                ideg[u] += 1
                ideg[w] += 1
                if ideg[u] > 2 or ideg[w] > 2:
                    return False
                ru = u
                while parent[ru] != ru:
                    parent[ru] = parent[parent[ru]]
                    ru = parent[ru]
                rw = w
                while parent[rw] != rw:
                    parent[rw] = parent[parent[rw]]
                    rw = parent[rw]
                if ru == rw:
                    return False
                parent[ru] = rw
        return True

    @wrap
    def kernel(
        eu,
        ev,
        deg,
        t,
        mode,
        req,
        first_lo,
        first_hi,
        incumbent,
        stop_nodes,
        S,
        choice,
        masks,
        cnt,
        left,
        vstate,
        witness,
        parent,
        ideg,
    ):
        V = deg.shape[0]
        E = eu.shape[0]
        while True:
            if S[S_DONE] == 1:
                return
            if S[S_NODES] >= stop_nodes:
                return
            d = S[S_D]
            lo = first_lo if d == 0 else 1
            hi = first_hi if d == 0 else t
            c = choice[d] + 1 if choice[d] >= lo else lo
            u = eu[d]
            v = ev[d]
            placed = False
            while c <= hi:
                bit = 1 << (c - 1)
                if (masks[u] & bit) == 0 and (masks[v] & bit) == 0:
                    _assign(d, c, eu, ev, deg, req, masks, cnt, left, vstate, S)
                    prune = False
                    if t - S[S_USED] > E - (d + 1):
                        prune = True
                    elif mode == MODE_MAX:
                        bound = incumbent if incumbent > S[S_BEST] else S[S_BEST]
                        if V - S[S_DEAD] <= bound:
                            prune = True
                    elif mode == MODE_MIN:
                        bound = incumbent if incumbent < S[S_BEST] else S[S_BEST]
                        if S[S_CLOSED] >= bound:
                            prune = True
                    elif mode == MODE_FEASIBLE:
                        if S[S_REQDEAD] > 0:
                            prune = True
                    if prune:
                        _unassign(d, c, eu, ev, deg, req, masks, cnt, left, vstate, S)
                    else:
                        placed = True
                        break
                c += 1
            if placed:
                choice[d] = c
                S[S_NODES] += 1
                if d == E - 1:
                    S[S_LEAVES] += 1
                    if mode == MODE_MAX:
                        fval = V - S[S_DEAD]
                        if fval > S[S_BEST]:
                            S[S_BEST] = fval
                            for i in range(E):
                                witness[i] = choice[i]
                            S[S_WFOUND] = 1
                            if fval >= V:
                                S[S_DONE] = 1
                                return
                    elif mode == MODE_MIN:
                        fval = V - S[S_DEAD]
                        if fval < S[S_BEST]:
                            S[S_BEST] = fval
                            for i in range(E):
                                witness[i] = choice[i]
                            S[S_WFOUND] = 1
                            if fval <= 0:
                                S[S_DONE] = 1
                                return
                    elif mode == MODE_FEASIBLE:
                        S[S_BEST] = 1
                        for i in range(E):
                            witness[i] = choice[i]
                        S[S_WFOUND] = 1
                        S[S_DONE] = 1
                        return
                    elif mode == MODE_COUNT:
                        S[S_COUNT] += 1
                    else:
                        if not _linear_forest_ok(eu, ev, vstate, parent, ideg):
                            S[S_VIOL] += 1
                            for i in range(E):
                                witness[i] = choice[i]
                            S[S_WFOUND] = 1
                            S[S_DONE] = 1
                            return
                    _unassign(d, c, eu, ev, deg, req, masks, cnt, left, vstate, S)
                else:
                    S[S_D] = d + 1
                    choice[d + 1] = 0
            else:
                choice[d] = 0
                if d == 0:
                    S[S_DONE] = 1
                    return
                S[S_D] = d - 1
                _unassign(
                    d - 1, choice[d - 1], eu, ev, deg, req, masks, cnt, left, vstate, S
                )

    return kernel
