# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python kernels.

Same interface and bit-identical results as ``heawood._kernels.pure``;
only the implementation differs (C arrays and typed loops instead of
Python objects).  The order cap of 32 lets every working array live on
the stack.
"""

from itertools import combinations

BACKEND = "compiled"

DEF MAXN = 32
DEF MAXARC = 192          # 2 * (3 * MAXN - 6)
DEF MAXPAIR = 256
DEF MAXWORDS = 8          # MAXN * (MAXN - 1) / 2 bits of code
DEF MAXGENS = 4096
DEF NONE = -1


# ---------------------------------------------------------------------------
# triangle check


def triangle_free(n, adj):
    """True iff the graph has no 3-cycle."""
    cdef unsigned long long rows[MAXN]
    cdef int i, v, w
    cdef unsigned long long row, low
    for i in range(n):
        rows[i] = adj[i]
    for v in range(n):
        row = rows[v] >> (v + 1)
        w = v + 1
        while row:
            if row & 1 and rows[v] & rows[w]:
                return False
            row >>= 1
            w += 1
    return True


# ---------------------------------------------------------------------------
# planarity: left-right criterion (check-only)


cdef struct LR:
    int n
    int m2
    int target[MAXARC]
    int deg[MAXN]
    int first_arc[MAXN][MAXN]
    int odeg[MAXN]
    int ordered[MAXN][MAXN]
    int height[MAXN]
    int parent_arc[MAXN]
    unsigned char oriented[MAXARC]
    int lowpt[MAXARC]
    int lowpt2[MAXARC]
    int nesting[MAXARC]
    int ref[MAXARC]
    int lowpt_arc[MAXARC]
    int stack_bottom[MAXARC]
    int S[MAXPAIR][4]
    int top


cdef void _orient_visit(LR *st, int v) noexcept:
    cdef int e = st.parent_arc[v]
    cdef int i, a, w
    for i in range(st.deg[v]):
        a = st.first_arc[v][i]
        if st.oriented[a] or st.oriented[a ^ 1]:
            continue
        st.oriented[a] = 1
        st.lowpt[a] = st.height[v]
        st.lowpt2[a] = st.height[v]
        w = st.target[a]
        if st.height[w] == NONE:
            st.parent_arc[w] = a
            st.height[w] = st.height[v] + 1
            _orient_visit(st, w)
        else:
            st.lowpt[a] = st.height[w]
        st.nesting[a] = 2 * st.lowpt[a]
        if st.lowpt2[a] < st.height[v]:  # chordal
            st.nesting[a] += 1
        if e != NONE:
            if st.lowpt[a] < st.lowpt[e]:
                st.lowpt2[e] = min(st.lowpt[e], st.lowpt2[a])
                st.lowpt[e] = st.lowpt[a]
            elif st.lowpt[a] > st.lowpt[e]:
                st.lowpt2[e] = min(st.lowpt2[e], st.lowpt[a])
            else:
                st.lowpt2[e] = min(st.lowpt2[e], st.lowpt2[a])


cdef inline int _lowest_top(LR *st) noexcept:
    cdef int *P = st.S[st.top - 1]
    if P[0] == NONE:
        return st.lowpt[P[2]]
    if P[2] == NONE:
        return st.lowpt[P[0]]
    return min(st.lowpt[P[0]], st.lowpt[P[2]])


cdef inline bint _conflicting(LR *st, int low, int high, int b) noexcept:
    return high != NONE and st.lowpt[high] > st.lowpt[b]


cdef bint _add_constraints(LR *st, int a, int e) noexcept:
    cdef int pll = NONE, plh = NONE, prl = NONE, prh = NONE
    cdef int q0, q1, q2, q3, t
    # merge return edges of a into the right interval
    while True:
        st.top -= 1
        q0 = st.S[st.top][0]
        q1 = st.S[st.top][1]
        q2 = st.S[st.top][2]
        q3 = st.S[st.top][3]
        if q0 != NONE:
            t = q0; q0 = q2; q2 = t
            t = q1; q1 = q3; q3 = t
        if q0 != NONE:
            return False
        if st.lowpt[q2] > st.lowpt[e]:
            if prl == NONE:  # topmost interval
                prh = q3
            else:
                st.ref[prl] = q3
            prl = q2
        else:  # align
            st.ref[q2] = st.lowpt_arc[e]
        if st.top == st.stack_bottom[a]:
            break
    # merge conflicting return edges of earlier siblings into the left side
    while st.top > 0 and (
        _conflicting(st, st.S[st.top - 1][0], st.S[st.top - 1][1], a)
        or _conflicting(st, st.S[st.top - 1][2], st.S[st.top - 1][3], a)
    ):
        st.top -= 1
        q0 = st.S[st.top][0]
        q1 = st.S[st.top][1]
        q2 = st.S[st.top][2]
        q3 = st.S[st.top][3]
        if _conflicting(st, q2, q3, a):
            t = q0; q0 = q2; q2 = t
            t = q1; q1 = q3; q3 = t
        if _conflicting(st, q2, q3, a):
            return False
        if prl != NONE:
            st.ref[prl] = q3
        if q2 != NONE:
            prl = q2
        if pll == NONE:  # topmost interval
            plh = q1
        else:
            st.ref[pll] = q1
        pll = q0
    if not (pll == NONE and prl == NONE):
        st.S[st.top][0] = pll
        st.S[st.top][1] = plh
        st.S[st.top][2] = prl
        st.S[st.top][3] = prh
        st.top += 1
    return True


cdef void _trim_back_edges(LR *st, int u) noexcept:
    cdef int hu = st.height[u]
    cdef int *P
    # drop entire conflict pairs whose lowest return point is u
    while st.top > 0 and _lowest_top(st) == hu:
        st.top -= 1
    if st.top > 0:
        P = st.S[st.top - 1]
        # trim left interval
        while P[1] != NONE and st.target[P[1]] == u:
            P[1] = st.ref[P[1]]
        if P[1] == NONE and P[0] != NONE:
            st.ref[P[0]] = P[2]
            P[0] = NONE
        # trim right interval
        while P[3] != NONE and st.target[P[3]] == u:
            P[3] = st.ref[P[3]]
        if P[3] == NONE and P[2] != NONE:
            st.ref[P[2]] = P[0]
            P[2] = NONE


cdef bint _test_visit(LR *st, int v) noexcept:
    cdef int e = st.parent_arc[v]
    cdef bint first = True
    cdef int i, a, w, u, hl, hr
    for i in range(st.odeg[v]):
        a = st.ordered[v][i]
        st.stack_bottom[a] = st.top
        w = st.target[a]
        if a == st.parent_arc[w]:  # tree arc
            if not _test_visit(st, w):
                return False
        else:  # back arc
            st.lowpt_arc[a] = a
            st.S[st.top][0] = NONE
            st.S[st.top][1] = NONE
            st.S[st.top][2] = a
            st.S[st.top][3] = a
            st.top += 1
        if st.lowpt[a] < st.height[v]:  # a has a return edge
            if first:
                st.lowpt_arc[e] = st.lowpt_arc[a]
            else:
                if not _add_constraints(st, a, e):
                    return False
        first = False
    if e != NONE:
        u = st.target[e ^ 1]  # source of e
        _trim_back_edges(st, u)
        if st.lowpt[e] < st.height[u]:  # e has a return edge itself
            hl = st.S[st.top - 1][1]
            hr = st.S[st.top - 1][3]
            if hl != NONE and (hr == NONE or st.lowpt[hl] > st.lowpt[hr]):
                st.ref[e] = hl
            else:
                st.ref[e] = hr
    return True


cdef bint c_planar(int n, unsigned long long *adj) noexcept:
    cdef int m = 0
    cdef int v, w, i, j, a, key, arc
    cdef unsigned long long row
    for v in range(n):
        row = adj[v]
        while row:
            m += 1
            row &= row - 1
    m //= 2
    if n < 5 or m < 9:
        return True
    if m > 3 * n - 6:
        return False
    cdef LR st
    st.n = n
    st.top = 0
    for v in range(n):
        st.deg[v] = 0
        st.odeg[v] = 0
        st.height[v] = NONE
        st.parent_arc[v] = NONE
    a = 0
    for v in range(n):
        row = adj[v] >> (v + 1)
        w = v + 1
        while row:
            if row & 1:
                st.target[a] = w       # arc a: v -> w
                st.target[a + 1] = v   # arc a+1: w -> v
                st.first_arc[v][st.deg[v]] = a
                st.deg[v] += 1
                st.first_arc[w][st.deg[w]] = a + 1
                st.deg[w] += 1
                a += 2
            row >>= 1
            w += 1
    st.m2 = a
    for i in range(st.m2):
        st.oriented[i] = 0
        st.lowpt[i] = 0
        st.lowpt2[i] = 0
        st.nesting[i] = 0
        st.ref[i] = NONE
        st.lowpt_arc[i] = NONE
        st.stack_bottom[i] = 0
    cdef int roots[MAXN]
    cdef int nroots = 0
    for v in range(n):
        if st.height[v] == NONE:
            st.height[v] = 0
            roots[nroots] = v
            nroots += 1
            _orient_visit(&st, v)
    # stable insertion sort of each vertex's oriented arcs by nesting depth
    for v in range(n):
        for i in range(st.deg[v]):
            arc = st.first_arc[v][i]
            if not st.oriented[arc]:
                continue
            key = st.nesting[arc]
            j = st.odeg[v]
            while j > 0 and st.nesting[st.ordered[v][j - 1]] > key:
                st.ordered[v][j] = st.ordered[v][j - 1]
                j -= 1
            st.ordered[v][j] = arc
            st.odeg[v] += 1
    for i in range(nroots):
        if not _test_visit(&st, roots[i]):
            return False
    return True


def planar(n, adj):
    """Exact planarity decision (left-right criterion)."""
    cdef unsigned long long rows[MAXN]
    cdef int i
    for i in range(n):
        rows[i] = adj[i]
    return bool(c_planar(n, rows))


# ---------------------------------------------------------------------------
# canonical labelling


cdef struct CN:
    int n
    int nwords
    unsigned long long adj[MAXN]
    unsigned long long best_code[MAXWORDS]
    unsigned long long first_code[MAXWORDS]
    int best_order[MAXN]
    int first_order[MAXN]
    bint have_first
    int ngens
    unsigned char gens[MAXGENS][MAXN]
    int uf[MAXN]


cdef int _uf_find(int *parent, int v) noexcept:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


cdef void _uf_union(int *parent, int a, int b) noexcept:
    cdef int ra = _uf_find(parent, a)
    cdef int rb = _uf_find(parent, b)
    cdef int t
    if ra != rb:
        if rb < ra:
            t = ra; ra = rb; rb = t
        parent[rb] = ra


cdef void c_refine(CN *st, int *lab, int *end) noexcept:
    """Equitable refinement of an ordered partition (lab order, end[i]=1
    marking the last position of a cell).  Each splitter pass splits
    every cell before the restart check, exactly like the reference
    backend (the cell order of the result depends on this)."""
    cdef bint changed = True
    cdef int n = st.n
    cdef int s, se, c, ce, i, j, v, val, size, out
    cdef unsigned long long spl
    cdef int cnt[MAXN]
    cdef int sorted_seg[MAXN]
    cdef int maxc, minc
    while changed:
        changed = False
        s = 0
        while s < n:
            se = s
            while not end[se]:
                se += 1
            spl = 0
            for i in range(s, se + 1):
                spl |= (<unsigned long long> 1) << lab[i]
            # split every cell against this splitter before restarting
            c = 0
            while c < n:
                ce = c
                while not end[ce]:
                    ce += 1
                size = ce - c + 1
                if size > 1:
                    maxc = -1
                    minc = MAXN + 1
                    for i in range(c, ce + 1):
                        v = lab[i]
                        cnt[i] = _popcount(st.adj[v] & spl)
                        if cnt[i] > maxc:
                            maxc = cnt[i]
                        if cnt[i] < minc:
                            minc = cnt[i]
                    if maxc != minc:
                        # stable counting sort of the segment, ascending
                        out = 0
                        for val in range(minc, maxc + 1):
                            for i in range(c, ce + 1):
                                if cnt[i] == val:
                                    sorted_seg[out] = lab[i]
                                    out += 1
                        # recompute boundaries while writing back
                        out = 0
                        for val in range(minc, maxc + 1):
                            j = 0
                            for i in range(c, ce + 1):
                                if cnt[i] == val:
                                    j += 1
                            if j:
                                for i in range(j):
                                    lab[c + out + i] = sorted_seg[out + i]
                                    end[c + out + i] = 0
                                end[c + out + j - 1] = 1
                                out += j
                        changed = True
                c = ce + 1
            if changed:
                break
            s = se + 1


cdef inline int _popcount(unsigned long long x) noexcept:
    cdef int c = 0
    while x:
        c += 1
        x &= x - 1
    return c


cdef void _pack_code(CN *st, int *order, unsigned long long *words) noexcept:
    cdef int n = st.n
    cdef int pos[MAXN]
    cdef unsigned long long rows[MAXN]
    cdef int i, v, w, col, row, wi, nbits
    cdef unsigned long long m, acc, bit
    for i in range(n):
        pos[order[i]] = i
    for v in range(n):
        m = st.adj[v]
        acc = 0
        w = 0
        while m:
            if m & 1:
                acc |= (<unsigned long long> 1) << pos[w]
            m >>= 1
            w += 1
        rows[pos[v]] = acc
    acc = 0
    nbits = 0
    wi = 0
    for col in range(1, n):
        for row in range(col):
            bit = rows[row] >> col & 1
            acc = acc << 1 | bit
            nbits += 1
            if nbits == 64:
                words[wi] = acc
                wi += 1
                acc = 0
                nbits = 0
    if nbits:
        words[wi] = acc << (64 - nbits)
        wi += 1
    while wi < st.nwords:
        words[wi] = 0
        wi += 1


cdef inline int _code_cmp(unsigned long long *a, unsigned long long *b, int nw) noexcept:
    cdef int i
    for i in range(nw):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef void _leaf(CN *st, int *lab) noexcept:
    cdef int n = st.n
    cdef unsigned long long code[MAXWORDS]
    cdef int sigma[MAXN]
    cdef int i
    cdef bint identity
    cdef int *ref_order
    _pack_code(st, lab, code)
    if not st.have_first:
        st.have_first = True
        for i in range(st.nwords):
            st.first_code[i] = code[i]
            st.best_code[i] = code[i]
        for i in range(n):
            st.first_order[i] = lab[i]
            st.best_order[i] = lab[i]
        return
    ref_order = NULL
    if _code_cmp(code, st.first_code, st.nwords) == 0:
        ref_order = st.first_order
    elif _code_cmp(code, st.best_code, st.nwords) == 0:
        ref_order = st.best_order
    if ref_order != NULL:
        identity = True
        for i in range(n):
            sigma[ref_order[i]] = lab[i]
        for i in range(n):
            if sigma[i] != i:
                identity = False
                break
        if not identity:
            if st.ngens < MAXGENS:
                for i in range(n):
                    st.gens[st.ngens][i] = <unsigned char> sigma[i]
                st.ngens += 1
            for i in range(n):
                _uf_union(st.uf, i, sigma[i])
    if _code_cmp(code, st.best_code, st.nwords) < 0:
        for i in range(st.nwords):
            st.best_code[i] = code[i]
        for i in range(n):
            st.best_order[i] = lab[i]


cdef void _search(CN *st, int *lab, int *end, int *fixed, int depth) noexcept:
    cdef int n = st.n
    cdef int clab[MAXN]
    cdef int cend[MAXN]
    cdef int tried[MAXN]
    cdef int luf[MAXN]
    cdef int ntried = 0
    cdef int gen_count = -1
    cdef int tc, te, i, j, k, v, g, rv
    cdef bint fixes, skip
    c_refine(st, lab, end)
    tc = 0
    while tc < n and end[tc]:
        tc += 1
    if tc == n:
        _leaf(st, lab)
        return
    # tc is the start of the first non-singleton cell
    te = tc
    while not end[te]:
        te += 1
    for i in range(tc, te + 1):
        v = lab[i]
        if ntried:
            # prune branches equivalent to an earlier one under the
            # subgroup fixing the current individualization prefix
            if gen_count != st.ngens:
                gen_count = st.ngens
                for j in range(n):
                    luf[j] = j
                for g in range(st.ngens):
                    fixes = True
                    for j in range(depth):
                        if st.gens[g][fixed[j]] != fixed[j]:
                            fixes = False
                            break
                    if fixes:
                        for j in range(n):
                            _uf_union(luf, j, st.gens[g][j])
            rv = _uf_find(luf, v)
            skip = False
            for j in range(ntried):
                if _uf_find(luf, tried[j]) == rv:
                    skip = True
                    break
            if skip:
                continue
        # individualize v at the front of its cell
        for j in range(tc):
            clab[j] = lab[j]
            cend[j] = end[j]
        clab[tc] = v
        cend[tc] = 1
        k = tc + 1
        for j in range(tc, te + 1):
            if lab[j] != v:
                clab[k] = lab[j]
                cend[k] = 0
                k += 1
        cend[te] = 1
        for j in range(te + 1, n):
            clab[j] = lab[j]
            cend[j] = end[j]
        fixed[depth] = v
        _search(st, clab, cend, fixed, depth + 1)
        tried[ntried] = v
        ntried += 1


def canon(n, adj):
    """Canonical labelling.  Returns (perm, orbits)."""
    if n == 0:
        return (), ()
    cdef CN st
    cdef int i
    cdef int lab[MAXN]
    cdef int end[MAXN]
    cdef int fixed[MAXN]
    cdef int perm[MAXN]
    st.n = n
    st.nwords = (n * (n - 1) // 2 + 63) // 64
    st.have_first = False
    st.ngens = 0
    for i in range(n):
        st.adj[i] = adj[i]
        st.uf[i] = i
        lab[i] = i
        end[i] = 0
    end[n - 1] = 1
    _search(&st, lab, end, fixed, 0)
    for i in range(n):
        perm[st.best_order[i]] = i
    return (
        tuple(perm[i] for i in range(n)),
        tuple(_uf_find(st.uf, i) for i in range(n)),
    )


def accept_child(n, adj, pos):
    """Canonical-augmentation acceptance for enumeration.

    Accept iff the newest vertex (n-1) lies in the automorphism orbit of
    the vertex at canonical position ``pos``; returns the graph6 record
    of the canonical form when accepted, else None.
    """
    cdef CN st
    cdef int i, t, pad, nchars, bitpos
    cdef int val
    cdef int lab[MAXN]
    cdef int end[MAXN]
    cdef int fixed[MAXN]
    cdef char buf[96]
    if n == 0:
        return None
    st.n = n
    st.nwords = (n * (n - 1) // 2 + 63) // 64
    st.have_first = False
    st.ngens = 0
    for i in range(n):
        st.adj[i] = adj[i]
        st.uf[i] = i
        lab[i] = i
        end[i] = 0
    end[n - 1] = 1
    _search(&st, lab, end, fixed, 0)
    if _uf_find(st.uf, st.best_order[pos]) != _uf_find(st.uf, n - 1):
        return None
    t = n * (n - 1) // 2
    pad = (6 - t % 6) % 6
    buf[0] = 63 + n
    nchars = 1
    bitpos = 0
    while bitpos < t + pad:
        val = 0
        for i in range(6):
            val <<= 1
            if bitpos < t:
                val |= (
                    st.best_code[bitpos >> 6]
                    >> (63 - (bitpos & 63))
                ) & 1
            bitpos += 1
        buf[nchars] = 63 + val
        nchars += 1
    return buf[:nchars].decode("ascii")


# ---------------------------------------------------------------------------
# n-apex search


cdef bint _planar_minus(int n, unsigned long long *adj, unsigned long long dropmask) noexcept:
    cdef unsigned long long sub[MAXN]
    cdef int pos[MAXN]
    cdef int nn = 0
    cdef int v, w
    cdef unsigned long long m, acc
    for v in range(n):
        if not dropmask >> v & 1:
            pos[v] = nn
            nn += 1
    for v in range(n):
        if dropmask >> v & 1:
            continue
        m = adj[v] & ~dropmask
        acc = 0
        w = 0
        while m:
            if m & 1:
                acc |= (<unsigned long long> 1) << pos[w]
            m >>= 1
            w += 1
        sub[pos[v]] = acc
    return c_planar(nn, sub)


def apex_witness(n, adj, k):
    """Search for a vertex set of size <= k whose deletion planarises.

    Subsets are tried in size order then lexicographically; the first hit
    (the lexicographically least witness) is returned together with the
    number of subsets examined.  Returns (None, count) after exhaustion.
    """
    cdef unsigned long long rows[MAXN]
    cdef int idx[MAXN]
    cdef int i, j, t
    cdef long checked = 0
    cdef unsigned long long dropmask
    for i in range(n):
        rows[i] = adj[i]
    for j in range(k + 1):
        if j > n:
            break
        for i in range(j):
            idx[i] = i
        while True:
            checked += 1
            dropmask = 0
            for i in range(j):
                dropmask |= (<unsigned long long> 1) << idx[i]
            if _planar_minus(n, rows, dropmask):
                return tuple(idx[i] for i in range(j)), checked
            # advance to the next lexicographic j-subset
            i = j - 1
            while i >= 0 and idx[i] == n - j + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for t in range(i + 1, j):
                idx[t] = idx[t - 1] + 1
    return None, checked
