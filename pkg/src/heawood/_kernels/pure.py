"""Pure-Python reference kernels.

These are the hot primitives the rest of the package is built on.  A
compiled twin (``_speed``) implements the same interface; the package
selects one at import time.  Everything here works on the raw graph
representation (order ``n`` plus a tuple of adjacency bitmasks) so both
backends stay interchangeable.
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "pure"

# ---------------------------------------------------------------------------
# small helpers


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def triangle_free(n, adj):
    """True iff the graph has no 3-cycle."""
    for v in range(n):
        row = adj[v] >> (v + 1)
        while row:
            low = row & -row
            w = v + 1 + low.bit_length() - 1
            if adj[v] & adj[w]:
                return False
            row ^= low
    return True


# ---------------------------------------------------------------------------
# planarity: left-right (de Fraysseix / Rosenstiehl) criterion
#
# Check-only variant of the LR algorithm: orient the graph by DFS computing
# lowpoints and nesting order, then test whether the back edges can be
# two-coloured consistently using a stack of conflict pairs.

_NONE = -1


class _LRState:
    __slots__ = (
        "n", "target", "first_arc", "next_arc",
        "height", "parent_arc",
        "oriented", "lowpt", "lowpt2", "nesting",
        "ordered", "ref", "lowpt_arc", "stack_bottom", "S",
    )

    def __init__(self, n, adj):
        self.n = n
        # arc arrays; twin of arc a is a ^ 1
        target = []
        heads = [[] for _ in range(n)]
        for v in range(n):
            row = adj[v] >> (v + 1)
            for off in _bits(row):
                w = v + 1 + off
                a = len(target)
                target.append(w)       # arc a: v -> w
                target.append(v)       # arc a+1: w -> v
                heads[v].append(a)
                heads[w].append(a + 1)
        self.target = target
        self.first_arc = heads
        m2 = len(target)
        self.height = [_NONE] * n
        self.parent_arc = [_NONE] * n
        self.oriented = [False] * m2
        self.lowpt = [0] * m2
        self.lowpt2 = [0] * m2
        self.nesting = [0] * m2
        self.ordered = [[] for _ in range(n)]
        self.ref = [_NONE] * m2
        self.lowpt_arc = [_NONE] * m2
        self.stack_bottom = [0] * m2
        self.S = []  # conflict pairs: [L.low, L.high, R.low, R.high]


def _dfs_orient(st, root):
    # plain recursion is fine: depth is bounded by the order cap (32)
    def visit(v):
        e = st.parent_arc[v]
        for a in st.first_arc[v]:
            if st.oriented[a] or st.oriented[a ^ 1]:
                continue
            st.oriented[a] = True
            st.lowpt[a] = st.height[v]
            st.lowpt2[a] = st.height[v]
            w = st.target[a]
            if st.height[w] == _NONE:
                st.parent_arc[w] = a
                st.height[w] = st.height[v] + 1
                visit(w)
            else:
                st.lowpt[a] = st.height[w]
            st.nesting[a] = 2 * st.lowpt[a]
            if st.lowpt2[a] < st.height[v]:  # chordal
                st.nesting[a] += 1
            if e != _NONE:
                if st.lowpt[a] < st.lowpt[e]:
                    st.lowpt2[e] = min(st.lowpt[e], st.lowpt2[a])
                    st.lowpt[e] = st.lowpt[a]
                elif st.lowpt[a] > st.lowpt[e]:
                    st.lowpt2[e] = min(st.lowpt2[e], st.lowpt[a])
                else:
                    st.lowpt2[e] = min(st.lowpt2[e], st.lowpt2[a])

    visit(root)


def _lowest(st, P):
    ll, lh, rl, rh = P
    if ll == _NONE:
        return st.lowpt[rl]
    if rl == _NONE:
        return st.lowpt[ll]
    return min(st.lowpt[ll], st.lowpt[rl])


def _conflicting(st, low, high, b):
    return high != _NONE and st.lowpt[high] > st.lowpt[b]


def _add_constraints(st, a, e):
    pll = plh = prl = prh = _NONE
    # merge return edges of a into the right interval
    while True:
        Q = st.S.pop()
        if Q[0] != _NONE:
            Q[0], Q[1], Q[2], Q[3] = Q[2], Q[3], Q[0], Q[1]
        if Q[0] != _NONE:
            return False
        if st.lowpt[Q[2]] > st.lowpt[e]:
            if prl == _NONE:  # topmost interval
                prh = Q[3]
            else:
                st.ref[prl] = Q[3]
            prl = Q[2]
        else:  # align
            st.ref[Q[2]] = st.lowpt_arc[e]
        if len(st.S) == st.stack_bottom[a]:
            break
    # merge conflicting return edges of earlier siblings into the left side
    while st.S and (
        _conflicting(st, st.S[-1][0], st.S[-1][1], a)
        or _conflicting(st, st.S[-1][2], st.S[-1][3], a)
    ):
        Q = st.S.pop()
        if _conflicting(st, Q[2], Q[3], a):
            Q[0], Q[1], Q[2], Q[3] = Q[2], Q[3], Q[0], Q[1]
        if _conflicting(st, Q[2], Q[3], a):
            return False
        if prl != _NONE:
            st.ref[prl] = Q[3]
        if Q[2] != _NONE:
            prl = Q[2]
        if pll == _NONE:  # topmost interval
            plh = Q[1]
        else:
            st.ref[pll] = Q[1]
        pll = Q[0]
    if not (pll == _NONE and prl == _NONE):
        st.S.append([pll, plh, prl, prh])
    return True


def _trim_back_edges(st, u):
    hu = st.height[u]
    # drop entire conflict pairs whose lowest return point is u
    # (side bookkeeping is only needed for embeddings, not for the check)
    while st.S and _lowest(st, st.S[-1]) == hu:
        st.S.pop()
    if st.S:
        P = st.S.pop()
        # trim left interval
        while P[1] != _NONE and st.target[P[1]] == u:
            P[1] = st.ref[P[1]]
        if P[1] == _NONE and P[0] != _NONE:
            st.ref[P[0]] = P[2]
            P[0] = _NONE
        # trim right interval
        while P[3] != _NONE and st.target[P[3]] == u:
            P[3] = st.ref[P[3]]
        if P[3] == _NONE and P[2] != _NONE:
            st.ref[P[2]] = P[0]
            P[2] = _NONE
        st.S.append(P)


def _dfs_test(st, root):
    def visit(v):
        e = st.parent_arc[v]
        first = True
        for a in st.ordered[v]:
            st.stack_bottom[a] = len(st.S)
            w = st.target[a]
            if a == st.parent_arc[w]:  # tree arc
                if not visit(w):
                    return False
            else:  # back arc
                st.lowpt_arc[a] = a
                st.S.append([_NONE, _NONE, a, a])
            if st.lowpt[a] < st.height[v]:  # a has a return edge
                if first:
                    st.lowpt_arc[e] = st.lowpt_arc[a]
                else:
                    if not _add_constraints(st, a, e):
                        return False
            first = False
        if e != _NONE:
            u = st.target[e ^ 1]  # source of e
            _trim_back_edges(st, u)
            if st.lowpt[e] < st.height[u]:  # e has return edge itself
                hl = st.S[-1][1]
                hr = st.S[-1][3]
                if hl != _NONE and (hr == _NONE or st.lowpt[hl] > st.lowpt[hr]):
                    st.ref[e] = hl
                else:
                    st.ref[e] = hr
        return True

    return visit(root)


def planar(n, adj):
    """Exact planarity decision (left-right criterion)."""
    m = sum(r.bit_count() for r in adj) // 2
    if n < 5 or m < 9:
        return True
    if m > 3 * n - 6:
        return False
    st = _LRState(n, adj)
    roots = []
    for v in range(n):
        if st.height[v] == _NONE:
            st.height[v] = 0
            roots.append(v)
            _dfs_orient(st, v)
    for v in range(n):
        st.ordered[v] = sorted(
            (a for a in st.first_arc[v] if st.oriented[a]),
            key=lambda a: st.nesting[a],
        )
    for v in roots:
        if not _dfs_test(st, v):
            return False
    return True


# ---------------------------------------------------------------------------
# canonical labelling: equitable refinement + individualization with
# automorphism pruning.  canon() returns (perm, orbits) where perm[v] is the
# canonical position of v and orbits[v] is the least vertex in v's orbit
# under the full automorphism group.  The canonical form minimises the
# graph6 bit sequence over the refinement tree's leaves, so equal keys <=>
# isomorphic and the key is the least graph6 encoding the search can reach.


def _refine(adj, cells):
    """Equitable refinement of an ordered partition. Deterministic."""
    changed = True
    while changed:
        changed = False
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        for splitter in masks:
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) > 1:
                    changed = True
                    for k in sorted(groups):
                        new_cells.append(groups[k])
                else:
                    new_cells.append(cell)
            cells = new_cells
            if changed:
                break
    return cells


def _g6_code(n, adj, order):
    """Adjacency bits of the relabelled graph in graph6 bit order, packed
    into one integer with the first bit most significant."""
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * n
    for v in range(n):
        r = 0
        m = adj[v]
        while m:
            low = m & -m
            r |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rows[pos[v]] = r
    code = 0
    for col in range(1, n):
        for row in range(col):
            code = code << 1 | (rows[row] >> col & 1)
    return code, rows


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, v):
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def canon(n, adj):
    """Canonical labelling.  Returns (perm, orbits)."""
    if n == 0:
        return (), ()
    state = {
        "best_code": None,
        "best_order": None,
        "first_code": None,
        "first_order": None,
        "gens": [],
    }
    global_uf = _UnionFind(n)

    def leaf(cells):
        order = [c[0] for c in cells]
        code, _rows = _g6_code(n, adj, order)
        if state["first_code"] is None:
            state["first_code"] = code
            state["first_order"] = order
            state["best_code"] = code
            state["best_order"] = order
            return
        for ref_code, ref_order in (
            (state["first_code"], state["first_order"]),
            (state["best_code"], state["best_order"]),
        ):
            if code == ref_code:
                sigma = [0] * n
                for i in range(n):
                    sigma[ref_order[i]] = order[i]
                if sigma != list(range(n)):
                    state["gens"].append(tuple(sigma))
                    for v in range(n):
                        global_uf.union(v, sigma[v])
                break
        if code < state["best_code"]:
            state["best_code"] = code
            state["best_order"] = order

    def search(cells, fixed):
        cells = _refine(adj, cells)
        tc = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                tc = i
                break
        if tc == -1:
            leaf(cells)
            return
        cell = cells[tc]
        tried = []
        gen_count = 0
        local = None
        for v in cell:
            # prune branches equivalent to an earlier one under the
            # subgroup fixing the current individualization prefix
            if tried:
                if local is None or gen_count != len(state["gens"]):
                    gen_count = len(state["gens"])
                    local = _UnionFind(n)
                    for g in state["gens"]:
                        if all(g[x] == x for x in fixed):
                            for x in range(n):
                                local.union(x, g[x])
                if any(local.find(v) == local.find(t) for t in tried):
                    continue
            child = cells[:tc] + [[v], [w for w in cell if w != v]] + cells[tc + 1 :]
            search(child, fixed + [v])
            tried.append(v)

    search([list(range(n))], [])
    order = state["best_order"]
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    orbits = tuple(global_uf.find(v) for v in range(n))
    return tuple(perm), orbits


def accept_child(n, adj, pos):
    """Canonical-augmentation acceptance for enumeration.

    Accept iff the newest vertex (n-1) lies in the automorphism orbit of
    the vertex at canonical position ``pos``; returns the graph6 record
    of the canonical form when accepted, else None.
    """
    perm, orbits = canon(n, adj)
    order = [0] * n
    for v, p in enumerate(perm):
        order[p] = v
    if orbits[order[pos]] != orbits[n - 1]:
        return None
    code, _rows = _g6_code(n, adj, order)
    t = n * (n - 1) // 2
    pad = -t % 6
    code <<= pad
    chars = [chr(63 + n)]
    for shift in range(t + pad - 6, -1, -6):
        chars.append(chr(63 + (code >> shift & 63)))
    return "".join(chars)


# ---------------------------------------------------------------------------
# n-apex search


def _delete_mask(n, adj, dropmask):
    keep = [v for v in range(n) if not dropmask >> v & 1]
    pos = [0] * n
    for i, v in enumerate(keep):
        pos[v] = i
    out = []
    for v in keep:
        r = 0
        m = adj[v] & ~dropmask
        while m:
            low = m & -m
            r |= 1 << pos[low.bit_length() - 1]
            m ^= low
        out.append(r)
    return len(keep), tuple(out)


def apex_witness(n, adj, k):
    """Search for a vertex set of size <= k whose deletion planarises.

    Subsets are tried in size order then lexicographically; the first hit
    (the lexicographically least witness) is returned together with the
    number of subsets examined.  Returns (None, count) after exhaustion.
    """
    checked = 0
    for j in range(k + 1):
        for combo in combinations(range(n), j):
            checked += 1
            dropmask = 0
            for v in combo:
                dropmask |= 1 << v
            nn, sub = _delete_mask(n, adj, dropmask)
            if planar(nn, sub):
                return combo, checked
    return None, checked
