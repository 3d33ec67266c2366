"""Finite automata over the column-word alphabet.

The submodule generated by a monomial is recognized, at the level of
standard words, by a small nondeterministic automaton: between the
generator's own column blocks one may insert whole filler columns (whose
marker index is forced by position), and inside a block one may insert
extra variable letters.  Intersecting with the standard-word language and
determinizing yields a DFA whose transfer matrix gives the bivariate
Hilbert series exactly.
"""

from .errors import ZeroModule
from .polyarith import BiPoly, FactoredRational
from .words import alphabet, encode, is_xi, tau, tau_index


class Nfa:
    """Plain NFA builder; states are 0..n-1, no epsilon edges."""

    def __init__(self, letters):
        self.alphabet = tuple(letters)
        self.n = 0
        self.starts = set()
        self.accepts = set()
        self.trans = {}

    def add_state(self):
        self.n += 1
        return self.n - 1

    def add_edge(self, src, letter, dst):
        self.trans.setdefault((src, letter), set()).add(dst)


class Dfa:
    """Partial DFA: a missing transition is an implicit dead state.

    n == 0 encodes the empty language.
    """

    def __init__(self, letters, n, start, accepts, trans):
        self.alphabet = tuple(letters)
        self.n = n
        self.start = start
        self.accepts = frozenset(accepts)
        self.trans = dict(trans)

    def step(self, state, letter):
        return self.trans.get((state, letter))


EMPTY_ACCEPTS = frozenset()


def empty_dfa(letters):
    return Dfa(letters, 0, -1, EMPTY_ACCEPTS, {})


def run_dfa(dfa, word):
    if dfa.n == 0:
        return False
    q = dfa.start
    for a in word:
        q = dfa.trans.get((q, a))
        if q is None:
            return False
    return q in dfa.accepts


def lstd_dfa(c, d):
    """DFA for the language of standard words with c colors, rank d.

    State = (highest marker index so far, zero-markers started, last color
    in the current variable run; 0 right after a marker).
    """
    letters = alphabet(c, d)
    start = (0, False, 0)
    ids = {start: 0}
    order = [start]
    trans = {}
    k = 0
    while k < len(order):
        st = order[k]
        level, zeros, lx = st
        k += 1
        for a in letters:
            if is_xi(a):
                if a < lx:
                    continue
                nxt = (level, zeros, a)
            else:
                j = tau_index(a)
                if j == 0:
                    if level != d:
                        continue
                    nxt = (d, True, 0)
                else:
                    if zeros or j not in (level, level + 1):
                        continue
                    nxt = (j, False, 0)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
            trans[(ids[st], a)] = ids[nxt]
    accepts = {i for st, i in ids.items() if st[0] == d and st[2] == 0}
    return Dfa(letters, len(order), 0, accepts, trans)


def generator_nfa(g, d):
    """NFA for the words of monomials OI-divisible by g.

    Built from g's own standard word: one hub per column block carrying the
    filler loops (any variables, plus the block's marker index), then a
    chain consuming the block's required letters, with extra-variable loops
    on every chain state.  The trailing hub loops on zero-index markers and
    accepts.  Unsorted junk the loops admit is standard-word-filtered later.
    """
    nfa = Nfa(alphabet(g.c, d))
    word = encode(g)
    blocks = []
    req = []
    for a in word:
        if is_xi(a):
            req.append(a)
        else:
            blocks.append((tuple(req), tau_index(a)))
            req = []
    xs = [a for a in nfa.alphabet if is_xi(a)]

    hub = nfa.add_state()
    nfa.starts.add(hub)
    for required, tidx in blocks:
        marker = tau(tidx)
        for x in xs:
            nfa.add_edge(hub, x, hub)
        nfa.add_edge(hub, marker, hub)
        cur = hub
        for a in required:
            nxt = nfa.add_state()
            nfa.add_edge(cur, a, nxt)
            for x in xs:
                nfa.add_edge(nxt, x, nxt)
            cur = nxt
        hub = nfa.add_state()
        nfa.add_edge(cur, marker, hub)
    for x in xs:
        nfa.add_edge(hub, x, hub)
    nfa.add_edge(hub, tau(0), hub)
    nfa.accepts.add(hub)
    return nfa


def union_nfa(nfas):
    if not nfas:
        raise ZeroModule("union of no automata")
    out = Nfa(nfas[0].alphabet)
    for m in nfas:
        if m.alphabet != out.alphabet:
            raise ValueError("alphabet mismatch in union")
        base = out.n
        out.n += m.n
        out.starts.update(base + q for q in m.starts)
        out.accepts.update(base + q for q in m.accepts)
        for (q, a), dests in m.trans.items():
            out.trans.setdefault((base + q, a), set()).update(
                base + r for r in dests)
    return out


def intersect_nfa_dfa(nfa, dfa):
    """Product automaton, reachable part only."""
    out = Nfa(nfa.alphabet)
    if dfa.n == 0:
        return out
    ids = {}
    stack = []
    for p in nfa.starts:
        pair = (p, dfa.start)
        ids[pair] = out.add_state()
        out.starts.add(ids[pair])
        stack.append(pair)
    while stack:
        p, q = stack.pop()
        src = ids[(p, q)]
        if p in nfa.accepts and q in dfa.accepts:
            out.accepts.add(src)
        for a in nfa.alphabet:
            q2 = dfa.trans.get((q, a))
            if q2 is None:
                continue
            for p2 in nfa.trans.get((p, a), ()):
                pair = (p2, q2)
                if pair not in ids:
                    ids[pair] = out.add_state()
                    stack.append(pair)
                out.add_edge(src, a, ids[pair])
    return out


def determinize(nfa):
    """Subset construction with bitmask states."""
    letters = nfa.alphabet
    move = {}
    for (q, a), dests in nfa.trans.items():
        acc = 0
        for r in dests:
            acc |= 1 << r
        move[(q, a)] = acc
    start = 0
    for q in nfa.starts:
        start |= 1 << q
    accept_mask = 0
    for q in nfa.accepts:
        accept_mask |= 1 << q

    def bits(mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    if start == 0:
        return empty_dfa(letters)
    ids = {start: 0}
    order = [start]
    trans = {}
    k = 0
    while k < len(order):
        mask = order[k]
        k += 1
        for a in letters:
            dest = 0
            for q in bits(mask):
                dest |= move.get((q, a), 0)
            if not dest:
                continue
            if dest not in ids:
                ids[dest] = len(order)
                order.append(dest)
            trans[(ids[mask], a)] = ids[dest]
    accepts = {i for m, i in ids.items() if m & accept_mask}
    return Dfa(letters, len(order), 0, accepts, trans)


def minimize(dfa):
    """Trim then Moore partition refinement (sink kept implicit)."""
    if dfa.n == 0:
        return dfa
    letters = dfa.alphabet
    fwd = {}
    back = {}
    for (q, a), r in dfa.trans.items():
        fwd.setdefault(q, []).append((a, r))
        back.setdefault(r, []).append(q)
    reach = {dfa.start}
    stack = [dfa.start]
    while stack:
        q = stack.pop()
        for _, r in fwd.get(q, ()):
            if r not in reach:
                reach.add(r)
                stack.append(r)
    co = set(dfa.accepts)
    stack = list(co)
    while stack:
        q = stack.pop()
        for p in back.get(q, ()):
            if p not in co:
                co.add(p)
                stack.append(p)
    live = reach & co
    if dfa.start not in live:
        return empty_dfa(letters)

    SINK = -1
    states = sorted(live)
    cls = {SINK: 0}
    for q in states:
        cls[q] = 2 if q in dfa.accepts else 1
    # non-accepting live states start apart from the sink: they reach an
    # accept state, the sink never does, so they can only split further
    while True:
        sigs = {}
        for q in states:
            sig = (cls[q],) + tuple(
                cls[dfa.trans[(q, a)]] if dfa.trans.get((q, a)) in live
                else 0
                for a in letters)
            sigs.setdefault(sig, []).append(q)
        new_cls = {SINK: 0}
        for i, (_, members) in enumerate(sorted(sigs.items()), start=1):
            for q in members:
                new_cls[q] = i
        if new_cls == cls:
            break
        cls = new_cls

    ids = {}
    for q in states:
        ids.setdefault(cls[q], len(ids))
    n = len(ids)
    trans = {}
    accepts = set()
    for q in states:
        me = ids[cls[q]]
        if q in dfa.accepts:
            accepts.add(me)
        for a in letters:
            r = dfa.trans.get((q, a))
            if r in live:
                trans[(me, a)] = ids[cls[r]]
    return Dfa(letters, n, ids[cls[dfa.start]], accepts, trans)


def module_dfa(c, d, gens):
    """Minimal DFA for the standard words lying in the submodule
    generated by gens (monomials of one summand of rank d)."""
    if not gens:
        return empty_dfa(alphabet(c, d))
    u = union_nfa([generator_nfa(g, d) for g in gens])
    prod = intersect_nfa_dfa(u, lstd_dfa(c, d))
    return minimize(determinize(prod))


def _default_weight(letter):
    return BiPoly.t() if is_xi(letter) else BiPoly.s()


def generating_function(dfa, weight=None):
    """Sum of weight(w) over accepted words, as an exact rational.

    Solves u_start^T (I - T)^{-1} e_accept by one fraction-free elimination
    pass on the bordered matrix; the answer is the final border entry over
    the last interior pivot.  I - T is invertible because every edge weight
    vanishes at the origin.
    """
    if weight is None:
        weight = _default_weight
    if dfa.n == 0 or not dfa.accepts:
        return FactoredRational.zero()
    n = dfa.n
    rows = {i: {} for i in range(n + 1)}
    cols = {j: set() for j in range(n + 1)}

    def put(i, j, val):
        if val.is_zero():
            rows[i].pop(j, None)
            cols[j].discard(i)
        else:
            rows[i][j] = val
            cols[j].add(i)

    one = BiPoly.one()
    for i in range(n):
        put(i, i, one)
    for (q, a), r in dfa.trans.items():
        cur = rows[q].get(r, BiPoly.zero())
        put(q, r, cur - weight(a))
    for i in dfa.accepts:
        put(i, n, one)
    put(n, dfa.start, BiPoly.const(-1))

    live_rows = set(range(n))
    live_cols = set(range(n))
    zero = BiPoly.zero()
    # rows are rescaled lazily: a row untouched by cross-elimination since
    # stage s holds stage-s minors, promoted by val*D[k]/D[s] on demand
    D = [one]
    stage = [0] * (n + 1)

    def promote(i, k):
        if stage[i] == k:
            return
        num_f, den_f = D[k], D[stage[i]]
        for jj, v in list(rows[i].items()):
            v = num_f * v
            if not den_f.is_one():
                v = v.exact_div(den_f)
            rows[i][jj] = v
        stage[i] = k

    for step in range(n):
        # cheapest nonzero pivot in the Markowitz sense, then fewest terms
        best = None
        for j in live_cols:
            col_live = [i for i in cols[j] if i in live_rows]
            for i in col_live:
                row_live = sum(1 for jj in rows[i]
                               if jj in live_cols or jj == n)
                cost = (row_live - 1) * (len(col_live) - 1)
                key = (cost, len(rows[i][j].terms))
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            raise ArithmeticError("singular interior block")
        _, pi, pj = best
        promote(pi, step)
        pivot = rows[pi][pj]
        prev = D[step]
        D.append(pivot)
        live_rows.discard(pi)
        live_cols.discard(pj)
        top_row = {jj: v for jj, v in rows[pi].items()
                   if jj in live_cols or jj == n}
        for i in [i for i in cols[pj] if i in live_rows or i == n]:
            left = rows[i].get(pj)
            if left is None:
                continue
            promote(i, step)
            left = rows[i][pj]
            support = set(rows[i])
            support.update(top_row)
            for jj in support:
                if not (jj in live_cols or jj == n):
                    continue
                val = pivot * rows[i].get(jj, zero)
                if jj in top_row:
                    val = val - left * top_row[jj]
                if not prev.is_one() and not val.is_zero():
                    val = val.exact_div(prev)
                put(i, jj, val)
            put(i, pj, zero)
            stage[i] = step + 1

    promote(n, n)
    num = rows[n].get(n, BiPoly.zero())
    den = D[n]
    if den.coeff(0, 0) < 0:
        num = -num
        den = -den
    if num.is_zero():
        return FactoredRational.zero()
    if den.is_one():
        return FactoredRational.from_poly(num)
    return FactoredRational(num, ((den, 1),))


def to_dot(dfa):
    lines = ["digraph dfa {", "  rankdir=LR;"]
    for q in range(dfa.n):
        shape = "doublecircle" if q in dfa.accepts else "circle"
        mark = " (start)" if q == dfa.start else ""
        lines.append(f'  q{q} [shape={shape}, label="{q}{mark}"];')
    grouped = {}
    for (q, a), r in dfa.trans.items():
        grouped.setdefault((q, r), []).append(a)
    from .words import letter_str

    for (q, r), labels in sorted(grouped.items()):
        text = ",".join(letter_str(a) for a in sorted(labels, reverse=True))
        lines.append(f'  q{q} -> q{r} [label="{text}"];')
    lines.append("}")
    return "\n".join(lines)
