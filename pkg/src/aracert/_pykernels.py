"""Pure-Python search kernels on integer bitmasks.

Vertex sets and generator supports are Python ints, so these work at any
size. ``_ckernels`` implements the same functions for inputs that fit in 64
bits and must return identical results.
"""

from .errors import BudgetExceeded


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def minimal_transversals(facets):
    """Every inclusion-minimal vertex mask meeting all masks in ``facets``.

    Branches on the uncovered facet with the fewest admissible vertices; the
    vertices tried earlier in a branch are excluded from later siblings, so
    each transversal is produced once. A partial choice is dropped as soon
    as some chosen vertex no longer owns a facet that only it covers.
    """
    facets = list(dict.fromkeys(facets))
    if not facets:
        return [0]
    out = []

    def owns_all(chosen):
        owned = 0
        for f in facets:
            c = f & chosen
            if c and not c & (c - 1):
                owned |= c
        return owned == chosen

    def rec(chosen, excluded):
        pick = None
        size = 0
        for f in facets:
            if f & chosen:
                continue
            avail = f & ~excluded
            if not avail:
                return
            c = avail.bit_count()
            if pick is None or c < size:
                pick, size = avail, c
        if pick is None:
            out.append(chosen)
            return
        for v in _bits(pick):
            bit = 1 << v
            new = chosen | bit
            if owns_all(new):
                rec(new, excluded)
            excluded |= bit

    rec(0, 0)
    return out


def max_admissible(gens, budget):
    """Longest admissible symbol for the generator masks ``gens`` in this order.

    Symbols are grown right to left: the last index first, then smaller
    indices are prepended. Prepending ``h`` to a suffix with lcm ``L`` is
    allowed when no ``u_q`` with ``q < h`` divides ``L * u_h``; once refused a
    candidate stays refused deeper down because the lcm only grows, which
    gives the pruning bound. Returns ``(length, symbol, nodes)`` where
    ``symbol`` is the lexicographically least longest one (0-based indices).
    """
    mu = len(gens)
    if mu == 0:
        return 0, (), 0
    prefix = [gens[:h] for h in range(mu)]

    def ok(h, M):
        inv = ~M
        for g in prefix[h]:
            if not g & inv:
                return False
        return True

    state = {"nodes": 0, "len": 0, "best": None}

    def dfs(sym, L, cand_in):
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise BudgetExceeded(f"admissible-symbol search exceeded {budget} nodes", state["nodes"])
        length = len(sym)
        if length > state["len"] or (length == state["len"] and sym < state["best"]):
            state["len"], state["best"] = length, sym
        cand = 0
        for h in _bits(cand_in):
            if ok(h, L | gens[h]):
                cand |= 1 << h
        if length + cand.bit_count() < state["len"]:
            return
        for h in sorted(_bits(cand), reverse=True):
            child = cand & ((1 << h) - 1)
            if length + 1 + child.bit_count() < state["len"]:
                break
            dfs((h,) + sym, L | gens[h], child)

    for last in range(mu - 1, -1, -1):
        if last + 1 < state["len"]:
            break
        cand_in = (1 << last) - 1 if ok(last, gens[last]) else 0
        dfs((last,), gens[last], cand_in)
    return state["len"], state["best"], state["nodes"]


def admissible_symbols(gens, cap_nodes=None):
    """All admissible symbols as increasing index tuples (unsorted)."""
    mu = len(gens)
    out = []

    def ok(h, M):
        inv = ~M
        return all(g & inv for g in gens[:h])

    def dfs(sym, L, cand_in):
        out.append(sym)
        if cap_nodes is not None and len(out) > cap_nodes:
            raise BudgetExceeded(f"more than {cap_nodes} admissible symbols", len(out))
        for h in _bits(cand_in):
            if ok(h, L | gens[h]):
                dfs((h,) + sym, L | gens[h], cand_in & ((1 << h) - 1))

    for last in range(mu):
        dfs((last,), gens[last], (1 << last) - 1 if ok(last, gens[last]) else 0)
    return out
