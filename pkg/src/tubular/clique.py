"""Exact maximum clique by branch and bound with a greedy colouring bound."""
from __future__ import annotations

from .errors import ResourceLimit
from .limits import cap


def max_clique(adj: dict, max_nodes: int | None = None) -> list:
    """Return one maximum clique of the graph given as ``node -> set of neighbours``.

    Vertices are ordered by degree (descending), ties by node order, so the
    result is deterministic for sortable node labels.
    """
    if max_nodes is None:
        max_nodes = cap("max_clique_nodes")
    order = sorted(adj, key=lambda v: (-len(adj[v]), v))
    rank = {v: i for i, v in enumerate(order)}
    nbrs = {v: {u for u in adj[v] if u != v} for v in order}
    best: list = []
    expanded = 0

    def colour_bound(cands):
        # greedy sequential colouring; returns vertices with their colour numbers
        colours: list[set] = []
        out = []
        for v in cands:
            for k, cls in enumerate(colours):
                if not (nbrs[v] & cls):
                    cls.add(v)
                    out.append((v, k + 1))
                    break
            else:
                colours.append({v})
                out.append((v, len(colours)))
        out.sort(key=lambda vc: vc[1])
        return out

    def expand(current, cands):
        nonlocal best, expanded
        expanded += 1
        if expanded > max_nodes:
            raise ResourceLimit(f"clique search exceeded {max_nodes} nodes")
        coloured = colour_bound(cands)
        while coloured:
            v, c = coloured.pop()
            if len(current) + c <= len(best):
                return
            current.append(v)
            nxt = [u for u in cands if u in nbrs[v]]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cands = [u for u in cands if u != v]

    if order:
        expand([], order)
    return sorted(best, key=lambda v: rank[v])
