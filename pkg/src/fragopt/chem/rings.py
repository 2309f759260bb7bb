"""Ring perception: smallest set of smallest rings.

Molecule-scale graphs are tiny, so the classic construction is fine:
collect the shortest cycle through every ring bond, then greedily keep
cycles that are linearly independent over GF(2) of the bond space until
the cyclomatic number is reached.  Tie-breaking is deterministic (size,
then the sorted bond tuple), which canonicalization relies on.
"""

from __future__ import annotations

from collections import deque


def sssr(n: int, adj) -> list[tuple[int, ...]]:
    """Return rings as atom-index tuples, each rotated to a canonical start."""
    n_bonds = sum(len(a) for a in adj) // 2
    n_rings = n_bonds - n + 1
    if n_rings <= 0:
        return []

    # Prune acyclic branches so BFS only walks the ring systems.
    deg = [len(adj[i]) for i in range(n)]
    alive = [True] * n
    queue = deque(i for i in range(n) if deg[i] <= 1)
    while queue:
        i = queue.popleft()
        if not alive[i] or deg[i] > 1:
            continue
        alive[i] = False
        for nbr, _ in adj[i]:
            if alive[nbr]:
                deg[nbr] -= 1
                if deg[nbr] <= 1:
                    queue.append(nbr)

    candidates = []
    seen_rings = set()
    for a in range(n):
        if not alive[a]:
            continue
        for b, bi in adj[a]:
            if b < a or not alive[b]:
                continue
            cycle = _shortest_cycle_through(a, b, bi, adj, alive)
            if cycle is None:
                continue
            key = _ring_key(cycle)
            if key not in seen_rings:
                seen_rings.add(key)
                candidates.append(cycle)

    candidates.sort(key=lambda c: (len(c), _ring_key(c)))

    bond_id = {}
    for a in range(n):
        for b, bi in adj[a]:
            bond_id[(a, b)] = bi

    chosen: list[tuple[int, ...]] = []
    basis: dict[int, int] = {}  # xor basis keyed by highest set bit
    for cycle in candidates:
        if len(chosen) == n_rings:
            break
        vec = 0
        for i, ai in enumerate(cycle):
            bj = cycle[(i + 1) % len(cycle)]
            vec |= 1 << bond_id[(ai, bj)]
        while vec:
            high = vec.bit_length() - 1
            if high not in basis:
                basis[high] = vec
                chosen.append(cycle)
                break
            vec ^= basis[high]
    return chosen


def _shortest_cycle_through(a: int, b: int, skip_bond: int, adj, alive):
    """BFS from a to b avoiding the (a,b) bond itself."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            path = []
            node = b
            while node is not None:
                path.append(node)
                node = prev[node]
            return tuple(path)
        for nbr, bi in adj[cur]:
            if bi == skip_bond or not alive[nbr] or nbr in prev:
                continue
            prev[nbr] = cur
            queue.append(nbr)
    return None


def _ring_key(cycle) -> tuple[int, ...]:
    """Rotation/direction independent identity of a cycle."""
    return tuple(sorted(cycle))
