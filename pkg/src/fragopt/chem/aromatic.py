"""Kekulization of aromatic input and Hueckel aromaticity perception.

Both forms of a ring system must land on the same internal state, so the
pipeline is one-directional: aromatic input is first kekulized (assigning
concrete single/double orders), then aromaticity is re-perceived from the
kekule structure for every molecule regardless of input style.
"""

from __future__ import annotations

from .errors import ValenceError
from .periodic import AROMATIC_OK


def kekulize(specs, bonds, adj, pi_wanted) -> list[int]:
    """Assign concrete bond orders to aromatic-flagged bonds.

    Atoms flagged in ``pi_wanted`` must each receive exactly one double
    bond, placed on an aromatic bond whose other end also wants one: a
    perfect matching problem on the aromatic subgraph.  Raises
    ``ValenceError`` when no consistent assignment exists (e.g. an
    aromatic nitrogen written without its hydrogen).
    """
    orders = [order for (_a, _b, order, _ar) in bonds]
    cand: dict[int, list[tuple[int, int]]] = {}
    for bi, (a, b, _order, arom) in enumerate(bonds):
        if arom:
            orders[bi] = 1
            if pi_wanted[a] and pi_wanted[b]:
                cand.setdefault(a, []).append((b, bi))
                cand.setdefault(b, []).append((a, bi))

    todo = sorted(i for i, w in enumerate(pi_wanted) if w)
    if not todo:
        return orders
    for i in todo:
        if i not in cand:
            raise ValenceError(f"atom {i} needs a ring double bond but has no partner")

    matched: dict[int, tuple[int, int]] = {}

    def backtrack(remaining: list[int]) -> bool:
        if not remaining:
            return True
        # Most-constrained atom first keeps the search tiny.
        remaining = sorted(
            remaining,
            key=lambda x: sum(1 for (p, _bi) in cand[x] if p not in matched),
        )
        u = remaining[0]
        rest = remaining[1:]
        for v, bi in cand[u]:
            if v in matched:
                continue
            matched[u] = (v, bi)
            matched[v] = (u, bi)
            if backtrack([x for x in rest if x != v]):
                return True
            del matched[u]
            del matched[v]
        return False

    if not backtrack(todo):
        raise ValenceError("aromatic system cannot be kekulized")
    for u, (v, bi) in matched.items():
        if u < v:
            orders[bi] = 2
    return orders


def perceive_aromaticity(specs, kek_bonds, rings, atom_in_ring, bond_index, hcounts):
    """Mark aromatic rings by per-ring Hueckel counting on the kekule graph.

    Returns per-atom and per-bond aromatic flags.  An SSSR ring is aromatic
    when every member is sp2-capable and the ring pi-electron total hits
    4n+2; atoms double-bonded to acyclic atoms contribute zero (2-pyridone
    style), lone-pair donors contribute two.
    """
    n = len(specs)
    double_to: list[list[int]] = [[] for _ in range(n)]
    triple = [False] * n
    heavy_deg = [0] * n
    for a, b, order in kek_bonds:
        heavy_deg[a] += 1
        heavy_deg[b] += 1
        if order == 2:
            double_to[a].append(b)
            double_to[b].append(a)
        elif order == 3:
            triple[a] = True
            triple[b] = True

    arom_atoms = [False] * n
    ring_flags = []
    for ring in rings:
        ring_set = set(ring)
        total = 0
        ok = True
        for i in ring:
            contrib = _pi_contribution(
                specs[i], i, double_to, triple, heavy_deg, hcounts, ring_set, atom_in_ring
            )
            if contrib is None:
                ok = False
                break
            total += contrib
        aromatic = ok and total % 4 == 2
        ring_flags.append(aromatic)
        if aromatic:
            for i in ring:
                arom_atoms[i] = True

    arom_bonds = [False] * len(kek_bonds)
    for ring, flag in zip(rings, ring_flags):
        if not flag:
            continue
        for i, ai in enumerate(ring):
            bj = ring[(i + 1) % len(ring)]
            arom_bonds[bond_index[(min(ai, bj), max(ai, bj))]] = True
    return arom_atoms, arom_bonds


def _pi_contribution(spec, i, double_to, triple, heavy_deg, hcounts, ring_set, atom_in_ring):
    """Pi electrons atom i contributes to this ring; None if sp3/incapable."""
    sym = spec.symbol
    if sym not in AROMATIC_OK:
        return None
    if triple[i] or len(double_to[i]) > 1:
        return None
    if heavy_deg[i] + hcounts[i] > 3:
        return None
    if double_to[i]:
        j = double_to[i][0]
        if j in ring_set or atom_in_ring[j]:
            return 1
        return 0  # exocyclic double to a chain atom (C=O and friends)
    if spec.charge < 0 and sym in ("C", "B"):
        return 2  # cyclopentadienyl-type anion
    if spec.charge > 0:
        if sym in ("C", "B"):
            return 0  # tropylium-type empty orbital
        if sym in ("O", "S"):
            return 2
        return None  # N+/P+ without a double bond has nothing to give
    if sym in ("N", "P", "O", "S"):
        return 2
    if sym == "B":
        return 0
    return None  # neutral carbon without a double bond is sp3 here
