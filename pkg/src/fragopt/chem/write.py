"""SMILES writer driven by an externally supplied atom ordering.

``write_with_ranks`` emits a deterministic string for a fixed rank vector;
the canonicalizer picks the ranks, tests feed in random ones to fuzz
round-tripping.  Aromatic rings are written in lowercase form, everything
else in kekule form, so parse(write(m)) reproduces the perceived graph
exactly.
"""

from __future__ import annotations

from .mol import Atom, Molecule
from .periodic import allowed_valences


def write_with_ranks(mol: Molecule, ranks) -> str:
    n = mol.n_atoms
    start = min(range(n), key=lambda i: ranks[i])

    # First pass: spanning DFS in rank order, recording tree children and
    # ring-closure (back) edges per atom.
    parent = [-1] * n
    parent_bond = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    closures: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (other, bond)
    visited = [False] * n
    order_pos = [0] * n
    stack = [start]
    visited[start] = True
    counter = 0
    while stack:
        cur = stack.pop()
        order_pos[cur] = counter
        counter += 1
        nbrs = sorted(mol.neighbors(cur), key=lambda nb: ranks[nb[0]])
        for nbr, bi in nbrs:
            if not visited[nbr]:
                visited[nbr] = True
                parent[nbr] = cur
                parent_bond[nbr] = bi
                children[cur].append(nbr)
        # LIFO stack: push in reverse so lowest-rank child is emitted first
        for nbr in reversed(children[cur]):
            stack.append(nbr)

    seen_bonds = set()
    for a in range(n):
        for nbr, bi in sorted(mol.neighbors(a), key=lambda nb: ranks[nb[0]]):
            if parent[nbr] == a and parent_bond[nbr] == bi:
                continue
            if parent[a] == nbr and parent_bond[a] == bi:
                continue
            if bi in seen_bonds:
                continue
            seen_bonds.add(bi)
            first, second = (a, nbr) if order_pos[a] < order_pos[nbr] else (nbr, a)
            closures[first].append((second, bi))
            closures[second].append((first, bi))

    # Second pass: emit text.  Ring-closure digits are allocated at the
    # first endpoint and freed when the partner closes them.
    digit_of: dict[int, int] = {}
    free_digits = list(range(99, 0, -1))
    out: list[str] = []

    def bond_char(bi: int) -> str:
        bond = mol.bonds[bi]
        if bond.aromatic:
            return ""
        if bond.order == 2:
            return "="
        if bond.order == 3:
            return "#"
        if mol.atoms[bond.a].aromatic and mol.atoms[bond.b].aromatic:
            return "-"  # single bond between aromatic atoms must be explicit
        return ""

    def emit(a: int) -> None:
        out.append(_atom_text(mol, a))
        for other, bi in sorted(closures[a], key=lambda c: order_pos[c[0]]):
            if bi not in digit_of:
                digit_of[bi] = free_digits.pop()
                out.append(bond_char(bi) + _digit_text(digit_of[bi]))
            else:
                d = digit_of.pop(bi)
                free_digits.append(d)
                out.append(bond_char(bi) + _digit_text(d))
        kids = children[a]
        for k, child in enumerate(kids):
            last = k == len(kids) - 1
            if not last:
                out.append("(")
            out.append(bond_char(parent_bond[child]))
            emit(child)
            if not last:
                out.append(")")

    emit(start)
    return "".join(out)


def _digit_text(d: int) -> str:
    return str(d) if d <= 9 else f"%{d:02d}"


def _atom_text(mol: Molecule, i: int) -> str:
    atom = mol.atoms[i]
    sym = atom.symbol.lower() if atom.aromatic else atom.symbol
    if atom.is_dummy:
        return f"[{atom.isotope}*]" if atom.isotope else "*"
    needs_bracket = (
        atom.charge != 0
        or atom.isotope != 0
        or atom.hcount != _reparse_hcount(mol, i)
    )
    if not needs_bracket:
        return sym
    parts = ["["]
    if atom.isotope:
        parts.append(str(atom.isotope))
    parts.append(sym)
    if atom.hcount == 1:
        parts.append("H")
    elif atom.hcount > 1:
        parts.append(f"H{atom.hcount}")
    if atom.charge:
        mag = abs(atom.charge)
        sign = "+" if atom.charge > 0 else "-"
        parts.append(sign if mag == 1 else f"{sign}{mag}")
    parts.append("]")
    return "".join(parts)


def _reparse_hcount(mol: Molecule, i: int) -> int:
    """Hydrogens a bare (bracketless) atom token would pick up on reparse."""
    atom: Atom = mol.atoms[i]
    allowed = allowed_valences(atom.symbol, 0)
    if not allowed:
        return -1
    if atom.aromatic:
        sigma = 0
        for _nbr, bi in mol.neighbors(i):
            bond = mol.bonds[bi]
            sigma += 1 if bond.aromatic else bond.order
        room = allowed[0] - sigma
        if room >= 1:
            room -= 1  # the ring double bond the parser will assign
        return max(room, -1)
    sigma = sum(mol.bonds[bi].order for _nbr, bi in mol.neighbors(i))
    fill = next((v for v in allowed if v >= sigma), None)
    if fill is None:
        return -1
    return fill - sigma
