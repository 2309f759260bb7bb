"""Molecular graph with perception baked in at construction time.

A ``Molecule`` is immutable: every constructor path funnels through
``Molecule.from_graph`` which resolves implicit hydrogens, finds rings,
kekulizes aromatic input, re-perceives aromaticity, and checks valences.
Anything that survives construction is internally consistent, so downstream
code never re-validates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import MultiComponentError, ValenceError
from .periodic import (
    AROMATIC_OK,
    ATOMIC_MASS,
    ATOMIC_NUMBER,
    ORGANIC_SUBSET,
    allowed_valences,
)


@dataclass(frozen=True)
class Atom:
    """One heavy (or dummy ``*``) atom; hydrogens are implicit counts."""

    symbol: str
    charge: int = 0
    hcount: int = 0
    aromatic: bool = False
    isotope: int = 0  # doubles as the attachment rule label on dummies

    @property
    def is_dummy(self) -> bool:
        return self.symbol == "*"


@dataclass(frozen=True)
class Bond:
    a: int
    b: int
    order: int  # kekule order: 1, 2 or 3
    aromatic: bool = False

    def other(self, idx: int) -> int:
        return self.b if idx == self.a else self.a


@dataclass(frozen=True)
class AtomSpec:
    """Pre-perception atom description, as produced by the parser.

    ``hcount`` of ``None`` means "fill implicit hydrogens from the valence
    table"; bracket atoms always carry an explicit count.
    """

    symbol: str
    charge: int = 0
    hcount: int | None = None
    aromatic: bool = False
    isotope: int = 0
    explicit_h: bool = False


class Molecule:
    """Immutable molecular graph with rings and aromaticity perceived."""

    __slots__ = (
        "atoms",
        "bonds",
        "_adj",
        "rings",
        "_atom_in_ring",
        "_bond_in_ring",
        "_canonical",
    )

    def __init__(self, atoms, bonds, adj, rings, atom_in_ring, bond_in_ring):
        self.atoms: tuple[Atom, ...] = atoms
        self.bonds: tuple[Bond, ...] = bonds
        self._adj: tuple[tuple[tuple[int, int], ...], ...] = adj
        self.rings: tuple[tuple[int, ...], ...] = rings
        self._atom_in_ring: tuple[bool, ...] = atom_in_ring
        self._bond_in_ring: tuple[bool, ...] = bond_in_ring
        self._canonical: str | None = None

    # -- construction ---------------------------------------------------

    @classmethod
    def from_graph(cls, specs: list[AtomSpec], bonds: list[tuple[int, int, int, bool]]) -> "Molecule":
        """Build, perceive, and validate a molecule.

        ``bonds`` entries are ``(a, b, order, aromatic_flag)``.  Raises
        ``ValenceError`` for valence or kekulization failures and
        ``MultiComponentError`` for disconnected graphs.
        """
        from .aromatic import kekulize, perceive_aromaticity
        from .rings import sssr

        n = len(specs)
        if n == 0:
            raise ValenceError("empty molecule")
        seen = set()
        for a, b, order, _ in bonds:
            if a == b:
                raise ValenceError(f"self-bond on atom {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValenceError(f"bond ({a},{b}) out of range")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValenceError(f"duplicate bond ({a},{b})")
            seen.add(key)

        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for bi, (a, b, order, arom) in enumerate(bonds):
            if arom and not (specs[a].aromatic and specs[b].aromatic):
                raise ValenceError(f"aromatic bond ({a},{b}) on non-aromatic atom")
            adj[a].append((b, bi))
            adj[b].append((a, bi))

        _check_connected(n, adj)

        # Implicit hydrogens and the per-atom "needs a pi bond" flags that
        # drive kekulization of aromatic input.
        hcounts, pi_wanted = _assign_hydrogens(specs, bonds, adj)

        rings = sssr(n, adj)
        atom_in_ring = [False] * n
        bond_in_ring = [False] * len(bonds)
        bond_index = {}
        for bi, (a, b, *_rest) in enumerate(bonds):
            bond_index[(min(a, b), max(a, b))] = bi
        for ring in rings:
            for i, ai in enumerate(ring):
                atom_in_ring[ai] = True
                bj = ring[(i + 1) % len(ring)]
                bond_in_ring[bond_index[(min(ai, bj), max(ai, bj))]] = True

        for i, spec in enumerate(specs):
            if spec.aromatic and not atom_in_ring[i]:
                raise ValenceError(f"aromatic atom {i} ({spec.symbol}) outside any ring")
        for bi, (a, b, order, arom) in enumerate(bonds):
            if arom and not bond_in_ring[bi]:
                raise ValenceError(f"aromatic bond ({a},{b}) outside any ring")

        orders = kekulize(specs, bonds, adj, pi_wanted)

        kek_bonds = [(a, b, orders[bi]) for bi, (a, b, _o, _ar) in enumerate(bonds)]
        arom_atoms, arom_bonds = perceive_aromaticity(
            specs, kek_bonds, rings, atom_in_ring, bond_index, hcounts
        )

        atoms = tuple(
            Atom(s.symbol, s.charge, hcounts[i], arom_atoms[i], s.isotope)
            for i, s in enumerate(specs)
        )
        out_bonds = tuple(
            Bond(a, b, orders[bi], arom_bonds[bi]) for bi, (a, b, _o, _ar) in enumerate(bonds)
        )

        _check_valences(atoms, out_bonds, adj, specs)

        return cls(
            atoms,
            out_bonds,
            tuple(tuple(nb) for nb in adj),
            tuple(tuple(r) for r in rings),
            tuple(atom_in_ring),
            tuple(bond_in_ring),
        )

    # -- graph access ---------------------------------------------------

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    def neighbors(self, i: int) -> tuple[tuple[int, int], ...]:
        """Pairs of (neighbor atom index, bond index)."""
        return self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def atom_in_ring(self, i: int) -> bool:
        return self._atom_in_ring[i]

    def bond_in_ring(self, bi: int) -> bool:
        return self._bond_in_ring[bi]

    def bond_between(self, a: int, b: int) -> Bond | None:
        for nbr, bi in self._adj[a]:
            if nbr == b:
                return self.bonds[bi]
        return None

    # -- derived quantities ----------------------------------------------

    def valence(self, i: int) -> int:
        """Bond order sum (kekule orders) plus hydrogen count."""
        return sum(self.bonds[bi].order for _, bi in self._adj[i]) + self.atoms[i].hcount

    @property
    def has_dummies(self) -> bool:
        return any(a.is_dummy for a in self.atoms)

    def molecular_formula(self) -> str:
        """Hill-order formula, e.g. C2H6O for ethanol."""
        counts: dict[str, int] = {}
        h = 0
        for a in self.atoms:
            if a.is_dummy:
                continue
            counts[a.symbol] = counts.get(a.symbol, 0) + 1
            h += a.hcount
        parts = []
        if "C" in counts:
            parts.append(("C", counts.pop("C")))
            if h:
                parts.append(("H", h))
                h = 0
        if h:
            counts["H"] = counts.get("H", 0) + h
        parts.extend(sorted(counts.items()))
        out = []
        for sym, c in parts:
            out.append(sym if c == 1 else f"{sym}{c}")
        return "".join(out)

    def permuted(self, perm: list[int]) -> "Molecule":
        """Relabel atoms: new index ``perm[i]`` holds old atom ``i``."""
        n = self.n_atoms
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        specs = []
        for new in range(n):
            a = self.atoms[inv[new]]
            specs.append(
                AtomSpec(a.symbol, a.charge, a.hcount, a.aromatic, a.isotope, explicit_h=True)
            )
        bonds = [(perm[b.a], perm[b.b], b.order, b.aromatic) for b in self.bonds]
        return Molecule.from_graph(specs, bonds)

    def __repr__(self) -> str:
        return f"Molecule({self.n_atoms} atoms, {len(self.bonds)} bonds)"


def _check_connected(n: int, adj) -> None:
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        cur = stack.pop()
        for nbr, _ in adj[cur]:
            if not seen[nbr]:
                seen[nbr] = True
                count += 1
                stack.append(nbr)
    if count != n:
        raise MultiComponentError(f"graph has {n - count} unreachable atoms")


def _assign_hydrogens(specs, bonds, adj):
    """Resolve implicit hydrogen counts and flag pi-bond seekers.

    Aliphatic organic-subset atoms fill to the smallest allowed valence.
    Aromatic atoms follow the contributor rule: if the default valence
    leaves room for one more bond after sigma bonds and declared hydrogens,
    the atom takes part in one ring double bond, otherwise it donates a
    lone pair (pyrrole N, furan O).
    """
    n = len(specs)
    hcounts = [0] * n
    pi_wanted = [False] * n
    for i, spec in enumerate(specs):
        sym = spec.symbol
        if sym == "*":
            hcounts[i] = spec.hcount or 0
            continue
        if sym not in ORGANIC_SUBSET:
            raise ValenceError(f"unknown element {sym!r}")
        if spec.aromatic and sym not in AROMATIC_OK:
            raise ValenceError(f"element {sym} cannot be aromatic")

        sigma = 0
        for _nbr, bi in adj[i]:
            a, b, order, arom = bonds[bi]
            sigma += 1 if arom else order
        allowed = allowed_valences(sym, spec.charge)
        if not allowed:
            raise ValenceError(f"no valence model for {sym} with charge {spec.charge:+d}")

        if spec.aromatic:
            target = allowed[0]
            declared = spec.hcount if spec.hcount is not None else None
            if declared is None:
                room = target - sigma
                if room >= 1:
                    pi_wanted[i] = True
                    room -= 1
                if room < 0:
                    raise ValenceError(
                        f"aromatic {sym} at index {i} exceeds valence {target}"
                    )
                hcounts[i] = room
            else:
                room = target - sigma - declared
                if room >= 1:
                    pi_wanted[i] = True
                hcounts[i] = declared
        else:
            if spec.hcount is not None:
                hcounts[i] = spec.hcount
            else:
                fill = next((v for v in allowed if v >= sigma), None)
                if fill is None:
                    raise ValenceError(
                        f"atom {i} ({sym}) has bond order sum {sigma}, "
                        f"allowed valences {allowed}"
                    )
                hcounts[i] = fill - sigma
    return hcounts, pi_wanted


def _check_valences(atoms, bonds, adj, specs) -> None:
    for i, atom in enumerate(atoms):
        if atom.is_dummy:
            continue
        total = sum(bonds[bi].order for _, bi in adj[i]) + atom.hcount
        allowed = allowed_valences(atom.symbol, atom.charge)
        if specs[i].hcount is None and not specs[i].aromatic:
            ok = total in allowed
        else:
            # Bracket-declared or aromatic atoms may sit below the table
            # value (no radical bookkeeping) but never above it.
            ok = total <= max(allowed)
        if not ok:
            raise ValenceError(
                f"atom {i} ({atom.symbol}{atom.charge:+d} H{atom.hcount}) "
                f"has valence {total}, allowed {allowed}"
            )


def heavy_atom_mass(symbol: str) -> float:
    return ATOMIC_MASS[symbol]


def atomic_number(symbol: str) -> int:
    return ATOMIC_NUMBER[symbol]


def warn_discarded(feature: str, token: str) -> None:
    warnings.warn(f"discarding unsupported {feature} token {token!r}", stacklevel=3)
