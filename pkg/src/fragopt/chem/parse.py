"""SMILES reader for the organic-subset dialect.

Supported: bare organic-subset atoms (B, C, N, O, P, S, F, Cl, Br, I),
aromatic lowercase, bracket atoms with isotope label / explicit H / charge,
the wildcard ``*`` (attachment dummy), ring closures including ``%nn``,
branches, and explicit bond orders.  Stereo markers (``/``, ``\\``, ``@``)
are accepted and dropped with a warning; the property set downstream is
stereo-insensitive.  Dot-separated input is rejected unless the caller asks
for component splitting.
"""

from __future__ import annotations

import warnings

from .errors import MultiComponentError, SmilesSyntaxError
from .mol import AtomSpec, Molecule

_TWO_LETTER = ("Cl", "Br")
_ONE_LETTER = set("BCNOPSFI")
_AROMATIC = set("bcnops")
_BOND_ORDERS = {"-": 1, "=": 2, "#": 3}


class StereoDiscardedWarning(UserWarning):
    """Raised once per parse when stereo descriptors are thrown away."""


def parse(smiles: str, *, split_components: bool = False) -> Molecule:
    """Parse SMILES text into a perceived, validated Molecule.

    With ``split_components`` the largest dot-separated component is kept
    (corpus standardization mode); otherwise multi-component input raises
    ``MultiComponentError``.
    """
    if not smiles or not smiles.strip():
        raise SmilesSyntaxError("empty SMILES")
    smiles = smiles.strip()
    if "." in smiles:
        if not split_components:
            raise MultiComponentError(f"multi-component input {smiles!r}")
        parts = [p for p in smiles.split(".") if p]
        mols = [parse(p) for p in parts]
        mols.sort(key=lambda m: (-m.n_atoms, m.n_atoms and _parse_sort_key(m)))
        return mols[0]

    specs, bonds = _read(smiles)
    return Molecule.from_graph(specs, bonds)


def _parse_sort_key(mol: Molecule) -> str:
    from .canon import canonical_smiles

    return canonical_smiles(mol)


def _read(text: str):
    specs: list[AtomSpec] = []
    bonds: list[tuple[int, int, int, bool]] = []
    prev_stack: list[int | None] = [None]
    pending_bond: str | None = None
    ring_open: dict[int, tuple[int, str | None]] = {}
    stereo_seen = False

    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "(":
            if prev_stack[-1] is None:
                raise SmilesSyntaxError("branch before any atom")
            if pending_bond is not None:
                raise SmilesSyntaxError("bond symbol before branch open")
            prev_stack.append(prev_stack[-1])
            i += 1
            continue
        if ch == ")":
            if len(prev_stack) <= 1:
                raise SmilesSyntaxError("unbalanced ')'")
            if pending_bond is not None:
                raise SmilesSyntaxError("dangling bond before ')'")
            prev_stack.pop()
            i += 1
            continue
        if ch in _BOND_ORDERS or ch == ":":
            if pending_bond is not None:
                raise SmilesSyntaxError(f"two bond symbols in a row at {i}")
            pending_bond = ch
            i += 1
            continue
        if ch in "/\\":
            stereo_seen = True
            if pending_bond is None:
                pending_bond = "-"
            i += 1
            continue
        if ch.isdigit() or ch == "%":
            if ch == "%":
                if i + 2 >= n + 1 or not text[i + 1 : i + 3].isdigit():
                    raise SmilesSyntaxError(f"bad %nn ring closure at {i}")
                num = int(text[i + 1 : i + 3])
                i += 3
            else:
                num = int(ch)
                i += 1
            cur = prev_stack[-1]
            if cur is None:
                raise SmilesSyntaxError("ring closure before any atom")
            if num in ring_open:
                other, obond = ring_open.pop(num)
                if other == cur:
                    raise SmilesSyntaxError(f"ring bond {num} closes on itself")
                sym = _merge_ring_bond(obond, pending_bond, num)
                bonds.append(_make_bond(specs, other, cur, sym))
            else:
                ring_open[num] = (cur, pending_bond)
            pending_bond = None
            continue
        if ch == "[":
            end = text.find("]", i)
            if end < 0:
                raise SmilesSyntaxError("unterminated bracket atom")
            spec, had_stereo = _bracket_atom(text[i + 1 : end])
            stereo_seen = stereo_seen or had_stereo
            _attach(specs, bonds, prev_stack, pending_bond, spec)
            pending_bond = None
            i = end + 1
            continue

        spec = None
        if text[i : i + 2] in _TWO_LETTER:
            spec = AtomSpec(text[i : i + 2])
            i += 2
        elif ch in _ONE_LETTER:
            spec = AtomSpec(ch)
            i += 1
        elif ch in _AROMATIC:
            spec = AtomSpec(ch.upper(), aromatic=True)
            i += 1
        elif ch == "*":
            spec = AtomSpec("*", hcount=0, explicit_h=True)
            i += 1
        else:
            raise SmilesSyntaxError(f"unknown token {ch!r} at position {i}")
        _attach(specs, bonds, prev_stack, pending_bond, spec)
        pending_bond = None

    if len(prev_stack) != 1:
        raise SmilesSyntaxError("unbalanced '(' in SMILES")
    if ring_open:
        raise SmilesSyntaxError(f"unclosed ring bonds: {sorted(ring_open)}")
    if pending_bond is not None:
        raise SmilesSyntaxError("trailing bond symbol")
    if not specs:
        raise SmilesSyntaxError("no atoms in SMILES")
    if stereo_seen:
        warnings.warn(
            "stereo descriptors discarded (properties are stereo-insensitive)",
            StereoDiscardedWarning,
            stacklevel=3,
        )
    return specs, bonds


def _attach(specs, bonds, prev_stack, pending_bond, spec: AtomSpec) -> None:
    idx = len(specs)
    specs.append(spec)
    prev = prev_stack[-1]
    if prev is not None:
        bonds.append(_make_bond(specs, prev, idx, pending_bond))
    elif pending_bond is not None:
        raise SmilesSyntaxError("bond symbol before first atom")
    prev_stack[-1] = idx


def _make_bond(specs, a: int, b: int, sym: str | None) -> tuple[int, int, int, bool]:
    if sym is None:
        arom = specs[a].aromatic and specs[b].aromatic
        return (a, b, 1, arom)
    if sym == ":":
        return (a, b, 1, True)
    return (a, b, _BOND_ORDERS[sym], False)


def _merge_ring_bond(open_sym: str | None, close_sym: str | None, num: int) -> str | None:
    if open_sym is None:
        return close_sym
    if close_sym is None or close_sym == open_sym:
        return open_sym
    raise SmilesSyntaxError(f"conflicting bond orders on ring closure {num}")


def _bracket_atom(body: str) -> tuple[AtomSpec, bool]:
    """Parse the inside of a [...] atom (isotope, symbol, H count, charge)."""
    if not body:
        raise SmilesSyntaxError("empty bracket atom")
    i = 0
    isotope = 0
    while i < len(body) and body[i].isdigit():
        isotope = isotope * 10 + int(body[i])
        i += 1

    aromatic = False
    if body[i : i + 2] in _TWO_LETTER:
        symbol = body[i : i + 2]
        i += 2
    elif i < len(body) and body[i] in _ONE_LETTER:
        symbol = body[i]
        i += 1
    elif i < len(body) and body[i] in _AROMATIC:
        symbol = body[i].upper()
        aromatic = True
        i += 1
    elif i < len(body) and body[i] == "*":
        symbol = "*"
        i += 1
    elif i < len(body) and body[i].isalpha():
        # Grab the whole element token so the error names it.
        j = i + 1
        while j < len(body) and body[j].islower():
            j += 1
        raise SmilesSyntaxError(f"unsupported element {body[i:j]!r} in bracket atom")
    else:
        raise SmilesSyntaxError(f"bad bracket atom [{body}]")

    had_stereo = False
    while i < len(body) and body[i] == "@":
        had_stereo = True
        i += 1

    hcount = 0
    if i < len(body) and body[i] == "H":
        i += 1
        hcount = 1
        digits = ""
        while i < len(body) and body[i].isdigit():
            digits += body[i]
            i += 1
        if digits:
            hcount = int(digits)

    charge = 0
    while i < len(body) and body[i] in "+-":
        sign = 1 if body[i] == "+" else -1
        i += 1
        digits = ""
        while i < len(body) and body[i].isdigit():
            digits += body[i]
            i += 1
        charge += sign * (int(digits) if digits else 1)
        if digits:
            break

    if i < len(body) and body[i] == ":":
        i += 1
        while i < len(body) and body[i].isdigit():
            i += 1

    if i != len(body):
        raise SmilesSyntaxError(f"trailing junk in bracket atom [{body}]")

    return AtomSpec(symbol, charge, hcount, aromatic, isotope, explicit_h=True), had_stereo
