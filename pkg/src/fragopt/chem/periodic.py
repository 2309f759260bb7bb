"""Element data for the supported SMILES dialect.

The engine handles the organic subset (B, C, N, O, P, S, F, Cl, Br, I), the
wildcard attachment atom ``*``, and bracket forms thereof.  Unknown elements
are rejected at parse time rather than silently passed through.
"""

from __future__ import annotations

# Standard atomic weights (IUPAC 2021, conventional values).
ATOMIC_MASS = {
    "H": 1.008,
    "B": 10.811,
    "C": 12.011,
    "N": 14.007,
    "O": 15.999,
    "F": 18.998,
    "P": 30.974,
    "S": 32.06,
    "Cl": 35.45,
    "Br": 79.904,
    "I": 126.904,
    "*": 0.0,
}

ATOMIC_NUMBER = {
    "H": 1,
    "B": 5,
    "C": 6,
    "N": 7,
    "O": 8,
    "F": 9,
    "P": 15,
    "S": 16,
    "Cl": 17,
    "Br": 35,
    "I": 53,
    "*": 0,
}

# Allowed total valences (bond order sum + hydrogens) for neutral atoms.
# Multi-valued entries list the states implicit-H assignment may fill to.
VALENCES = {
    "B": (3,),
    "C": (4,),
    "N": (3,),
    "O": (2,),
    "F": (1,),
    "P": (3, 5),
    "S": (2, 4, 6),
    "Cl": (1,),
    "Br": (1,),
    "I": (1,),
}

ORGANIC_SUBSET = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}

# Elements that may carry the aromatic (lowercase) flag.
AROMATIC_OK = {"B", "C", "N", "O", "P", "S"}


def allowed_valences(symbol: str, charge: int) -> tuple[int, ...]:
    """Valence states an atom may occupy, shifted by formal charge.

    Isoelectronic shift: for group 15-17 elements a positive charge adds a
    bonding slot and a negative one removes it (N+ -> 4, O- -> 1); boron
    shifts the other way (B- -> 4); carbon loses a slot either way
    (C+ -> 3, C- -> 3).
    """
    if symbol == "*":
        return tuple(range(0, 9))
    base = VALENCES.get(symbol)
    if base is None:
        return ()
    if symbol == "B":
        shift = -charge
    elif symbol == "C":
        shift = -abs(charge)
    else:
        shift = charge
    return tuple(max(0, v + shift) for v in base)
