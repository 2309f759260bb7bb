"""Exception hierarchy for molecule parsing, editing, and assembly."""


class ChemError(ValueError):
    """Base class for all chemistry-level errors."""


class SmilesSyntaxError(ChemError):
    """Malformed SMILES text: unbalanced rings/branches, unknown token."""


class ValenceError(ChemError):
    """An atom exceeds its allowed valence, or an aromatic system cannot
    be assigned a consistent Kekule structure."""


class MultiComponentError(ChemError):
    """Dot-separated (disconnected) input while component splitting is off."""


class DanglingAttachmentError(ChemError):
    """A fragment link references an attachment point that is absent or
    already consumed."""


class InvalidEditError(ChemError):
    """An edit action does not apply to the molecule it was paired with."""


class DisconnectedResultError(ChemError):
    """An edit produced a molecule that fell apart into components."""


class WidthMismatchError(ChemError):
    """Two fingerprints of different widths were combined."""
