"""Incremental exact independence oracle.

Rows are sparse maps ``column -> Fraction`` kept in reduced echelon form: every stored
row has coefficient 1 at its pivot and 0 at every other stored pivot, so a candidate is
reduced in a single pass over the rows.
"""

from fractions import Fraction
from typing import Dict, Generic, Hashable, Iterable, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)


class EchelonBasis(Generic[K]):
    """Growable basis of a row space with exact membership tests."""

    def __init__(self, rows: Iterable[Mapping[K, object]] = ()):
        self._rows: Dict[K, Dict[K, Fraction]] = {}
        for row in rows:
            self.add(row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Mapping[K, object]) -> Dict[K, Fraction]:
        """Residue of ``vector`` after eliminating every stored pivot."""
        residue = {k: Fraction(v) for k, v in vector.items() if v}  # type: ignore[arg-type]
        for pivot, row in self._rows.items():
            factor = residue.get(pivot)
            if not factor:
                continue
            for k, v in row.items():
                updated = residue.get(k, Fraction(0)) - factor * v
                if updated:
                    residue[k] = updated
                else:
                    residue.pop(k, None)
        return residue

    def contains(self, vector: Mapping[K, object]) -> bool:
        """True iff ``vector`` lies in the span of the stored rows."""
        return not self.reduce(vector)

    def add(self, vector: Mapping[K, object]) -> bool:
        """
        Add ``vector`` if it is independent of the stored rows.

        Returns:
            True when the rank grew, False when the vector was already in the span
        """
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = next(iter(residue))
        scale = residue[pivot]
        row = {k: v / scale for k, v in residue.items()}
        for other in self._rows.values():
            factor = other.get(pivot)
            if not factor:
                continue
            for k, v in row.items():
                updated = other.get(k, Fraction(0)) - factor * v
                if updated:
                    other[k] = updated
                else:
                    other.pop(k, None)
        self._rows[pivot] = row
        return True
