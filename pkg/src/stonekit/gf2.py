"""GF(2) row reduction on int bitmask rows (bit j of a row = column j)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class F2Matrix:
    """A bit matrix in row-major mask form.  ``rref`` drops zero rows, so the
    reduced form of a matrix is a canonical basis of its row space."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise DomainError("row count does not match the bits")
        for r in self.bits:
            if r >> self.cols:
                raise DomainError("row wider than the declared column count")

    @staticmethod
    def from_rows(rows: list[int], cols: int) -> "F2Matrix":
        return F2Matrix(len(rows), cols, tuple(rows))

    def rref(self) -> "F2Matrix":
        """Reduced row echelon form with zero rows removed."""
        work = list(self.bits)
        pivot_rows: list[int] = []
        for col in range(self.cols):
            bit = 1 << col
            pivot = None
            for i, row in enumerate(work):
                if row & bit:
                    pivot = i
                    break
            if pivot is None:
                continue
            prow = work.pop(pivot)
            work = [r ^ prow if r & bit else r for r in work]
            pivot_rows = [r ^ prow if r & bit else r for r in pivot_rows]
            pivot_rows.append(prow)
        return F2Matrix(len(pivot_rows), self.cols, tuple(pivot_rows))

    @property
    def rank(self) -> int:
        return self.rref().rows

    def pivots(self) -> list[int]:
        """Leading column of each row; only meaningful on a reduced matrix."""
        out = []
        for row in self.bits:
            if row:
                out.append((row & -row).bit_length() - 1)
        return out

    def reduce_vector(self, v: int) -> int:
        """Canonical representative of v modulo the row space (self reduced)."""
        for row in self.bits:
            if not row:
                continue
            pivot = (row & -row).bit_length() - 1
            if v >> pivot & 1:
                v ^= row
        return v

    def in_rowspan(self, v: int) -> bool:
        return self.reduce_vector(v) == 0


def span_masks(rows: list[int], cols: int) -> set[int]:
    """Every GF(2) combination of the given rows (2**rank masks)."""
    basis = F2Matrix.from_rows(rows, cols).rref().bits
    out = {0}
    for b in basis:
        out |= {v ^ b for v in out}
    return out
