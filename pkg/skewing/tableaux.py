"""Semistandard Young tableaux, RSK row insertion and column reading words."""

import logging
from bisect import bisect_right
from dataclasses import dataclass

from .errors import SkewingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SSYT:
    rows: tuple

    @classmethod
    def from_rows(cls, rows):
        """Build a tableau, checking row and column conditions."""
        rows = tuple(tuple(int(x) for x in row) for row in rows if len(row))
        for r, row in enumerate(rows):
            if any(x < 1 for x in row):
                raise SkewingError(f"non-positive entry in row {r + 1}")
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise SkewingError(f"row {r + 1} is not weakly increasing: {row}")
            if r and len(row) > len(rows[r - 1]):
                raise SkewingError("row lengths must weakly decrease")
            if r and any(rows[r - 1][c] >= row[c] for c in range(len(row))):
                raise SkewingError(f"column strictness fails between rows {r} and {r + 1}")
        return cls(rows)

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    def content(self, n):
        counts = [0] * n
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def __str__(self):
        return "/".join("".join(str(x) for x in row) for row in self.rows) or "∅"


def rsk_p_tableau(word):
    """Insertion tableau P(w) by row insertion."""
    rows = []
    for letter in word:
        x = letter
        for row in rows:
            # first entry strictly greater than x is bumped
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return SSYT(tuple(tuple(row) for row in rows))


def column_word(tableau):
    """Read columns bottom to top, leftmost column first."""
    rows = tableau.rows
    if not rows:
        return ()
    word = []
    for col in range(len(rows[0])):
        height = sum(1 for row in rows if len(row) > col)
        word.extend(rows[r][col] for r in range(height - 1, -1, -1))
    return tuple(word)


def tableau_word_shape(word):
    """Shape of T when ``word`` is col(T) for an SSYT T, else None."""
    tableau = rsk_p_tableau(word)
    if column_word(tableau) == tuple(word):
        return tableau.shape
    return None


def superstandard_tableau(partition):
    return SSYT(tuple((i + 1,) * part for i, part in enumerate(partition)))


def enumerate_ssyt(partition, n):
    """Every SSYT of the given shape with entries in [n], each once."""
    partition = tuple(partition)
    if len(partition) > n:
        return []
    cells = [(r, c) for r, length in enumerate(partition) for c in range(length)]
    filling = [[0] * length for length in partition]
    found = []

    def fill(index):
        if index == len(cells):
            found.append(SSYT(tuple(tuple(row) for row in filling)))
            return
        r, c = cells[index]
        low = 1
        if c:
            low = max(low, filling[r][c - 1])
        if r:
            low = max(low, filling[r - 1][c] + 1)
        # leave room for the strictly increasing entries below in this column
        below = sum(1 for length in partition[r + 1:] if length > c)
        for value in range(low, n - below + 1):
            filling[r][c] = value
            fill(index + 1)
        filling[r][c] = 0

    fill(0)
    logger.debug("enumerated %d tableaux of shape %s over [%d]", len(found), partition, n)
    return found
