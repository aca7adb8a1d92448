"""Sign strings, contents and tableau operations.

Tableaux are stored row by row. Semistandard fillings of content ``s`` have
three columns and ``weight(s) / 3`` rows; their standardizations are
conjugated into the three-row form used to draw m-diagrams.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import IndexOutOfRange, InvalidSign, InvalidTableau, ValidationError

PLUS = "+"
MINUS = "-"


class SignString(str):
    """A word over ``+``/``-``. Also accepts the unicode minus sign."""

    def __new__(cls, text: str = ""):
        text = str(text).replace("−", MINUS).replace(" ", "")
        bad = set(text) - {PLUS, MINUS}
        if bad:
            raise InvalidSign(f"unexpected symbols {sorted(bad)!r} in sign string {text!r}")
        return super().__new__(cls, text)

    @property
    def weight(self) -> int:
        return self.count(PLUS) + 2 * self.count(MINUS)

    @property
    def minus_count(self) -> int:
        return self.count(MINUS)

    def rotated(self, k: int = 1) -> SignString:
        if not self:
            return self
        k %= len(self)
        return SignString(self[k:] + self[:k])

    def to_json(self) -> dict:
        return {"sign": str(self)}

    @classmethod
    def from_json(cls, data: dict) -> SignString:
        return cls(data["sign"])

    def __repr__(self) -> str:
        return f"SignString({str(self)!r})"


def content_of_sign(s: str) -> tuple[int, ...]:
    """Multiplicity of each value: 1 for a plus, 2 for a minus."""
    return tuple(1 if c == PLUS else 2 for c in SignString(s))


def dual_sign(s: str) -> SignString:
    s = SignString(s)
    return SignString("".join(MINUS if c == PLUS else PLUS for c in reversed(s)))


def sign_of_content(content: Sequence[int]) -> SignString:
    if any(c not in (1, 2) for c in content):
        raise InvalidSign(f"content {tuple(content)} has parts other than 1 and 2")
    return SignString("".join(PLUS if c == 1 else MINUS for c in content))


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", tuple(r for r in rows if r))

    @classmethod
    def parse(cls, text: str) -> Tableau:
        """Read ``"1,1,2/2,3,5"`` or the digit shorthand ``"112/235"``."""
        text = text.strip()
        if text in ("", "()", "∅"):
            return cls(())
        rows = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            try:
                if "," in chunk:
                    rows.append([int(v) for v in chunk.split(",")])
                else:
                    rows.append([int(v) for v in chunk])
            except ValueError:
                raise ValidationError(f"cannot read tableau row {chunk!r}", code="BadTableauText") from None
        return cls(rows)

    def __str__(self) -> str:
        if all(0 <= v <= 9 for v in self.entries()):
            return "/".join("".join(map(str, r)) for r in self.rows)
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> Tableau:
        return cls(data["rows"])

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_rectangular(self) -> bool:
        return len(set(self.shape)) <= 1

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                yield r, c, v

    def columns(self) -> list[tuple[int, ...]]:
        width = max(self.shape, default=0)
        return [tuple(row[c] for row in self.rows if c < len(row)) for c in range(width)]

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> Tableau:
        height = max((len(c) for c in columns), default=0)
        return cls([[col[r] for col in columns if r < len(col)] for r in range(height)])

    def position(self, value: int) -> tuple[int, int]:
        for r, c, v in self.cells():
            if v == value:
                return r, c
        raise KeyError(value)

    def __len__(self) -> int:
        return sum(self.shape)


@dataclass(frozen=True)
class TableauProblem:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


STANDARD = "standard"


def validate_tableau(T: Tableau, mode: str | None = None) -> list[TableauProblem]:
    """Return every invariant violation; an empty list means ``T`` is valid.

    ``mode`` is ``None`` (semistandard only), ``"standard"``, or a sign
    string ``s`` (three columns, content of ``s``).
    """
    problems = []
    if not T.is_rectangular:
        problems.append(TableauProblem("WrongShape", f"rows have lengths {T.shape}"))
    for r, row in enumerate(T.rows):
        for c in range(1, len(row)):
            if row[c] < row[c - 1]:
                problems.append(TableauProblem(
                    "RowNotWeaklyIncreasing", f"row {r + 1}, column {c + 1}: {row[c - 1]} then {row[c]}"))
    for c, col in enumerate(T.columns()):
        for r in range(1, len(col)):
            if col[r] <= col[r - 1]:
                problems.append(TableauProblem(
                    "ColumnNotStrictlyIncreasing", f"column {c + 1}, row {r + 1}: {col[r - 1]} above {col[r]}"))
    if mode is None:
        return problems
    entries = Counter(T.entries())
    if mode == STANDARD:
        want = Counter(range(1, len(T) + 1))
    else:
        s = SignString(mode)
        if s.weight % 3:
            problems.append(TableauProblem("WrongShape", f"weight {s.weight} of {s!r} is not a multiple of 3"))
        elif T.shape != (3,) * (s.weight // 3):
            problems.append(TableauProblem(
                "WrongShape", f"shape {T.shape} is not (3,...,3) with {s.weight // 3} rows"))
        want = Counter({i + 1: m for i, m in enumerate(content_of_sign(s))})
    if entries != want:
        missing = sorted((want - entries).elements())
        extra = sorted((entries - want).elements())
        problems.append(TableauProblem("WrongContent", f"missing {missing}, unexpected {extra}"))
    return problems


def check_tableau(T: Tableau, mode: str | None = None) -> None:
    problems = validate_tableau(T, mode)
    if problems:
        raise InvalidTableau(problems)


def conjugate(T: Tableau) -> Tableau:
    if not T.is_rectangular:
        raise InvalidTableau([TableauProblem("WrongShape", "conjugate expects a rectangular tableau")])
    return Tableau(T.columns())


def tau_set(T: Tableau) -> frozenset[tuple[int, int]]:
    """Pairs ``(i, i+1)`` with ``i`` in a strictly higher row than ``i+1``."""
    problems = validate_tableau(T, STANDARD)
    if problems:
        raise InvalidTableau(problems, code="NotStandard")
    row_of = {v: r for r, _, v in T.cells()}
    return frozenset((i, i + 1) for i in range(1, len(T)) if row_of[i] < row_of[i + 1])


@dataclass(frozen=True)
class PairMap:
    """Standard labels assigned to each position of a sign string.

    ``labels[p]`` holds one label for a plus and two consecutive labels for a
    minus, position ``p`` counted from 0.
    """

    sign: SignString
    labels: tuple[tuple[int, ...], ...]

    @property
    def minus_pairs(self) -> dict[int, tuple[int, int]]:
        """1-based minus position -> its pair of labels."""
        return {p + 1: lab for p, lab in enumerate(self.labels) if len(lab) == 2}

    def value_of_label(self) -> dict[int, int]:
        return {lab: p + 1 for p, labs in enumerate(self.labels) for lab in labs}

    def unstandardize(self, T: Tableau) -> Tableau:
        back = self.value_of_label()
        return Tableau([[back[v] for v in row] for row in T.rows])


def pair_map_for(s: str) -> PairMap:
    s = SignString(s)
    labels, nxt = [], 1
    for m in content_of_sign(s):
        labels.append(tuple(range(nxt, nxt + m)))
        nxt += m
    return PairMap(s, tuple(labels))


def standardize(T: Tableau, s: str) -> tuple[Tableau, PairMap]:
    """Relabel a content-``s`` filling to a standard tableau.

    Values are relabelled in increasing order; the two copies of a doubled
    value get consecutive labels, the smaller one in the smaller column.
    """
    s = SignString(s)
    problems = validate_tableau(T, s)
    if problems:
        raise InvalidTableau(problems, code="NotContentOfS")
    pm = pair_map_for(s)
    cells_of: dict[int, list[tuple[int, int]]] = {}
    for r, c, v in T.cells():
        cells_of.setdefault(v, []).append((c, r))
    rows = [list(row) for row in T.rows]
    for v, labs in enumerate(pm.labels, start=1):
        for (c, r), lab in zip(sorted(cells_of[v]), labs):
            rows[r][c] = lab
    return Tableau(rows), pm


def _check_filled(T: Tableau) -> int:
    problems = validate_tableau(T)
    if problems:
        raise InvalidTableau(problems, code="NotSemistandard")
    values = set(T.entries())
    top = max(values, default=0)
    missing = sorted(set(range(1, top + 1)) - values)
    if missing or min(values, default=1) < 1:
        raise ValidationError(f"values {missing} absent from 1..{top}", code="MissingValue")
    return top


def jdt_promote(T: Tableau) -> Tableau:
    """One jeu-de-taquin promotion step.

    Every 1 is removed in turn from the top-left corner and the hole slid out;
    on a tie the entry below moves up. Entries are then decremented and the
    vacated boxes receive the largest value.
    """
    top = _check_filled(T)
    if not T.rows:
        return T
    grid: list[list[int | None]] = [list(row) for row in T.rows]
    ones = sum(1 for v in T.entries() if v == 1)

    def at(r, c):
        if r < len(grid) and c < len(grid[r]):
            return grid[r][c]
        return None

    for _ in range(ones):
        r, c = 0, 0
        grid[0][0] = None
        while True:
            below, right = at(r + 1, c), at(r, c + 1)
            if below is None and right is None:
                break
            if right is None or (below is not None and below <= right):
                grid[r][c], grid[r + 1][c] = below, None
                r += 1
            else:
                grid[r][c], grid[r][c + 1] = right, None
                c += 1
    return Tableau([[top if v is None else v - 1 for v in row] for row in grid])


def shuffle(Tp: Tableau, T: Tableau, i: int, by: str = "columns") -> Tableau:
    """Shuffle ``Tp`` into ``T`` at ``i``.

    Values ``1..i`` of ``T`` stay put, values ``j`` of ``Tp`` become ``j + i``
    and the remaining values ``j`` of ``T`` become ``j + len(Tp values)``, each
    kept in its column. ``by="rows"`` applies the same rule to rows, which is
    the matching operation on the three-row standard form.
    """
    l1 = _check_filled(T)
    l2 = _check_filled(Tp)
    if not 0 <= i <= l1:
        raise IndexOutOfRange(f"shuffle index {i} outside 0..{l1}")
    if by not in ("columns", "rows"):
        raise ValueError(f"by must be 'columns' or 'rows', not {by!r}")
    if by == "rows":
        return conjugate(shuffle(conjugate(Tp), conjugate(T), i))
    width = max(T.n_cols, Tp.n_cols)
    cols: list[list[int]] = [[] for _ in range(width)]
    for _, c, v in T.cells():
        cols[c].append(v if v <= i else v + l2)
    for _, c, v in Tp.cells():
        cols[c].append(v + i)
    for col in cols:
        col.sort()
    lengths = {len(col) for col in cols}
    result = Tableau.from_columns(cols)
    if len(lengths) > 1 or validate_tableau(result):
        raise ValidationError(
            f"shuffling {Tp} into {T} at {i} gives columns {cols}", code="ResultNotSemistandard")
    return result


def shuffled_sign(s: str, t: str, i: int) -> SignString:
    s, t = SignString(s), SignString(t)
    return SignString(s[:i] + t + s[i:])


def sign_strings(weight: int) -> list[SignString]:
    """All sign strings of the given weight, in lexicographic order."""
    if weight < 0:
        return []
    table: list[list[str]] = [[""]]
    for w in range(1, weight + 1):
        shorter = [PLUS + t for t in table[w - 1]]
        if w >= 2:
            shorter += [MINUS + t for t in table[w - 2]]
        table.append(sorted(shorter))
    return [SignString(t) for t in table[weight]]


def enumerate_fillings(s: str) -> Iterator[Tableau]:
    """Every semistandard filling of (3,...,3) with content ``s``.

    Row-major backtracking, smallest candidate first, so the order is
    lexicographic in the row-major reading word.
    """
    s = SignString(s)
    if s.weight % 3:
        return
    n_rows = s.weight // 3
    if n_rows == 0:
        yield Tableau(())
        return
    remaining = [0] + list(content_of_sign(s))
    top = len(s)
    grid = [[0] * 3 for _ in range(n_rows)]
    cells = [(r, c) for r in range(n_rows) for c in range(3)]

    def fill(k):
        if k == len(cells):
            yield Tableau(grid)
            return
        r, c = cells[k]
        lo = max(grid[r][c - 1] if c else 1, grid[r - 1][c] + 1 if r else 1)
        # each of the n_rows - r - 1 cells below needs a strictly larger value
        hi = top - (n_rows - r - 1)
        for v in range(lo, hi + 1):
            if remaining[v]:
                remaining[v] -= 1
                grid[r][c] = v
                yield from fill(k + 1)
                remaining[v] += 1
        grid[r][c] = 0

    yield from fill(0)


def count_fillings(s: str) -> int:
    return sum(1 for _ in enumerate_fillings(s))
