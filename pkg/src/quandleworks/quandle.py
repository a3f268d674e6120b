"""Finite quandles as square operation tables over {0, ..., n-1}.

table[i][j] holds the row element acted on by the column element, so column
j is the translation by j.  Everything in memory is 0-indexed; the plain
text "quandle v1" file format is 1-indexed, with the conversion confined to
parse/render.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

FORMAT_HEADER = "quandle v1"


class MalformedTable(ValueError):
    """Structurally bad table text or array (shape, range, or format)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class AxiomError(ValueError):
    """A well-shaped table that fails a quandle axiom."""

    def __init__(self, report: "AxiomReport") -> None:
        super().__init__(f"table violates quandle axioms: {report.summary()}")
        self.report = report


class InternalAxiomFailure(RuntimeError):
    """A derived table failed validation that should hold by construction."""


@dataclass(frozen=True)
class AxiomReport:
    idempotent: bool
    bijective_columns: bool
    distributive: bool
    first_witness: tuple | None  # indices of the first failing instance

    @property
    def ok(self) -> bool:
        return self.idempotent and self.bijective_columns and self.distributive

    def summary(self) -> str:
        text = (f"idempotent={self.idempotent}"
                f" bijective_columns={self.bijective_columns}"
                f" distributive={self.distributive}")
        if self.first_witness is not None:
            text += f" witness={self.first_witness}"
        return text


def _as_rows(table) -> list[tuple[int, ...]]:
    rows = list(table)
    n = len(rows)
    if n == 0:
        raise MalformedTable("table is empty")
    out = []
    for i, row in enumerate(rows):
        entries = list(row)
        if len(entries) != n:
            raise MalformedTable(f"row {i} has {len(entries)} entries, expected {n}")
        for v in entries:
            if not isinstance(v, int):
                raise MalformedTable(f"row {i} has non-integer entry {v!r}")
            if not 0 <= v < n:
                raise MalformedTable(f"row {i} entry {v} out of range 0..{n - 1}")
        out.append(tuple(entries))
    return out


def check_axioms(table) -> AxiomReport:
    """Test idempotence, column bijectivity, and right self-distributivity.

    Witnesses are deterministic: the lexicographically first violating
    instance of the first failing axiom (unused slots are None).
    """
    rows = _as_rows(table)
    n = len(rows)

    idem_wit = None
    for i in range(n):
        if rows[i][i] != i:
            idem_wit = (i, i, None)
            break

    bij_wit = None
    for j in range(n):
        seen: dict[int, int] = {}
        for i in range(n):
            v = rows[i][j]
            if v in seen:
                bij_wit = (seen[v], i, j)
                break
            seen[v] = i
        if bij_wit:
            break

    dist_wit = None
    for i, j, k in product(range(n), repeat=3):
        if rows[rows[i][j]][k] != rows[rows[i][k]][rows[j][k]]:
            dist_wit = (i, j, k)
            break

    first = next((w for w in (idem_wit, bij_wit, dist_wit) if w is not None), None)
    return AxiomReport(idem_wit is None, bij_wit is None, dist_wit is None, first)


class FiniteQuandle:
    """Validated, immutable operation table.  Construction checks all axioms."""

    def __init__(self, table) -> None:
        report = check_axioms(table)
        if not report.ok:
            raise AxiomError(report)
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteQuandle):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteQuandle(n={self.n})"

    @cached_property
    def _inverse_table(self) -> tuple[tuple[int, ...], ...]:
        inv = [[0] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for i in range(self.n):
                inv[self.table[i][j]][j] = i
        return tuple(tuple(row) for row in inv)

    def inverse_translations(self) -> tuple[tuple[int, ...], ...]:
        """result[i][j] is the unique x with x acted on by j giving i."""
        return self._inverse_table

    @cached_property
    def _orbit_blocks(self) -> tuple[tuple[int, ...], ...]:
        inv = self.inverse_translations()
        seen = [False] * self.n
        blocks = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            members = []
            while stack:
                x = stack.pop()
                members.append(x)
                for y in range(self.n):
                    for nxt in (self.table[x][y], inv[x][y]):
                        if not seen[nxt]:
                            seen[nxt] = True
                            stack.append(nxt)
            blocks.append(tuple(sorted(members)))
        return tuple(blocks)  # already ordered by smallest member

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        return self._orbit_blocks

    def orbit_of(self, x: int) -> tuple[int, ...]:
        if not 0 <= x < self.n:
            raise ValueError(f"element {x} out of range 0..{self.n - 1}")
        for block in self._orbit_blocks:
            if x in block:
                return block
        raise AssertionError("unreachable: orbits cover the carrier")

    def reverse_orbit(self, x: int) -> "FiniteQuandle":
        """Replace the translation by every member of x's orbit with its inverse."""
        block = set(self.orbit_of(x))
        inv = self.inverse_translations()
        rows = [[inv[i][j] if j in block else self.table[i][j]
                 for j in range(self.n)] for i in range(self.n)]
        try:
            return FiniteQuandle(rows)
        except AxiomError as exc:
            raise InternalAxiomFailure(
                f"reversing the orbit of {x} broke the axioms: {exc}") from exc

    def is_medial(self) -> tuple[bool, tuple[int, int, int, int] | None]:
        t = self.table
        rng = range(self.n)
        for w in rng:
            for x in rng:
                wx = t[w][x]
                for y in rng:
                    wy = t[w][y]
                    for z in rng:
                        if t[wx][t[y][z]] != t[wy][t[x][z]]:
                            return False, (w, x, y, z)
        return True, None

    def is_n_quandle(self, power: int) -> bool:
        """True when every translation iterated `power` times is the identity.

        Negative powers iterate the inverse translations; power 0 holds
        trivially.
        """
        if power == 0:
            return True
        table = self.table if power > 0 else self.inverse_translations()
        steps = abs(power)
        for j in range(self.n):
            for start in range(self.n):
                cur = start
                for _ in range(steps):
                    cur = table[cur][j]
                if cur != start:
                    return False
        return True


def trivial_quandle(n: int) -> FiniteQuandle:
    if n < 1:
        raise ValueError("order must be positive")
    return FiniteQuandle([[i] * n for i in range(n)])


def dihedral_quandle(n: int) -> FiniteQuandle:
    if n < 1:
        raise ValueError("order must be positive")
    return FiniteQuandle([[(2 * j - i) % n for j in range(n)] for i in range(n)])


def affine_quandle(n: int, t: int) -> FiniteQuandle:
    """x acted on by y gives t*x + (1-t)*y mod n; t must be a unit mod n."""
    if n < 1:
        raise ValueError("order must be positive")
    if math.gcd(t % n, n) != 1:
        raise ValueError(f"{t} is not a unit modulo {n}")
    return FiniteQuandle([[(t * i + (1 - t) * j) % n for j in range(n)]
                          for i in range(n)])


def relabel(q: FiniteQuandle, perm) -> FiniteQuandle:
    """Isomorphic copy of q along the permutation perm (old index -> new)."""
    perm = list(perm)
    if sorted(perm) != list(range(q.n)):
        raise ValueError("perm is not a permutation of the carrier")
    inv = [0] * q.n
    for old, new in enumerate(perm):
        inv[new] = old
    rows = [[perm[q.table[inv[i]][inv[j]]] for j in range(q.n)] for i in range(q.n)]
    return FiniteQuandle(rows)


_ORDER_RE = re.compile(r"^n=(\d+)$")


def parse_table_text(text: str) -> list[list[int]]:
    """Parse the 1-indexed 'quandle v1' format into a 0-indexed row list.

    Blank lines and lines starting with '#' are skipped.  The result is a
    raw table: shape and entry ranges are enforced here, the axioms are not.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        lines.append((lineno, s))

    if not lines:
        raise MalformedTable(f"empty file, expected header {FORMAT_HEADER!r}")
    idx = 0
    lineno, s = lines[idx]
    idx += 1
    if s != FORMAT_HEADER:
        raise MalformedTable(f"expected header {FORMAT_HEADER!r}", line=lineno)
    if idx >= len(lines):
        raise MalformedTable("missing order line 'n=<order>'")
    lineno, s = lines[idx]
    idx += 1
    m = _ORDER_RE.match(s)
    if not m:
        raise MalformedTable("expected order line 'n=<order>'", line=lineno)
    n = int(m.group(1))
    if n < 1:
        raise MalformedTable("order must be positive", line=lineno)

    rows = []
    for r in range(n):
        if idx >= len(lines):
            raise MalformedTable(f"expected {n} table rows, found {r}")
        lineno, s = lines[idx]
        idx += 1
        parts = s.split()
        if len(parts) != n:
            raise MalformedTable(f"row {r + 1} has {len(parts)} entries, expected {n}",
                                 line=lineno)
        row = []
        for part in parts:
            try:
                v = int(part)
            except ValueError:
                raise MalformedTable(f"bad entry {part!r}", line=lineno) from None
            if not 1 <= v <= n:
                raise MalformedTable(f"entry {v} out of range 1..{n}", line=lineno)
            row.append(v - 1)
        rows.append(row)
    if idx < len(lines):
        lineno, _ = lines[idx]
        raise MalformedTable("unexpected content after table", line=lineno)
    return rows


def render_table_text(table) -> str:
    """Canonical 1-indexed text form; accepts a FiniteQuandle or raw rows."""
    rows = getattr(table, "table", table)
    n = len(rows)
    out = [FORMAT_HEADER, f"n={n}"]
    for row in rows:
        out.append(" ".join(str(v + 1) for v in row))
    return "\n".join(out) + "\n"
