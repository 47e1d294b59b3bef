"""Cayley tables of finite quasigroups.

A quasigroup of order n is stored as an n x n grid of integers 0..n-1 in
which every row and every column is a permutation (a Latin square).  Rows
index the left operand: ``grid[x][y] = x * y``.  Everything in this module
is immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import json

# Hard cap on table order accepted from external input; every downstream
# search is exponential in the order.
MAX_ORDER = 64


class MalformedInput(ValueError):
    """Input does not describe an n x n grid of symbols 0..n-1."""


class NotLatin(ValueError):
    """A grid row or column repeats a symbol."""

    def __init__(self, axis: str, index: int, symbol: int):
        self.axis = axis
        self.index = index
        self.symbol = symbol
        super().__init__(f"{axis} {index} repeats symbol {symbol}")


class OrderMismatch(ValueError):
    """Operands do not all have the same order."""


class Permutation:
    """A bijection of {0..n-1}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for v in images:
            if not (isinstance(v, int) and 0 <= v < n) or seen[v]:
                raise ValueError(f"not a bijection of 0..{n - 1}: {images!r}")
            seen[v] = True
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def random(cls, n: int, rng) -> "Permutation":
        """Uniform random permutation drawn from ``rng`` (a random.Random)."""
        images = list(range(n))
        rng.shuffle(images)
        return cls(images)

    @property
    def order(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """Functional composition: ``self.compose(other)(x) == self(other(x))``."""
        if len(self.images) != len(other.images):
            raise OrderMismatch("cannot compose permutations of different order")
        return Permutation(self.images[v] for v in other.images)

    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)!r})"


class AssociativityVerdict:
    """Outcome of an exhaustive associativity check.

    ``counterexample`` is the lexicographically first triple (x, y, z) with
    (x*y)*z != x*(y*z), or None when the operation is associative.
    """

    __slots__ = ("associative", "counterexample")

    def __init__(self, associative: bool, counterexample=None):
        if associative != (counterexample is None):
            raise ValueError("counterexample must be present exactly when not associative")
        self.associative = associative
        self.counterexample = counterexample

    def __eq__(self, other):
        return (
            isinstance(other, AssociativityVerdict)
            and self.associative == other.associative
            and self.counterexample == other.counterexample
        )

    def __repr__(self):
        if self.associative:
            return "AssociativityVerdict(associative=True)"
        return f"AssociativityVerdict(associative=False, counterexample={self.counterexample})"


class QuasigroupTable:
    """An order-n Cayley table whose rows and columns are all permutations."""

    __slots__ = ("rows", "_ldiv", "_rdiv")

    def __init__(self, grid):
        rows = tuple(tuple(row) for row in grid)
        n = len(rows)
        if n == 0:
            raise MalformedInput("empty grid")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise MalformedInput(f"row {x} has {len(row)} entries, expected {n}")
            for v in row:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise MalformedInput(f"unknown symbol {v!r} in row {x}")
        # Latin check, and division tables as a byproduct: _ldiv[x][z] is the
        # unique y with x*y = z, _rdiv[z][y] the unique x with x*y = z.
        ldiv = [[-1] * n for _ in range(n)]
        rdiv = [[-1] * n for _ in range(n)]
        for x, row in enumerate(rows):
            inv = ldiv[x]
            for y, z in enumerate(row):
                if inv[z] != -1:
                    raise NotLatin("row", x, z)
                inv[z] = y
        for y in range(n):
            for x, row in enumerate(rows):
                z = row[y]
                if rdiv[z][y] != -1:
                    raise NotLatin("column", y, z)
                rdiv[z][y] = x
        self.rows = rows
        self._ldiv = tuple(tuple(r) for r in ldiv)
        self._rdiv = tuple(tuple(r) for r in rdiv)

    @property
    def order(self) -> int:
        return len(self.rows)

    def multiply(self, x: int, y: int) -> int:
        """x * y.  Indices are assumed valid (validated at the I/O boundary)."""
        return self.rows[x][y]

    def left_divide(self, x: int, z: int) -> int:
        """The unique y with x * y = z."""
        return self._ldiv[x][z]

    def right_divide(self, z: int, y: int) -> int:
        """The unique x with x * y = z."""
        return self._rdiv[z][y]

    def left_translation(self, x: int) -> Permutation:
        """The map y -> x * y (row x)."""
        return Permutation(self.rows[x])

    def right_translation(self, x: int) -> Permutation:
        """The map y -> y * x (column x)."""
        return Permutation(row[x] for row in self.rows)

    def find_identity(self):
        """The two-sided identity element, or None."""
        n = self.order
        for e in range(n):
            if all(self.rows[e][x] == x and self.rows[x][e] == x for x in range(n)):
                return e
        return None

    def is_associative(self) -> AssociativityVerdict:
        """Exhaustive check of (x*y)*z == x*(y*z) over all triples."""
        rows = self.rows
        n = self.order
        for x in range(n):
            row_x = rows[x]
            for y in range(n):
                row_xy = rows[row_x[y]]
                row_y = rows[y]
                for z in range(n):
                    if row_xy[z] != row_x[row_y[z]]:
                        return AssociativityVerdict(False, (x, y, z))
        return AssociativityVerdict(True)

    def __eq__(self, other):
        return isinstance(other, QuasigroupTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        if self.order <= 6:
            return f"QuasigroupTable({[list(r) for r in self.rows]!r})"
        return f"<QuasigroupTable order={self.order}>"


def cyclic_table(n: int) -> QuasigroupTable:
    """The addition table of the integers mod n."""
    return QuasigroupTable([[(x + y) % n for y in range(n)] for x in range(n)])


def direct_product(a: QuasigroupTable, b: QuasigroupTable) -> QuasigroupTable:
    """Componentwise product table on pairs, encoded as i*|b| + j."""
    na, nb = a.order, b.order
    n = na * nb
    grid = [[0] * n for _ in range(n)]
    for xa in range(na):
        for xb in range(nb):
            for ya in range(na):
                for yb in range(nb):
                    grid[xa * nb + xb][ya * nb + yb] = a.rows[xa][ya] * nb + b.rows[xb][yb]
    return QuasigroupTable(grid)


def parse_table(text: str) -> QuasigroupTable:
    """Parse the plain-text table format.

    Lines starting with '#' are comments; blank lines are ignored.  The first
    remaining line is the order n, followed by n lines of n whitespace-separated
    symbols from {0..n-1}.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedInput("no content")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedInput(f"order line is not an integer: {lines[0]!r}") from None
    if n < 1:
        raise MalformedInput(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise MalformedInput(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if len(lines) != n + 1:
        raise MalformedInput(f"expected {n} grid rows, found {len(lines) - 1}")
    grid = []
    for x, line in enumerate(lines[1:]):
        cells = line.split()
        if len(cells) != n:
            raise MalformedInput(f"row {x} has {len(cells)} entries, expected {n}")
        row = []
        for cell in cells:
            try:
                v = int(cell)
            except ValueError:
                raise MalformedInput(f"unknown symbol {cell!r} in row {x}") from None
            if not 0 <= v < n:
                raise MalformedInput(f"unknown symbol {cell!r} in row {x}")
            row.append(v)
        grid.append(row)
    return QuasigroupTable(grid)


def format_table(table: QuasigroupTable) -> str:
    """Render a table in the plain-text format (inverse of parse_table)."""
    lines = [str(table.order)]
    lines.extend(" ".join(str(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def table_to_json_dict(table: QuasigroupTable) -> dict:
    return {"order": table.order, "grid": [list(row) for row in table.rows]}


def table_from_json_dict(obj) -> QuasigroupTable:
    if not isinstance(obj, dict) or set(obj) != {"order", "grid"}:
        raise MalformedInput('expected a JSON object {"order": n, "grid": [[...], ...]}')
    n, grid = obj["order"], obj["grid"]
    if not isinstance(n, int) or not isinstance(grid, list) or len(grid) != n:
        raise MalformedInput("JSON order and grid shape disagree")
    if n > MAX_ORDER:
        raise MalformedInput(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    return QuasigroupTable(grid)


def load_table(text: str) -> QuasigroupTable:
    """Parse either the plain-text format or its JSON mirror (auto-detected)."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return table_from_json_dict(obj)
    return parse_table(text)
