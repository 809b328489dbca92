"""Dense matrices over a single exact ring, plus the block-matrix view.

Determinants are exact: a division-free O(k^4) method (Bird's sequence of
triangular mutations) over rings without division, and ordinary Gaussian
elimination over prime fields where division is available.
"""

from __future__ import annotations

from itertools import permutations

from .ring import PrimeField, Ring, RingMismatchError, RingValue, parse_ring

EXPANSION_CAP = 8


class MatrixFormatError(ValueError):
    """Raised on malformed matrix text input."""


class Matrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.ring != ring:
                raise RingMismatchError("matrix entries must share the ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, ring: Ring, rows) -> Matrix:
        """Build a matrix from nested sequences of ints or ring values."""
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for e in r:
                entries.append(e if isinstance(e, RingValue) else ring.from_int(e))
        return cls(ring, nrows, ncols, entries)

    @classmethod
    def identity(cls, ring: Ring, k: int) -> Matrix:
        return cls.from_rows(ring, [[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> Matrix:
        zero = ring.zero
        return cls(ring, rows, cols, [zero] * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> RingValue:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list[RingValue]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def payload_rows(self) -> list[list]:
        c = self.cols
        return [[e.payload for e in self.entries[i * c : (i + 1) * c]] for i in range(self.rows)]

    @classmethod
    def _from_payload_rows(cls, ring: Ring, rows: int, cols: int, prows) -> Matrix:
        return cls(ring, rows, cols, [RingValue(ring, p) for pr in prows for p in pr])

    def _check_ring(self, other: Matrix) -> None:
        if self.ring != other.ring:
            raise RingMismatchError("matrices over different rings")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        padd = self.ring.padd
        ring = self.ring
        return Matrix(
            ring,
            self.rows,
            self.cols,
            [RingValue(ring, padd(a.payload, b.payload)) for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in subtraction")
        psub = self.ring.psub
        ring = self.ring
        return Matrix(
            ring,
            self.rows,
            self.cols,
            [RingValue(ring, psub(a.payload, b.payload)) for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> Matrix:
        pneg = self.ring.pneg
        ring = self.ring
        return Matrix(ring, self.rows, self.cols, [RingValue(ring, pneg(a.payload)) for a in self.entries])

    def __mul__(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}")
        return Matrix._from_payload_rows(
            self.ring,
            self.rows,
            other.cols,
            _matmul_payload(self.ring, self.payload_rows(), other.payload_rows()),
        )

    def scale(self, s: RingValue) -> Matrix:
        if s.ring != self.ring:
            raise RingMismatchError("scalar from a different ring")
        pmul = self.ring.pmul
        ring = self.ring
        sp = s.payload
        return Matrix(ring, self.rows, self.cols, [RingValue(ring, pmul(sp, a.payload)) for a in self.entries])

    def transpose(self) -> Matrix:
        return Matrix(
            self.ring,
            self.cols,
            self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.format_payload(e.payload) for e in self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols} over {self.ring.label}: [{body}])"


def _matmul_payload(ring: Ring, a, b):
    padd = ring.padd
    pmul = ring.pmul
    zero = ring.int_payload(0)
    bt = list(zip(*b)) if b else []
    out = []
    for arow in a:
        orow = []
        for bcol in bt:
            acc = zero
            for x, y in zip(arow, bcol):
                if x and y:
                    acc = padd(acc, pmul(x, y))
            orow.append(acc)
        out.append(orow)
    return out


def commutes(x: Matrix, y: Matrix) -> bool:
    """Exact test that x*y == y*x, without building result matrices."""
    x._check_ring(y)
    if not (x.is_square and y.is_square and x.rows == y.rows):
        raise ValueError("commutation test requires equal square shapes")
    a = x.payload_rows()
    b = y.payload_rows()
    return _matmul_payload(x.ring, a, b) == _matmul_payload(x.ring, b, a)


def _det_bird(ring: Ring, rows) -> object:
    # Bird's division-free determinant: F_{k+1} = mu(F_k) A where mu zeroes
    # the lower triangle and replaces each diagonal entry with minus the sum
    # of the diagonal entries below it.  det A = (-1)^(k-1) (F_k)_{11}.
    k = len(rows)
    if k == 0:
        return ring.int_payload(1)
    padd = ring.padd
    pmul = ring.pmul
    pneg = ring.pneg
    zero = ring.int_payload(0)
    a = rows
    f = [row[:] for row in rows]
    for _ in range(k - 1):
        suffix = [zero] * k
        acc = zero
        for i in range(k - 1, -1, -1):
            suffix[i] = acc
            acc = padd(acc, f[i][i])
        g = []
        for i in range(k):
            mii = pneg(suffix[i])
            fi = f[i]
            grow = []
            for j in range(k):
                aij = a[i][j]
                total = pmul(mii, aij) if (mii and aij) else zero
                for t in range(i + 1, k):
                    x = fi[t]
                    if x:
                        y = a[t][j]
                        if y:
                            total = padd(total, pmul(x, y))
                grow.append(total)
            g.append(grow)
        f = g
    return f[0][0] if k % 2 else ring.pneg(f[0][0])


def _det_gauss_mod_p(p: int, rows) -> int:
    m = [row[:] for row in rows]
    k = len(m)
    det = 1
    for col in range(k):
        piv = None
        for r in range(col, k):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pivot = m[col][col]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        base = m[col]
        for r in range(col + 1, k):
            f = m[r][col]
            if f:
                f = f * inv % p
                row = m[r]
                row[col + 1 :] = [(x - f * y) % p for x, y in zip(row[col + 1 :], base[col + 1 :])]
    return det % p


def _det_payload(ring: Ring, rows) -> object:
    if isinstance(ring, PrimeField):
        return _det_gauss_mod_p(ring.p, rows)
    return _det_bird(ring, rows)


def det_commutative(mat: Matrix) -> RingValue:
    """Exact determinant over the matrix's (commutative) base ring."""
    if not mat.is_square:
        raise ValueError("determinant of a non-square matrix")
    return RingValue(mat.ring, _det_payload(mat.ring, mat.payload_rows()))


def det_expansion_oracle(mat: Matrix) -> RingValue:
    """Determinant by the signed permutation sum; test oracle only."""
    if not mat.is_square:
        raise ValueError("determinant of a non-square matrix")
    k = mat.rows
    if k > EXPANSION_CAP:
        raise ValueError(f"expansion oracle capped at dimension {EXPANSION_CAP}")
    ring = mat.ring
    padd = ring.padd
    psub = ring.psub
    pmul = ring.pmul
    rows = mat.payload_rows()
    total = ring.int_payload(0)
    one = ring.int_payload(1)
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        prod = one
        for i in range(k):
            e = rows[i][perm[i]]
            if not e:
                prod = None
                break
            prod = pmul(prod, e)
        if prod is None:
            continue
        total = psub(total, prod) if inversions % 2 else padd(total, prod)
    return RingValue(ring, total)


def cofactor_matrix(mat: Matrix) -> Matrix:
    """Matrix of signed minors; satisfies X (Cof X)^t = (det X) I."""
    if not mat.is_square:
        raise ValueError("cofactor matrix of a non-square matrix")
    k = mat.rows
    ring = mat.ring
    if k == 0:
        return mat
    if k == 1:
        return Matrix.identity(ring, 1)
    rows = mat.payload_rows()
    out = []
    for i in range(k):
        orow = []
        for j in range(k):
            sub = [[rows[r][c] for c in range(k) if c != j] for r in range(k) if r != i]
            minor = _det_payload(ring, sub)
            orow.append(minor if (i + j) % 2 == 0 else ring.pneg(minor))
        out.append(orow)
    return Matrix._from_payload_rows(ring, k, k, out)


class BlockMatrix:
    """An n x n array of m x m matrices over a common base ring."""

    __slots__ = ("ring", "m", "n", "blocks")

    def __init__(self, ring: Ring, m: int, n: int, blocks):
        blocks = tuple(tuple(row) for row in blocks)
        if len(blocks) != n or any(len(row) != n for row in blocks):
            raise ValueError(f"expected {n}x{n} blocks")
        for row in blocks:
            for b in row:
                if b.ring != ring:
                    raise RingMismatchError("blocks over different rings")
                if (b.rows, b.cols) != (m, m):
                    raise ValueError(f"every block must be {m}x{m}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("BlockMatrix is immutable")

    @classmethod
    def from_blocks(cls, blocks) -> BlockMatrix:
        blocks = [list(row) for row in blocks]
        first = blocks[0][0]
        return cls(first.ring, first.rows, len(blocks), blocks)

    def block(self, i: int, j: int) -> Matrix:
        """Block at 0-based position (i, j)."""
        return self.blocks[i][j]

    def with_block(self, i: int, j: int, mat: Matrix) -> BlockMatrix:
        rows = [list(row) for row in self.blocks]
        rows[i][j] = mat
        return BlockMatrix(self.ring, self.m, self.n, rows)

    def flatten(self) -> Matrix:
        m, n = self.m, self.n
        entries = []
        for bi in range(n):
            for r in range(m):
                for bj in range(n):
                    blk = self.blocks[bi][bj]
                    entries.extend(blk.entries[r * m : (r + 1) * m])
        return Matrix(self.ring, m * n, m * n, entries)

    def transpose(self) -> BlockMatrix:
        # Block (i, j) of the transpose is the transpose of block (j, i).
        return BlockMatrix(
            self.ring,
            self.m,
            self.n,
            [[self.blocks[j][i].transpose() for j in range(self.n)] for i in range(self.n)],
        )

    def __mul__(self, other: BlockMatrix) -> BlockMatrix:
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        if self.ring != other.ring or self.m != other.m or self.n != other.n:
            raise ValueError("block shape or ring mismatch")
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.blocks[i][0] * other.blocks[0][j]
                for t in range(1, n):
                    acc = acc + self.blocks[i][t] * other.blocks[t][j]
                row.append(acc)
            out.append(row)
        return BlockMatrix(self.ring, self.m, n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.m == other.m
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.ring, self.m, self.n, self.blocks))

    def __repr__(self):
        return f"BlockMatrix(n={self.n}, m={self.m}, ring={self.ring.label})"


def block_flatten(bm: BlockMatrix) -> Matrix:
    return bm.flatten()


def block_view(mat: Matrix, m: int) -> BlockMatrix:
    """View a square matrix as an n x n array of m x m blocks."""
    if not mat.is_square:
        raise ValueError("block view of a non-square matrix")
    if m < 1 or mat.rows % m:
        raise ValueError(f"dimension {mat.rows} not divisible by block size {m}")
    n = mat.rows // m
    blocks = []
    for bi in range(n):
        row = []
        for bj in range(n):
            entries = []
            for r in range(m):
                base = (bi * m + r) * mat.cols + bj * m
                entries.extend(mat.entries[base : base + m])
            row.append(Matrix(mat.ring, m, m, entries))
        blocks.append(row)
    return BlockMatrix(mat.ring, m, n, blocks)


# --- text formats -----------------------------------------------------------

def format_matrix(mat: Matrix) -> str:
    lines = [f"{mat.rows} {mat.cols} {mat.ring.label}"]
    fmt = mat.ring.format_payload
    for i in range(mat.rows):
        lines.append(" ".join(fmt(e.payload) for e in mat.entries[i * mat.cols : (i + 1) * mat.cols]))
    return "\n".join(lines) + "\n"


def _parse_grid(lines, start: int, nrows: int, ncols: int, ring: Ring):
    entries = []
    for r in range(nrows):
        lineno = start + r
        if lineno >= len(lines):
            raise MatrixFormatError(f"line {lineno + 1}: expected {nrows} entry rows, file ended early")
        tokens = lines[lineno].split()
        if len(tokens) != ncols:
            raise MatrixFormatError(f"line {lineno + 1}: expected {ncols} entries, got {len(tokens)}")
        for c, tok in enumerate(tokens):
            try:
                entries.append(RingValue(ring, ring.canonical(ring.parse_payload(tok))))
            except (ValueError, TypeError):
                raise MatrixFormatError(f"line {lineno + 1}, column {c + 1}: bad entry {tok!r}") from None
    return entries


def parse_matrix(text: str) -> Matrix:
    """Parse the plain-text matrix format: ``rows cols ring`` then entry rows."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("line 1: empty input")
    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError("line 1: header must be 'rows cols ring-descriptor'")
    try:
        nrows, ncols = int(header[0]), int(header[1])
        ring = parse_ring(header[2])
    except ValueError as exc:
        raise MatrixFormatError(f"line 1: {exc}") from None
    if nrows < 1 or ncols < 1:
        raise MatrixFormatError("line 1: dimensions must be positive")
    return Matrix(ring, nrows, ncols, _parse_grid(lines, 1, nrows, ncols, ring))


def format_block_matrix(bm: BlockMatrix) -> str:
    flat = bm.flatten()
    lines = [f"{bm.m} {bm.n} {bm.ring.label}"]
    fmt = bm.ring.format_payload
    k = flat.rows
    for i in range(k):
        lines.append(" ".join(fmt(e.payload) for e in flat.entries[i * k : (i + 1) * k]))
    return "\n".join(lines) + "\n"


def parse_block_matrix(text: str) -> BlockMatrix:
    """Parse the block-matrix format: ``m n ring`` then the mn x mn entries."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("line 1: empty input")
    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError("line 1: header must be 'm n ring-descriptor'")
    try:
        m, n = int(header[0]), int(header[1])
        ring = parse_ring(header[2])
    except ValueError as exc:
        raise MatrixFormatError(f"line 1: {exc}") from None
    if m < 1 or n < 1:
        raise MatrixFormatError("line 1: block sizes must be positive")
    k = m * n
    flat = Matrix(ring, k, k, _parse_grid(lines, 1, k, k, ring))
    return block_view(flat, m)
