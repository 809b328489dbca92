"""Row-ordered noncommutative determinants of block matrices.

The determinant of a block matrix over the (noncommutative) ring of m x m
blocks is the signed permutation sum with each product's factors ordered by
row index.  Minors, cofactors, the first-column cofactor identity and a
checkable trace of the polynomial-extension induction live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .matrix import BlockMatrix, Matrix, det_commutative
from .ring import IntegerRing, PolynomialRing, RingValue, poly_is_monic

ROW_DET_CAP = 8


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"transposition ({a} {b}) out of range for degree {n}")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> Permutation:
        """Extend a partial injective map on {1..n} to a permutation.

        Unassigned sources take the remaining targets in increasing order.
        """
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("mapping is not injective")
        free = [t for t in range(1, n + 1) if t not in mapping.values()]
        images = []
        it = iter(free)
        for i in range(1, n + 1):
            images.append(mapping[i] if i in mapping else next(it))
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """Permutation mapping i to self(other(i))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    @property
    def sign(self) -> int:
        # Cycle decomposition: sign = (-1)^(n - number of cycles).
        seen = [False] * self.n
        cycles = 0
        for start in range(self.n):
            if seen[start]:
                continue
            cycles += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.images[i] - 1
        return 1 if (self.n - cycles) % 2 == 0 else -1


def permutations_of(n: int):
    """All permutations of degree n."""
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


def nc_row_det(bm: BlockMatrix) -> Matrix:
    """Signed permutation sum with factors ordered by block row."""
    n = bm.n
    if n > ROW_DET_CAP:
        raise ValueError(f"row-determinant capped at n={ROW_DET_CAP}")
    blocks = bm.blocks
    total = None
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = blocks[0][perm[0]]
        for i in range(1, n):
            prod = prod * blocks[i][perm[i]]
        if inversions % 2:
            prod = -prod
        total = prod if total is None else total + prod
    return total


def nc_minor_det(bm: BlockMatrix, i: int, j: int) -> Matrix:
    """Row-determinant after removing block row i and block column j (1-based)."""
    n = bm.n
    if n < 2:
        raise ValueError("minors need n >= 2")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"minor index ({i},{j}) out of range for n={n}")
    rows = [
        [bm.blocks[r][c] for c in range(n) if c != j - 1]
        for r in range(n)
        if r != i - 1
    ]
    return nc_row_det(BlockMatrix(bm.ring, bm.m, n - 1, rows))


def nc_cofactor(bm: BlockMatrix, i: int, j: int) -> Matrix:
    """Signed minor: (-1)^(i+j) times the (i, j) minor determinant."""
    minor = nc_minor_det(bm, i, j)
    return minor if (i + j) % 2 == 0 else -minor


def cofactor_column_check(bm: BlockMatrix) -> bool:
    """Check the first-column cofactor identity, blockwise and exactly.

    Multiplying the matrix by the column of first-row cofactors must give
    (Det, 0, ..., 0)^t.  Guaranteed when every pair of blocks outside row 1
    and in different columns commutes; reported honestly for any input.
    """
    n = bm.n
    if n == 1:
        return True
    cofs = [nc_cofactor(bm, 1, j) for j in range(1, n + 1)]
    zero = Matrix.zeros(bm.ring, bm.m, bm.m)
    for r in range(n):
        acc = zero
        for c in range(n):
            acc = acc + bm.blocks[r][c] * cofs[c]
        expected = nc_row_det(bm) if r == 0 else zero
        if acc != expected:
            return False
    return True


@dataclass(frozen=True)
class BourbakiChecks:
    """Outcomes of the polynomial-extension induction checks."""

    first_column_collapse: bool
    lower_det_monic: bool
    det_product_identity: bool
    induction_step: bool
    identity_at_zero: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.first_column_collapse
            and self.lower_det_monic
            and self.det_product_identity
            and self.induction_step
            and self.identity_at_zero
        )


@dataclass(frozen=True)
class BourbakiTrace:
    """Intermediate objects of the inductive determinant argument.

    ``shifted`` is the input with the polynomial variable added to each
    diagonal entry of each diagonal block; ``eliminator`` is the identity
    with its first block column replaced by the first-row cofactors of the
    shifted matrix; ``product`` is their product, whose first column must
    collapse to (Det, 0, ..., 0)^t; ``tail`` is the shifted matrix without
    its first block row and column.
    """

    shifted: BlockMatrix
    eliminator: BlockMatrix
    product: BlockMatrix
    tail: BlockMatrix
    shifted_det: Matrix
    checks: BourbakiChecks


def bourbaki_trace(bm: BlockMatrix) -> BourbakiTrace:
    """Build and verify the objects of the inductive determinant proof.

    Requires an integer base ring (the construction works over its
    polynomial extension).  With blocks satisfying the row-one-free
    commutation family all checks pass; for other inputs the failures are
    reported in the checks record rather than raised.
    """
    if not isinstance(bm.ring, IntegerRing):
        raise ValueError("trace construction requires the integer base ring")
    n, m = bm.n, bm.m
    if n < 2:
        raise ValueError("trace construction needs n >= 2")
    rz = PolynomialRing("z")

    def lift(block: Matrix, add_z_diag: bool) -> Matrix:
        entries = []
        for r in range(m):
            for c in range(m):
                coeffs = [block.entry(r, c).payload]
                if add_z_diag and r == c:
                    coeffs.append(1)
                entries.append(RingValue(rz, rz.canonical(coeffs)))
        return Matrix(rz, m, m, entries)

    shifted = BlockMatrix(
        rz, m, n,
        [[lift(bm.blocks[i][j], i == j) for j in range(n)] for i in range(n)],
    )

    cofs = [nc_cofactor(shifted, 1, j) for j in range(1, n + 1)]
    ident = Matrix.identity(rz, m)
    zero = Matrix.zeros(rz, m, m)
    eliminator = BlockMatrix(
        rz, m, n,
        [
            [cofs[i] if j == 0 else (ident if i == j else zero) for j in range(n)]
            for i in range(n)
        ],
    )
    product = shifted * eliminator
    shifted_det = nc_row_det(shifted)

    expected = shifted.with_block(0, 0, shifted_det)
    for i in range(1, n):
        expected = expected.with_block(i, 0, zero)
    first_column_collapse = product == expected

    tail = BlockMatrix(
        rz, m, n - 1,
        [[shifted.blocks[i][j] for j in range(1, n)] for i in range(1, n)],
    )

    det_tail = det_commutative(tail.flatten())
    lower_det_monic = poly_is_monic(det_tail) and len(det_tail.payload) - 1 == m * (n - 1)

    det_shifted_flat = det_commutative(shifted.flatten())
    det_eliminator = det_commutative(eliminator.flatten())
    det_of_block_det = det_commutative(shifted_det)
    det_product_identity = det_shifted_flat * det_eliminator == det_of_block_det * det_tail
    induction_step = det_tail == det_commutative(cofs[0]) and det_tail == det_eliminator

    identity_at_zero = det_commutative(nc_row_det(bm)) == det_commutative(bm.flatten())

    return BourbakiTrace(
        shifted=shifted,
        eliminator=eliminator,
        product=product,
        tail=tail,
        shifted_det=shifted_det,
        checks=BourbakiChecks(
            first_column_collapse=first_column_collapse,
            lower_det_monic=lower_det_monic,
            det_product_identity=det_product_identity,
            induction_step=induction_step,
            identity_at_zero=identity_at_zero,
        ),
    )
