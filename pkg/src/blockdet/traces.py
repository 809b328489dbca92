"""Free partially-commutative algebra over the integers.

Words are sequences of grid positions (row, col); a commutation relation
declares which pairs of positions may swap when adjacent.  Polynomials keep
their monomials in a canonical normal form, which makes equality of the
symbolic determinant expansions decidable.  This is the engine behind the
column-swap, transpose and row-swap ordering identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .conditions import Condition, cond_kappa, cond_t_col

Letter = tuple[int, int]
Word = tuple[Letter, ...]

SYMBOLIC_DET_CAP = 6
TRANSPOSE_CAP = 5
ROWSWAP_CAP = 5


def _pair(a: Letter, b: Letter) -> tuple[Letter, Letter]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class CommRel:
    """Symmetric, irreflexive relation on grid positions of one size."""

    n: int
    edges: frozenset[tuple[Letter, Letter]]

    def __post_init__(self):
        canon = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"reflexive pair at {a}")
            for r, c in (a, b):
                if not (1 <= r <= self.n and 1 <= c <= self.n):
                    raise ValueError(f"letter {(r, c)} out of range for size {self.n}")
            canon.add(_pair(a, b))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def empty(cls, n: int) -> CommRel:
        return cls(n, frozenset())

    @classmethod
    def full(cls, n: int) -> CommRel:
        letters = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        return cls(n, frozenset(_pair(a, b) for x, a in enumerate(letters) for b in letters[x + 1 :]))

    @classmethod
    def from_condition(cls, cond: Condition) -> CommRel:
        return cls(cond.n, frozenset(cond.edges))

    def commutes(self, a: Letter, b: Letter) -> bool:
        return a != b and _pair(a, b) in self.edges


def _check_word(word: Word, rel: CommRel) -> None:
    for r, c in word:
        if not (1 <= r <= rel.n and 1 <= c <= rel.n):
            raise ValueError(f"letter {(r, c)} out of range for size {rel.n}")


def word_normal_form(word: Word, rel: CommRel) -> Word:
    """Lexicographically least representative of the word's trace class.

    Greedy: repeatedly emit the least letter that commutes with everything
    before it.  Letters compare by (row, col).  Idempotent and
    length-preserving; equal letters never commute, so their relative order
    is fixed.
    """
    _check_word(word, rel)
    letters = list(word)
    out: list[Letter] = []
    while letters:
        best = None
        for idx, lt in enumerate(letters):
            movable = True
            for prev in letters[:idx]:
                if not rel.commutes(lt, prev):
                    movable = False
                    break
            if movable and (best is None or lt < letters[best]):
                best = idx
        out.append(letters.pop(best))
    return tuple(out)


def trace_equal(u: Word, v: Word, rel: CommRel) -> bool:
    """Equality of trace classes, via normal forms."""
    return word_normal_form(u, rel) == word_normal_form(v, rel)


def trace_equal_by_projection(u: Word, v: Word, rel: CommRel) -> bool:
    """Independent equality test: equal letter multisets and equal
    projections onto every non-commuting pair of letters."""
    _check_word(u, rel)
    _check_word(v, rel)
    if sorted(u) != sorted(v):
        return False
    letters = sorted(set(u))
    for x, a in enumerate(letters):
        for b in letters[x + 1 :]:
            if rel.commutes(a, b):
                continue
            pu = tuple(lt for lt in u if lt == a or lt == b)
            pv = tuple(lt for lt in v if lt == a or lt == b)
            if pu != pv:
                return False
    return True


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return "".join(f"({r},{c})" for r, c in word)


class TracePoly:
    """Integer linear combination of trace-monoid words."""

    __slots__ = ("rel", "terms")

    def __init__(self, rel: CommRel, terms: dict[Word, int] | None = None, *, _normalized: bool = False):
        if terms is None:
            terms = {}
        if not _normalized:
            canon: dict[Word, int] = {}
            for word, coeff in terms.items():
                if not coeff:
                    continue
                key = word_normal_form(word, rel)
                canon[key] = canon.get(key, 0) + coeff
            terms = {w: c for w, c in canon.items() if c}
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, name, value):
        raise AttributeError("TracePoly is immutable")

    @property
    def n(self) -> int:
        return self.rel.n

    @classmethod
    def zero(cls, rel: CommRel) -> TracePoly:
        return cls(rel, {}, _normalized=True)

    @classmethod
    def one(cls, rel: CommRel) -> TracePoly:
        return cls(rel, {(): 1}, _normalized=True)

    @classmethod
    def from_word(cls, rel: CommRel, word: Word, coeff: int = 1) -> TracePoly:
        return cls(rel, {tuple(word): coeff})

    def _check_rel(self, other: TracePoly) -> None:
        if self.rel != other.rel:
            raise ValueError("trace polynomials over different relations")

    def __add__(self, other: TracePoly) -> TracePoly:
        self._check_rel(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return TracePoly(self.rel, out, _normalized=True)

    def __neg__(self) -> TracePoly:
        return TracePoly(self.rel, {w: -c for w, c in self.terms.items()}, _normalized=True)

    def __sub__(self, other: TracePoly) -> TracePoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TracePoly.zero(self.rel)
            return TracePoly(self.rel, {w: c * other for w, c in self.terms.items()}, _normalized=True)
        self._check_rel(other)
        out: dict[Word, int] = {}
        rel = self.rel
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = word_normal_form(w1 + w2, rel)
                nc = out.get(key, 0) + c1 * c2
                if nc:
                    out[key] = nc
                else:
                    out.pop(key, None)
        return TracePoly(self.rel, out, _normalized=True)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TracePoly):
            return NotImplemented
        return self.rel == other.rel and self.terms == other.terms

    def __hash__(self):
        return hash((self.rel, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms):
            coeff = self.terms[word]
            sign = "+" if coeff > 0 else "-"
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            parts.append(f"{sign}{mag}{format_word(word)}")
        return " ".join(parts)


def _signed_perms(n: int):
    for images in permutations(range(1, n + 1)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if images[a] > images[b]
        )
        yield images, (-1 if inversions % 2 else 1)


def _det_from_words(rel: CommRel, words_and_signs) -> TracePoly:
    terms: dict[Word, int] = {}
    for word, sign in words_and_signs:
        key = word_normal_form(word, rel)
        nc = terms.get(key, 0) + sign
        if nc:
            terms[key] = nc
        else:
            terms.pop(key, None)
    return TracePoly(rel, terms, _normalized=True)


def symbolic_row_det(n: int, rel: CommRel) -> TracePoly:
    """Row-ordered determinant of the generic n x n matrix of positions."""
    if n > SYMBOLIC_DET_CAP:
        raise ValueError(f"symbolic determinant capped at n={SYMBOLIC_DET_CAP}")
    if rel.n != n:
        raise ValueError(f"relation size {rel.n} does not match n={n}")
    return _det_from_words(
        rel,
        ((tuple((r, images[r - 1]) for r in range(1, n + 1)), sign) for images, sign in _signed_perms(n)),
    )


def check_colswap_identity(n: int, k: int) -> bool:
    """Swapping adjacent columns k, k+1 negates the row determinant.

    Holds with no commutation at all: each product stays ordered by row, so
    the two sides match word for word.  Verified under the empty relation.
    """
    if not (1 <= k < n <= SYMBOLIC_DET_CAP):
        raise ValueError(f"need 1 <= k < n <= {SYMBOLIC_DET_CAP}, got k={k}, n={n}")
    rel = CommRel.empty(n)
    base = symbolic_row_det(n, rel)

    def tau(c: int) -> int:
        if c == k:
            return k + 1
        if c == k + 1:
            return k
        return c

    swapped = _det_from_words(
        rel,
        (
            (tuple((r, tau(images[r - 1])) for r in range(1, n + 1)), sign)
            for images, sign in _signed_perms(n)
        ),
    )
    return swapped == -base


def check_transpose_identity(n: int, c: int) -> bool:
    """Transposing and re-transposing preserves the row determinant.

    The expansion of the double transpose orders each product by descending
    column; it must equal the row-ordered expansion under the column-c
    compatibility relation.  False under weaker relations in general.
    """
    if not (1 <= c <= n <= TRANSPOSE_CAP):
        raise ValueError(f"need 1 <= c <= n <= {TRANSPOSE_CAP}, got c={c}, n={n}")
    rel = CommRel.from_condition(cond_t_col(c, n))
    rhs = symbolic_row_det(n, rel)
    lhs = _det_from_words(
        rel,
        (
            (tuple((images[col - 1], col) for col in range(n, 0, -1)), sign)
            for images, sign in _signed_perms(n)
        ),
    )
    return lhs == rhs


def check_rowswap_identity(
    n: int, i: int, j: int, missing_edge: tuple[Letter, Letter] | None = None
) -> bool:
    """Swapping rows i and j negates the row determinant, under the relation
    where all pairs of positions outside row 1 commute except one withheld
    pair.

    True whenever the withheld pair shares a row or a column (the two
    letters never meet in one monomial), or when the swap preserves the
    relative order of the withheld pair's rows.  Returns the honest truth
    of the identity either way.
    """
    if not (2 <= i < j <= n <= ROWSWAP_CAP):
        raise ValueError(f"need 2 <= i < j <= n <= {ROWSWAP_CAP}, got i={i}, j={j}, n={n}")
    base = cond_kappa(n)
    edges = set(base.edges)
    if missing_edge is not None:
        a, b = missing_edge
        for r, _ in (a, b):
            if r < 2:
                raise ValueError("withheld pair must lie outside row 1")
        key = _pair(tuple(a), tuple(b))
        if key not in edges:
            raise ValueError(f"{missing_edge} is not a pair of distinct positions outside row 1")
        edges.remove(key)
    rel = CommRel(n, frozenset(edges))
    rhs = symbolic_row_det(n, rel)

    def sigma(r: int) -> int:
        if r == i:
            return j
        if r == j:
            return i
        return r

    lhs = _det_from_words(
        rel,
        (
            (tuple((sigma(r), images[r - 1]) for r in range(1, n + 1)), sign)
            for images, sign in _signed_perms(n)
        ),
    )
    return lhs == -rhs
