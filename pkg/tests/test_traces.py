import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from blockdet.conditions import cond_kappa
from blockdet.matrix import BlockMatrix, Matrix
from blockdet.ncdet import nc_row_det
from blockdet.ring import PrimeField
from blockdet.traces import (
    CommRel,
    TracePoly,
    check_colswap_identity,
    check_rowswap_identity,
    check_transpose_identity,
    format_word,
    symbolic_row_det,
    trace_equal,
    trace_equal_by_projection,
    word_normal_form,
)
from blockdet.verify import _dense, _scalar, _slot

F10007 = PrimeField(10007)


def letters_of(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def rand_rel(n, rng, density=0.4):
    pairs = list(combinations(letters_of(n), 2))
    return CommRel(n, frozenset(p for p in pairs if rng.random() < density))


def rand_word(n, rng, max_len=8):
    pool = letters_of(n)
    return tuple(rng.choice(pool) for _ in range(rng.randrange(0, max_len + 1)))


def scramble(word, rel, rng, swaps=12):
    # random walk over allowed adjacent swaps: stays in the trace class
    w = list(word)
    for _ in range(swaps):
        if len(w) < 2:
            break
        i = rng.randrange(len(w) - 1)
        if rel.commutes(w[i], w[i + 1]):
            w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


class TestNormalForm:
    def test_empty_relation_keeps_word(self):
        rel = CommRel.empty(3)
        rng = random.Random(0)
        for _ in range(50):
            w = rand_word(3, rng)
            assert word_normal_form(w, rel) == w

    def test_full_relation_sorts(self):
        rel = CommRel.full(3)
        rng = random.Random(1)
        for _ in range(50):
            w = rand_word(3, rng)
            assert word_normal_form(w, rel) == tuple(sorted(w))

    def test_single_swap(self):
        rel = CommRel(2, frozenset({(((2, 1)), ((2, 2)))}))
        assert word_normal_form(((2, 2), (2, 1)), rel) == ((2, 1), (2, 2))

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError):
            word_normal_form(((3, 1),), CommRel.empty(2))

    def test_idempotent_and_multiset_preserving(self):
        rng = random.Random(2)
        for _ in range(200):
            n = rng.randrange(2, 5)
            rel = rand_rel(n, rng)
            w = rand_word(n, rng)
            nf = word_normal_form(w, rel)
            assert word_normal_form(nf, rel) == nf
            assert sorted(nf) == sorted(w)


@settings(max_examples=200)
@given(st.data())
def test_normal_form_reachable_scrambles_agree(data):
    n = data.draw(st.integers(min_value=2, max_value=4))
    rng = random.Random(data.draw(st.integers(min_value=0, max_value=10**6)))
    rel = rand_rel(n, rng)
    w = rand_word(n, rng)
    v = scramble(w, rel, rng)
    assert word_normal_form(w, rel) == word_normal_form(v, rel)


class TestTraceEqual:
    def test_reflexive(self):
        rel = CommRel.empty(2)
        w = ((1, 1), (2, 2))
        assert trace_equal(w, w, rel)

    def test_edge_present_vs_absent(self):
        u = ((2, 1), (3, 2))
        v = ((3, 2), (2, 1))
        with_edge = CommRel(3, frozenset({((2, 1), (3, 2))}))
        without = CommRel.empty(3)
        assert trace_equal(u, v, with_edge)
        assert not trace_equal(u, v, without)

    def test_projection_agrees_with_normal_form(self):
        # dual-route equality decision on >= 1000 random pairs
        rng = random.Random(3)
        agree = 0
        for _ in range(1100):
            n = rng.randrange(2, 5)
            rel = rand_rel(n, rng)
            w = rand_word(n, rng)
            if rng.random() < 0.5:
                v = scramble(w, rel, rng)
            else:
                v = rand_word(n, rng)
            a = trace_equal(w, v, rel)
            b = trace_equal_by_projection(w, v, rel)
            assert a == b
            agree += 1
        assert agree >= 1000


class TestTracePoly:
    def test_multiply_by_one(self):
        rel = CommRel.empty(2)
        x = TracePoly.from_word(rel, ((1, 1), (2, 2))) - TracePoly.from_word(rel, ((1, 2),))
        assert x * TracePoly.one(rel) == x

    def test_difference_of_squares_commuting(self):
        rel = CommRel(2, frozenset({((1, 1), (1, 2))}))
        g = TracePoly.from_word(rel, ((1, 1),))
        h = TracePoly.from_word(rel, ((1, 2),))
        prod = (g - h) * (g + h)
        want = TracePoly.from_word(rel, ((1, 1), (1, 1))) - TracePoly.from_word(rel, ((1, 2), (1, 2)))
        assert prod == want
        assert prod.term_count == 2

    def test_difference_of_squares_noncommuting(self):
        rel = CommRel.empty(2)
        g = TracePoly.from_word(rel, ((1, 1),))
        h = TracePoly.from_word(rel, ((1, 2),))
        assert ((g - h) * (g + h)).term_count == 4

    def test_associative_distributive_randomized(self):
        rng = random.Random(4)
        for _ in range(40):
            n = 3
            rel = rand_rel(n, rng)
            polys = []
            for _ in range(3):
                terms = {rand_word(n, rng, max_len=3): rng.randrange(-3, 4) for _ in range(3)}
                polys.append(TracePoly(rel, terms))
            x, y, z = polys
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_relation_mismatch(self):
        with pytest.raises(ValueError):
            TracePoly.one(CommRel.empty(2)) * TracePoly.one(CommRel.full(2))

    def test_int_scaling_and_repr(self):
        rel = CommRel.empty(2)
        x = TracePoly.from_word(rel, ((1, 1),), 2)
        assert 3 * x == TracePoly.from_word(rel, ((1, 1),), 6)
        assert x * 0 == TracePoly.zero(rel)
        assert repr(TracePoly.zero(rel)) == "0"
        assert format_word(()) == "1"
        assert "(1,1)" in repr(x)


class TestSymbolicRowDet:
    def test_single_generator(self):
        rel = CommRel.empty(1)
        assert symbolic_row_det(1, rel) == TracePoly.from_word(rel, ((1, 1),))

    def test_two_by_two_free(self):
        rel = CommRel.empty(2)
        want = TracePoly.from_word(rel, ((1, 1), (2, 2))) - TracePoly.from_word(rel, ((1, 2), (2, 1)))
        assert symbolic_row_det(2, rel) == want

    def test_family_edge_never_reorders_size2(self):
        free = symbolic_row_det(2, CommRel.empty(2))
        rel = CommRel(2, frozenset({((2, 1), (2, 2))}))
        under_family = symbolic_row_det(2, rel)
        assert set(free.terms) == set(under_family.terms)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_full_relation_has_factorial_terms(self, n):
        poly = symbolic_row_det(n, CommRel.full(n))
        import math

        assert poly.term_count == math.factorial(n)
        assert all(c in (-1, 1) for c in poly.terms.values())

    def test_cap(self):
        with pytest.raises(ValueError):
            symbolic_row_det(7, CommRel.empty(7))


class TestColswap:
    @pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
    def test_adjacent_swaps_negate(self, n, k):
        assert check_colswap_identity(n, k)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            check_colswap_identity(2, 2)
        with pytest.raises(ValueError):
            check_colswap_identity(7, 1)


class TestTranspose:
    @pytest.mark.parametrize("n,c", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
    def test_holds_under_column_relation(self, n, c):
        assert check_transpose_identity(n, c)

    def test_fails_under_empty_relation(self):
        # same two expansions, no commutation: the orders cannot match
        rel = CommRel.empty(2)
        rhs = symbolic_row_det(2, rel)
        lhs_terms = {
            ((2, 2), (1, 1)): 1,
            ((1, 2), (2, 1)): -1,
        }
        lhs = TracePoly(rel, lhs_terms)
        assert lhs != rhs

    def test_range_errors(self):
        with pytest.raises(ValueError):
            check_transpose_identity(6, 1)
        with pytest.raises(ValueError):
            check_transpose_identity(2, 3)


class TestRowswap:
    def test_same_row_pairs_pass(self):
        assert check_rowswap_identity(3, 2, 3, ((2, 1), (2, 2)))
        assert check_rowswap_identity(3, 2, 3, ((3, 1), (3, 2)))

    def test_same_column_pair_passes(self):
        assert check_rowswap_identity(3, 2, 3, ((2, 1), (3, 1)))

    def test_no_missing_edge_reduces_to_commutative(self):
        assert check_rowswap_identity(3, 2, 3, None)

    def test_order_reversing_swap_fails(self):
        # swapping the two rows of the withheld pair reverses their order
        # inside mixed monomials; the identity is genuinely false there
        assert not check_rowswap_identity(3, 2, 3, ((2, 1), (3, 2)))

    def test_order_preserving_windows_pass(self):
        assert check_rowswap_identity(4, 3, 4, ((2, 1), (3, 2)))
        assert check_rowswap_identity(5, 2, 5, ((3, 1), (4, 2)))

    def test_order_reversing_window_fails(self):
        assert not check_rowswap_identity(4, 2, 3, ((2, 4), (3, 1)))

    def test_errors(self):
        with pytest.raises(ValueError):
            check_rowswap_identity(3, 3, 2, None)
        with pytest.raises(ValueError):
            check_rowswap_identity(3, 2, 3, ((1, 1), (2, 2)))
        with pytest.raises(ValueError):
            check_rowswap_identity(6, 2, 3, None)

    def _numeric_instance(self, n, i, j, missing, seed):
        # blocks realizing exactly the relation: perturbations share a slot
        # only at the withheld pair, everything else outside row 1 scalar
        rng = random.Random(seed)
        blocks = []
        for r in range(1, n + 1):
            row = []
            for c in range(1, n + 1):
                if r == 1:
                    row.append(_dense(F10007, 4, rng))
                elif missing is not None and (r, c) in missing:
                    row.append(_slot(F10007, 4, rng, 1))
                else:
                    row.append(_scalar(F10007, 4, rng))
            blocks.append(row)
        bm = BlockMatrix(F10007, 4, n, blocks)
        order = [1] + [j if r == i else i if r == j else r for r in range(2, n + 1)]
        swapped = BlockMatrix(F10007, 4, n, [blocks[r - 1] for r in order])
        return nc_row_det(swapped) == -nc_row_det(bm)

    @pytest.mark.parametrize(
        "missing,expected",
        [
            (((2, 1), (2, 2)), True),
            (((2, 1), (3, 1)), True),
            (None, True),
            (((2, 1), (3, 2)), False),
        ],
    )
    def test_numeric_matrices_agree_with_symbolic_verdict(self, missing, expected):
        symbolic = check_rowswap_identity(3, 2, 3, missing)
        assert symbolic == expected
        numeric = all(self._numeric_instance(3, 2, 3, missing, seed) for seed in range(4))
        assert numeric == expected


class TestEvaluationHomomorphism:
    def _assignment(self, n, rel, rng, m=4):
        # concrete blocks whose commutation refines the relation: scalars
        # everywhere except one non-related pair sharing a slot
        non_edges = [
            p
            for p in combinations(letters_of(n), 2)
            if not rel.commutes(*p) and p[0][0] >= 2 and p[1][0] >= 2
        ]
        special = non_edges[0] if non_edges else None
        out = {}
        for lt in letters_of(n):
            if special and lt in special:
                out[lt] = _slot(F10007, m, rng, 1)
            else:
                out[lt] = _scalar(F10007, m, rng)
        return out

    def evaluate(self, poly, assignment, m=4):
        total = Matrix.zeros(F10007, m, m)
        ident = Matrix.identity(F10007, m)
        for word, coeff in poly.terms.items():
            prod = ident
            for lt in word:
                prod = prod * assignment[lt]
            total = total + prod.scale(F10007.from_int(coeff))
        return total

    @pytest.mark.parametrize("n", [2, 3])
    def test_symbolic_det_evaluates_to_numeric_det(self, n):
        rng = random.Random(42 + n)
        rel = CommRel.from_condition(cond_kappa(n))
        edges = set(rel.edges)
        edges.discard(((2, 1), (2, 2)))
        rel = CommRel(n, frozenset(edges))
        for _ in range(5):
            assignment = self._assignment(n, rel, rng)
            blocks = [[assignment[(i, j)] for j in range(1, n + 1)] for i in range(1, n + 1)]
            bm = BlockMatrix(F10007, 4, n, blocks)
            poly = symbolic_row_det(n, rel)
            assert self.evaluate(poly, assignment) == nc_row_det(bm)
