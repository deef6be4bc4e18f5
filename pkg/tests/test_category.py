"""Purification, blocks, fusion, quantum dimensions and modular data.

Small-rank frozen oracles: the (N,K) = (2,1) theory is the semion
(two labels, qdim 1, twist i), and (2,2) realizes the Ising fusion
ring with S~ = [[1, [2], 1], [[2], 0, -[2]], [1, -[2], 1]] where
[2] = sqrt(2).  Level-1 theories are the abelian Z_N anyons."""

import cmath
import math
from fractions import Fraction

import pytest

from hsk import (
    GRAM_LIMIT,
    HeckeElement,
    Params,
    YoungDiagram,
    branching_multiplicity,
    central_idempotents,
    curl_scalar,
    dagger,
    fusion,
    fusion_matrix,
    fusion_table,
    gamma_n,
    labels,
    loop_power,
    mf_dim,
    minimal_idempotent,
    path_count,
    purified_algebra,
    purified_dim,
    qdim,
    qint,
    s_matrix,
    twist,
)
from hsk.trace import CURL_MATCH_SIGN

PARAMS = [Params(2, 1), Params(2, 2), Params(3, 1), Params(3, 2), Params(4, 1)]
EMPTY = YoungDiagram.of()
BOX = YoungDiagram.of(1)


def in_radical(p: Params, n: int, x: HeckeElement) -> bool:
    """x lies in the radical of the trace form iff its image in the
    purified algebra A_n vanishes."""
    return all(c.is_zero() for c in purified_algebra(p, n).reduce(x))


class TestPurifiedDim:
    def test_rank_sequences(self):
        expected = {
            (2, 2): [1, 2, 4, 8, 16],
            (3, 2): [1, 2, 5, 13],
            (2, 1): [1, 1, 1, 1],
            (3, 1): [1, 1, 1, 1],
            (4, 1): [1, 1, 1, 1],
        }
        for (N, K), seq in expected.items():
            p = Params(N, K)
            for n, want in enumerate(seq, start=1):
                d = purified_dim(p, n)
                assert d.dim == want
                assert d.radical_dim == math.factorial(n) - want

    def test_dim_is_sum_of_squared_path_counts(self):
        for p in PARAMS:
            for n in (2, 3, 4):
                assert purified_dim(p, n).dim == sum(
                    path_count(p, n, d) ** 2 for d in gamma_n(p, n)
                )


class TestBlocks:
    def test_block_labels_and_dims(self):
        for p in PARAMS:
            for n in (2, 3, 4):
                bd = central_idempotents(p, n)
                assert set(bd.blocks) == set(gamma_n(p, n))
                for d, entry in bd.blocks.items():
                    assert entry.dim == path_count(p, n, d)

    def test_resolution_of_identity_mod_radical(self):
        for p in PARAMS[:3]:
            for n in (2, 3, 4):
                bd = central_idempotents(p, n)
                total = HeckeElement.identity(p, n).scale(-p.one)
                for entry in bd.blocks.values():
                    total = total + entry.z
                assert in_radical(p, n, total)

    def test_orthogonal_idempotents_mod_radical(self):
        p = Params(2, 2)
        n = 3
        bd = central_idempotents(p, n)
        items = list(bd.blocks.values())
        for i, a in enumerate(items):
            assert in_radical(p, n, a.z * a.z + a.z.scale(-p.one))
            for b in items[i + 1:]:
                assert in_radical(p, n, a.z * b.z)

    def test_central_mod_radical(self):
        from hsk.hecke import random_element
        from random import Random

        rng = Random(21)
        p = Params(3, 2)
        n = 3
        bd = central_idempotents(p, n)
        x = random_element(p, n, rng)
        for entry in bd.blocks.values():
            assert in_radical(p, n, entry.z * x + (x * entry.z).scale(-p.one))

    def test_minimal_idempotent_traces_are_nonzero(self):
        p = Params(2, 2)
        for n in (2, 3, 4):
            from hsk import markov_trace

            for d in gamma_n(p, n):
                e = minimal_idempotent(p, n, d)
                assert e * e == e
                assert not markov_trace(p, e).is_zero()

    def test_minimal_idempotent_rejects_non_label(self):
        with pytest.raises(ValueError):
            minimal_idempotent(Params(2, 2), 3, YoungDiagram.of(3))

    def test_json_shape(self):
        bd = central_idempotents(Params(2, 2), 3)
        data = bd.to_json()
        assert data["n"] == 3
        assert data["labels"] == [[1]]
        assert data["dims"] == {"[1]": 2}


class TestBranching:
    def test_multiplicities_match_path_recursion(self):
        # sum over sub-blocks of multiplicity * dim reproduces the dim
        for p in PARAMS:
            for n in (2, 3, 4):
                for lam in gamma_n(p, n):
                    mults = {
                        sub: branching_multiplicity(p, n, lam, sub)
                        for sub in gamma_n(p, n - 1)
                    }
                    assert all(m in (0, 1) for m in mults.values())
                    assert path_count(p, n, lam) == sum(
                        m * path_count(p, n - 1, sub) for sub, m in mults.items()
                    )

    def test_known_values(self):
        p = Params(3, 2)
        # the 5-strand (1,1) block restricts to (1) and (2,2)
        assert branching_multiplicity(p, 5, YoungDiagram.of(1, 1), YoungDiagram.of(1)) == 1
        assert branching_multiplicity(
            p, 5, YoungDiagram.of(1, 1), YoungDiagram.of(2, 2)
        ) == 1
        # the (2) block of A_5 restricts to (1) only
        assert branching_multiplicity(p, 5, YoungDiagram.of(2), YoungDiagram.of(2, 2)) == 0

    def test_rejects_non_labels(self):
        p = Params(2, 2)
        with pytest.raises(ValueError):
            branching_multiplicity(p, 3, YoungDiagram.of(3), YoungDiagram.of(2))
        with pytest.raises(ValueError):
            branching_multiplicity(p, 3, YoungDiagram.of(1), YoungDiagram.of(1))


SU2_LEVEL2 = {
    # Ising ring on labels {1, sigma, psi} = {[], [1], [2]}
    ((), (), ()): 1,
    ((1,), (1,), ()): 1,
    ((1,), (1,), (2,)): 1,
    ((1,), (1,), (1,)): 0,
    ((2,), (2,), ()): 1,
    ((2,), (2,), (2,)): 0,
    ((1,), (2,), (1,)): 1,
    ((1,), (2,), ()): 0,
}


class TestFusion:
    def test_su2_level2_ring(self):
        p = Params(2, 2)
        for (a, b, c), want in SU2_LEVEL2.items():
            assert fusion(p, YoungDiagram(a), YoungDiagram(b), YoungDiagram(c)) == want

    def test_unit(self):
        for p in PARAMS[:3]:
            for lam in labels(p):
                for nu in labels(p):
                    assert fusion(p, lam, EMPTY, nu) == (1 if nu == lam else 0)

    def test_symmetry(self):
        p = Params(3, 1)
        labs = labels(p)
        for lam in labs:
            for mu in labs:
                for nu in labs:
                    if lam.size + mu.size > GRAM_LIMIT:
                        continue
                    assert fusion(p, lam, mu, nu) == fusion(p, mu, lam, nu)

    def test_level_one_is_cyclic_group(self):
        # at K = 1 the labels are the N one-column diagrams and fusion
        # adds column heights mod N
        for N in (2, 3, 4):
            p = Params(N, 1)
            cols = [YoungDiagram.of(*([1] * h)) for h in range(N)]
            for a in range(N):
                for b in range(N):
                    for c in range(N):
                        want = 1 if (a + b) % N == c else 0
                        assert fusion(p, cols[a], cols[b], cols[c]) == want

    def test_su3_level2_square(self):
        # (2) x (2) contains only (2,2) among the labels
        p = Params(3, 2)
        two = YoungDiagram.of(2)
        for nu in labels(p):
            want = 1 if nu == YoungDiagram.of(2, 2) else 0
            assert fusion(p, two, two, nu) == want

    def test_box_fusion_is_reversed_branching(self):
        for p in PARAMS[:3]:
            for lam in labels(p):
                if lam.size + 1 > GRAM_LIMIT:
                    continue
                for nu in gamma_n(p, lam.size + 1):
                    if nu not in labels(p):
                        continue
                    assert fusion(p, lam, BOX, nu) == branching_multiplicity(
                        p, lam.size + 1, nu, lam
                    )

    def test_rejects_non_label_inputs(self):
        p = Params(2, 2)
        with pytest.raises(ValueError):
            fusion(p, YoungDiagram.of(3), BOX, BOX)
        with pytest.raises(ValueError):
            fusion(p, BOX, YoungDiagram.of(1, 1), BOX)

    def test_non_label_output_is_zero(self):
        p = Params(2, 2)
        assert fusion(p, BOX, BOX, YoungDiagram.of(1, 1)) == 0

    def test_table_consistency(self):
        p = Params(2, 2)
        tab = fusion_table(p, 4)
        for (a, b, c), m in tab.entries.items():
            assert m == fusion(p, a, b, c)
        assert tab.coefficient(BOX, BOX, EMPTY) == 1
        assert tab.coefficient(BOX, EMPTY, YoungDiagram.of(2)) == 0

    def test_fusion_matrix_rows(self):
        p = Params(2, 2)
        labs = labels(p)
        mat = fusion_matrix(p, BOX)
        for i, mu in enumerate(labs):
            for j, nu in enumerate(labs):
                want = fusion(p, BOX, mu, nu) if nu in gamma_n(p, 1 + mu.size) else 0
                assert mat[i][j] == want


class TestQdim:
    def test_empty_is_one(self):
        for p in PARAMS:
            assert qdim(p, EMPTY) == p.one

    def test_box_is_loop_value(self):
        for p in PARAMS:
            assert qdim(p, BOX) == qint(p, p.N)

    def test_semion_has_unit_dimension(self):
        assert qdim(Params(2, 1), BOX).as_rational() == Fraction(1)

    def test_ising_psi(self):
        assert qdim(Params(2, 2), YoungDiagram.of(2)).as_rational() == Fraction(1)

    def test_su3_level2_values(self):
        p = Params(3, 2)
        two = qint(p, 2)
        assert qdim(p, YoungDiagram.of(1, 1)) == qint(p, 3)
        assert qdim(p, YoungDiagram.of(2)) == qint(p, 3) * qint(p, 4) * two.inverse()

    def test_dagger_invariance(self):
        for p in PARAMS:
            for d in labels(p):
                if d.size <= 4:
                    assert qdim(p, d) == qdim(p, dagger(p, d))

    def test_positive_embedding(self):
        for p in PARAMS:
            for d in labels(p):
                if d.size <= 4:
                    v = qdim(p, d).embed()
                    assert abs(v.imag) < 1e-10
                    assert v.real > 0.1


class TestTwist:
    def test_vacuum(self):
        for p in PARAMS:
            assert twist(p, EMPTY) == p.one

    def test_box_is_curl_scalar(self):
        for p in PARAMS:
            assert twist(p, BOX) == curl_scalar(p, CURL_MATCH_SIGN)
            assert twist(p, BOX) == p.zeta_pow(p.N * p.N - 1)

    def test_semion(self):
        p = Params(2, 1)
        assert abs(twist(p, BOX).embed() - 1j) < 1e-12

    def test_ising_anyons(self):
        p = Params(2, 2)
        sigma_twist = twist(p, BOX).embed()
        assert abs(sigma_twist - cmath.exp(3j * math.pi / 8)) < 1e-12
        psi = twist(p, YoungDiagram.of(2))
        assert psi == -p.one

    def test_z3_anyon(self):
        p = Params(3, 1)
        assert abs(twist(p, BOX).embed() - cmath.exp(2j * math.pi / 3)) < 1e-12

    def test_unimodular(self):
        for p in PARAMS:
            for d in labels(p):
                if d.size <= 3:
                    assert abs(abs(twist(p, d).embed()) - 1.0) < 1e-10


class TestSMatrix:
    def test_semion(self):
        p = Params(2, 1)
        s = s_matrix(p)
        assert s.labels == (EMPTY, BOX)
        assert s.entries[0][0] == p.one
        assert s.entries[0][1] == p.one
        assert s.entries[1][1] == -p.one

    def test_ising(self):
        p = Params(2, 2)
        s = s_matrix(p)
        root2 = qint(p, 2)
        idx = {d: i for i, d in enumerate(s.labels)}
        i1, i2 = idx[BOX], idx[YoungDiagram.of(2)]
        assert s.entries[i1][i1].is_zero()
        assert s.entries[i2][i2] == p.one
        assert s.entries[i1][i2] == -root2
        assert s.entries[0][i1] == root2

    def test_symmetric_first_row_qdim(self):
        for p in (Params(2, 1), Params(2, 2), Params(3, 1)):
            s = s_matrix(p)
            k = len(s.labels)
            for i in range(k):
                for j in range(k):
                    assert s.entries[i][j] == s.entries[j][i]
            for j, mu in enumerate(s.labels):
                assert s.entries[0][j] == qdim(p, mu)

    def test_nondegenerate(self):
        for p in (Params(2, 1), Params(2, 2), Params(3, 1)):
            assert not s_matrix(p).determinant().is_zero()

    def test_charge_conjugation(self):
        p = Params(3, 1)
        s = s_matrix(p)
        for i in range(len(s.labels)):
            for j, mu in enumerate(s.labels):
                jj = s.labels.index(dagger(p, mu))
                assert s.entries[i][jj] == s.entries[i][j].conjugate()

    def test_oversized_labels_rejected(self):
        with pytest.raises(ValueError):
            s_matrix(Params(3, 2))


class TestModularFunctor:
    def test_sphere(self):
        for p in PARAMS[:3]:
            assert mf_dim(p, 0, ()) == 1
            assert mf_dim(p, 0, (BOX,)) == 0

    def test_two_point_is_duality_pairing(self):
        for p in (Params(2, 1), Params(2, 2), Params(3, 1)):
            for lam in labels(p):
                for mu in labels(p):
                    want = 1 if mu == dagger(p, lam) else 0
                    assert mf_dim(p, 0, (lam, mu)) == want

    def test_two_point_large_rank(self):
        p = Params(4, 1)
        onecol = YoungDiagram.of(1, 1)
        assert mf_dim(p, 0, (onecol, onecol)) == 1
        assert mf_dim(p, 0, (onecol, BOX)) == 0

    def test_three_point_is_fusion(self):
        p = Params(2, 2)
        for lam in labels(p):
            for mu in labels(p):
                for nu in labels(p):
                    want = fusion(p, lam, mu, dagger(p, nu))
                    assert mf_dim(p, 0, (lam, mu, nu)) == want

    def test_four_sigmas(self):
        assert mf_dim(Params(2, 2), 0, (BOX, BOX, BOX, BOX)) == 2

    def test_torus_counts_labels(self):
        assert mf_dim(Params(2, 1), 1, ()) == 2
        assert mf_dim(Params(2, 2), 1, ()) == 3
        assert mf_dim(Params(3, 1), 1, ()) == 3

    def test_genus_two(self):
        assert mf_dim(Params(2, 1), 2, ()) == 4

    def test_rejects_bad_inputs(self):
        p = Params(2, 2)
        with pytest.raises(ValueError):
            mf_dim(p, -1, ())
        with pytest.raises(ValueError):
            mf_dim(p, 0, (YoungDiagram.of(3),))
