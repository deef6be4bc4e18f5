"""The purified finite-strand category: block decomposition, fusion
coefficients, quantum dimensions, twists, S-matrix entries, and
modular-functor dimensions.

The purified algebra A_n is H_n modulo the radical of the Markov-trace
form.  A concrete basis comes out of the Gram elimination for free:
the pivot columns J of the reduced echelon form pick out basis
elements {T_j : j in J}, and the nonpivot columns of the echelon form
express every other T_w over them, because row operations preserve
column relations.  All block and fusion computations happen in the
coordinates of this basis; trace pairings reduce to vector-matrix
products against the pivot-restricted Gram matrix, so no element
products are needed on the hot paths.

Central idempotents are recovered from trace characters: a central
element z decomposes as sum over blocks of psi_mu(z) z_mu where
psi_mu(z) = Tr(z e_mu)/Tr(e_mu) for any minimal idempotent e_mu of the
block mu, so one exact linear solve inside the centre produces each
z_lambda.  Fusion coefficients come from compressed Gram ranks: the
rank of the trace form on z_nu (y_lambda (x) y_mu) A (y_lambda (x)
y_mu) z_nu equals the square of N_{lambda mu}^nu.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .diagrams import YoungDiagram, dagger, gamma_n, labels, path_count
from .hecke import (BraidWord, HeckeElement, _lmul_gen, _rmul_gen, from_braid,
                    full_twist_word, block_transposition_word, jones_wenzl,
                    tensor_embed, young_idempotent)
from .linalg import determinant, nullspace, rref
from .perms import perm_table
from .scalar import Params, Scalar
from .trace import (CURL_MATCH_SIGN, GRAM_LIMIT, curl_scalar, gram_bilinear,
                    gram_rref, loop_power, markov_trace)

__all__ = [
    "PurifiedAlgebra",
    "PurifiedDim",
    "BlockData",
    "FusionTable",
    "SMatrix",
    "purified_algebra",
    "purified_dim",
    "minimal_idempotent",
    "central_idempotents",
    "branching_multiplicity",
    "fusion",
    "fusion_table",
    "fusion_matrix",
    "qdim",
    "twist",
    "full_twist_eigenvalue",
    "s_matrix",
    "mf_dim",
]


def _mat_vec(p: Params, mat, vec):
    out = []
    for row in mat:
        acc = p.zero
        for c, v in zip(row, vec):
            if not c.is_zero() and not v.is_zero():
                acc = acc + c * v
        out.append(acc)
    return out


@dataclass(frozen=True)
class PurifiedAlgebra:
    """Coordinates for A_n = H_n / radical on the Gram pivot basis."""

    p: Params
    n: int
    pivots: tuple[int, ...]
    rmap: tuple[tuple[Scalar, ...], ...]
    gram_pivots: tuple[tuple[Scalar, ...], ...]
    left_gen: tuple[tuple[tuple[Scalar, ...], ...], ...]
    right_gen: tuple[tuple[tuple[Scalar, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce_terms(self, terms: dict[int, Scalar]) -> list[Scalar]:
        vec = [self.p.zero] * self.dim
        for w, c in terms.items():
            col = w
            for r in range(self.dim):
                e = self.rmap[r][col]
                if not e.is_zero():
                    vec[r] = vec[r] + c * e
        return vec

    def reduce(self, x: HeckeElement) -> list[Scalar]:
        return self.reduce_terms(x.terms)

    def lift(self, vec) -> HeckeElement:
        return HeckeElement(self.p, self.n, {j: c for j, c in zip(self.pivots, vec)})

    def trace_pair(self, u, v) -> Scalar:
        """Tr(lift(u) lift(v)) = u^T G|_J v."""
        acc = self.p.zero
        for r, ur in enumerate(u):
            if ur.is_zero():
                continue
            row = self.gram_pivots[r]
            for s, vs in enumerate(v):
                if not vs.is_zero() and not row[s].is_zero():
                    acc = acc + ur * row[s] * vs
        return acc

    def basis_row_table(self, v: HeckeElement) -> list[list[Scalar]]:
        """Coordinates of T_w . v for every w, via the left weak order:
        T_{s_i w} v = T_{s_i} (T_w v) when the length goes up."""
        tbl = perm_table(self.n)
        rho: list[list[Scalar] | None] = [None] * tbl.size
        rho[0] = self.reduce(v)
        for w in range(1, tbl.size):
            i = next(i for i in range(self.n - 1)
                     if tbl.length[tbl.lmul[w][i]] < tbl.length[w])
            rho[w] = _mat_vec(self.p, self.left_gen[i], rho[tbl.lmul[w][i]])
        return rho


@lru_cache(maxsize=None)
def purified_algebra(p: Params, n: int) -> PurifiedAlgebra:
    red, piv = gram_rref(p, n, "bilinear")
    gram = gram_bilinear(p, n)
    d = len(piv)
    gram_pivots = tuple(tuple(gram[r][c] for c in piv) for r in piv)
    tbl = perm_table(n)
    left = []
    right = []
    for i in range(max(n - 1, 0)):
        lcols = []
        rcols = []
        for j in piv:
            lterms = _lmul_gen(p, tbl, {j: p.one}, i)
            rterms = _rmul_gen(p, tbl, {j: p.one}, i)
            lvec = [p.zero] * d
            rvec = [p.zero] * d
            for w, c in lterms.items():
                for r in range(d):
                    e = red[r][w]
                    if not e.is_zero():
                        lvec[r] = lvec[r] + c * e
            for w, c in rterms.items():
                for r in range(d):
                    e = red[r][w]
                    if not e.is_zero():
                        rvec[r] = rvec[r] + c * e
            lcols.append(lvec)
            rcols.append(rvec)
        left.append(tuple(tuple(lcols[j][r] for j in range(d)) for r in range(d)))
        right.append(tuple(tuple(rcols[j][r] for j in range(d)) for r in range(d)))
    return PurifiedAlgebra(p, n, piv, red, gram_pivots, tuple(left), tuple(right))


@dataclass(frozen=True)
class PurifiedDim:
    dim: int
    radical_dim: int

    def to_json(self) -> dict:
        return {"dim": self.dim, "radical_dim": self.radical_dim}


def purified_dim(p: Params, n: int) -> PurifiedDim:
    """rank and corank of the trace form on H_n; the rank equals
    sum of squared path counts over the labels of Gamma^n."""
    a = purified_algebra(p, n)
    size = perm_table(n).size
    return PurifiedDim(a.dim, size - a.dim)


@lru_cache(maxsize=None)
def minimal_idempotent(p: Params, n: int, d: YoungDiagram) -> HeckeElement:
    """y_d (x) g_N (x) ... (x) g_N with (n-|d|)/N full antisymmetrizer
    columns; a minimal idempotent of the block of d in A_n."""
    if d not in gamma_n(p, n):
        raise ValueError(f"{d.rows} is not a label of Gamma^{n}")
    yi = young_idempotent(p, d)
    if yi.idem is None:
        raise ValueError("vanishing hook product")
    x = yi.idem
    for _ in range((n - d.size) // p.N):
        x = tensor_embed(x, jones_wenzl(p, p.N, "antisym"))
    return x


@dataclass(frozen=True)
class BlockEntry:
    z: HeckeElement
    dim: int
    minimal: HeckeElement
    zvec: tuple[Scalar, ...]


@dataclass(frozen=True)
class BlockData:
    p: Params
    n: int
    blocks: dict[YoungDiagram, BlockEntry]

    def to_json(self, full: bool = False) -> dict:
        out = {
            "n": self.n,
            "labels": [list(d.rows) for d in self.blocks],
            "dims": {str(list(d.rows)): e.dim for d, e in self.blocks.items()},
        }
        if full:
            out["central_idempotents"] = {
                str(list(d.rows)): e.z.to_json() for d, e in self.blocks.items()
            }
        return out


@lru_cache(maxsize=None)
def central_idempotents(p: Params, n: int) -> BlockData:
    """The minimal central idempotents z_lambda of A_n, one per label
    of Gamma^n, as representatives in H_n (well defined mod radical)."""
    a = purified_algebra(p, n)
    labs = gamma_n(p, n)
    d = a.dim
    # centre of A as the joint kernel of left-minus-right generator action
    stacked: list[list[Scalar]] = []
    for i in range(n - 1):
        li = a.left_gen[i]
        ri = a.right_gen[i]
        for r in range(d):
            stacked.append([li[r][c] - ri[r][c] for c in range(d)])
    if stacked:
        centre = nullspace(p, stacked, d)
    else:
        centre = [[p.one]]
    if len(centre) != len(labs):
        raise RuntimeError(
            f"centre dimension {len(centre)} != |Gamma^{n}| = {len(labs)}")
    # character functionals psi_mu(z) = Tr(z e_mu)/Tr(e_mu)
    reduced_minimal = {}
    weights = {}
    minimals = {}
    for mu in labs:
        e_mu = minimal_idempotent(p, n, mu)
        minimals[mu] = e_mu
        reduced_minimal[mu] = a.reduce(e_mu)
        weights[mu] = markov_trace(p, e_mu)
        if weights[mu].is_zero():
            raise RuntimeError("vanishing Markov weight on a block")
    psi = [
        [
            a.trace_pair(cvec, reduced_minimal[mu]) * weights[mu].inverse()
            for cvec in centre
        ]
        for mu in labs
    ]
    blocks: dict[YoungDiagram, BlockEntry] = {}
    for k, lam in enumerate(labs):
        rhs = [p.one if j == k else p.zero for j in range(len(labs))]
        x = rref(p, [row + [rhs[i]] for i, row in enumerate(psi)])
        coeffs = _solve_from_aug(p, x, len(centre))
        zvec = [p.zero] * d
        for c, cvec in zip(coeffs, centre):
            if not c.is_zero():
                for r in range(d):
                    zvec[r] = zvec[r] + c * cvec[r]
        blocks[lam] = BlockEntry(
            z=a.lift(zvec),
            dim=path_count(p, n, lam),
            minimal=minimals[lam],
            zvec=tuple(zvec),
        )
    return BlockData(p, n, blocks)


def _solve_from_aug(p: Params, rref_result, ncols):
    red, piv = rref_result
    if piv and piv[-1] == ncols:
        raise RuntimeError("inconsistent character system")
    x = [p.zero] * ncols
    for r, c in enumerate(piv):
        x[c] = red[r][ncols]
    return x


def branching_multiplicity(p: Params, n: int, lam: YoungDiagram, sub: YoungDiagram) -> int:
    """Multiplicity of the block `sub` of A_{n-1} in the restriction of
    the block `lam` of A_n: Tr(z_lam i(e_sub)) / Tr(e_lam)."""
    bd = central_idempotents(p, n)
    if lam not in bd.blocks:
        raise ValueError("lam is not a label of Gamma^n")
    if sub not in gamma_n(p, n - 1):
        raise ValueError("sub is not a label of Gamma^{n-1}")
    z = bd.blocks[lam].z
    e_sub = tensor_embed(minimal_idempotent(p, n - 1, sub), HeckeElement.identity(p, 1))
    num = markov_trace(p, z * e_sub)
    den = markov_trace(p, bd.blocks[lam].minimal)
    ratio = num * den.inverse()
    rat = ratio.as_rational()
    if rat is None or rat.denominator != 1:
        raise RuntimeError("non-integral branching multiplicity")
    return int(rat)


def _compressed_rank(p: Params, a: PurifiedAlgebra, u: HeckeElement, v: HeckeElement) -> int:
    """Exact rank of the trace form on the span of {u T_j v : j pivot}."""
    rho = a.basis_row_table(v)
    tbl = perm_table(a.n)
    cols = []
    for j in a.pivots:
        uterms = dict(u.terms)
        for i in tbl.word[j]:
            uterms = _rmul_gen(p, tbl, uterms, i)
        col = [p.zero] * a.dim
        for w, c in uterms.items():
            rw = rho[w]
            for r in range(a.dim):
                if not rw[r].is_zero():
                    col[r] = col[r] + c * rw[r]
        cols.append(col)
    paired = [_mat_vec(p, a.gram_pivots, ck) for ck in cols]
    form = []
    for cj in cols:
        row = []
        for gk in paired:
            acc = p.zero
            for x, y in zip(cj, gk):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        form.append(row)
    red, piv = rref(p, form)
    return len(piv)


def fusion(p: Params, lam: YoungDiagram, mu: YoungDiagram, nu: YoungDiagram) -> int:
    """N_{lam mu}^nu as the integer square root of the compressed Gram
    rank on z_nu (y_lam (x) y_mu) A_n (y_lam (x) y_mu) z_nu."""
    for d in (lam, mu):
        if d not in labels(p):
            raise ValueError(f"{d.rows} is not a label of the category")
    n = lam.size + mu.size
    if nu not in labels(p) or nu not in gamma_n(p, n):
        return 0
    if n == 0:
        return 1
    if n > GRAM_LIMIT:
        raise ValueError(f"fusion at {n} strands exceeds the Gram limit")
    a = purified_algebra(p, n)
    pi = tensor_embed(young_idempotent(p, lam).idem if lam.size else HeckeElement.identity(p, 0),
                      young_idempotent(p, mu).idem if mu.size else HeckeElement.identity(p, 0))
    z = central_idempotents(p, n).blocks[nu].z
    u = z * pi
    v = pi * z
    r = _compressed_rank(p, a, u, v)
    s = isqrt(r)
    if s * s != r:
        raise RuntimeError(f"compressed rank {r} is not a perfect square")
    return s


@dataclass(frozen=True)
class FusionTable:
    p: Params
    entries: dict[tuple[YoungDiagram, YoungDiagram, YoungDiagram], int]

    def coefficient(self, lam, mu, nu) -> int:
        return self.entries.get((lam, mu, nu), 0)

    def to_json(self) -> dict:
        items = sorted(
            ((a, b, c, m) for (a, b, c), m in self.entries.items() if m),
            key=lambda t: (t[0].rows, t[1].rows, t[2].rows),
        )
        return {
            "N": self.p.N,
            "K": self.p.K,
            "entries": [
                {"a": list(a.rows), "b": list(b.rows), "c": list(c.rows), "n": m}
                for a, b, c, m in items
            ],
        }


@lru_cache(maxsize=None)
def fusion_table(p: Params, max_strands: int | None = None) -> FusionTable:
    """All coefficients N_{lam mu}^nu with |lam|+|mu| within the Gram
    limit (or a stricter cap)."""
    cap = GRAM_LIMIT if max_strands is None else min(max_strands, GRAM_LIMIT)
    labs = labels(p)
    entries = {}
    for lam in labs:
        for mu in labs:
            n = lam.size + mu.size
            if n > cap:
                continue
            for nu in gamma_n(p, n):
                if nu not in labs:
                    continue
                entries[(lam, mu, nu)] = fusion(p, lam, mu, nu)
    return FusionTable(p, entries)


@lru_cache(maxsize=None)
def fusion_matrix(p: Params, lam: YoungDiagram) -> tuple[tuple[int, ...], ...]:
    """Matrix of fusion with lam over the label list: entry [i][j] =
    N_{lam, L_i}^{L_j}."""
    labs = labels(p)
    rows = []
    for mu in labs:
        row = []
        for nu in labs:
            n = lam.size + mu.size
            if nu not in gamma_n(p, n):
                row.append(0)
            else:
                row.append(fusion(p, lam, mu, nu))
        rows.append(tuple(row))
    return tuple(rows)


def qdim(p: Params, d: YoungDiagram) -> Scalar:
    """[N]^{|d|} Tr(y_d): the closed loop colored by d."""
    yi = young_idempotent(p, d)
    if yi.idem is None:
        raise ValueError("vanishing hook product; no idempotent")
    return loop_power(p, d.size) * markov_trace(p, yi.idem)


def full_twist_eigenvalue(p: Params, d: YoungDiagram, sign: int = 1) -> Scalar:
    """The scalar c with y_d . (Delta^2)^sign = c y_d, Delta^2 the
    (positive) full twist braid on |d| strands."""
    n = d.size
    if n == 0:
        return p.one
    yi = young_idempotent(p, d)
    if yi.idem is None:
        raise ValueError("vanishing hook product; no idempotent")
    word = full_twist_word(n).word
    if sign < 0:
        word = tuple(-i for i in reversed(word))
    ft = from_braid(p, BraidWord(n, word))
    c = (yi.idem * ft).proportionality(yi.idem)
    if c is None:
        raise RuntimeError("full twist is not proportional on the block")
    return c


def twist(p: Params, d: YoungDiagram) -> Scalar:
    """Ribbon twist theta_d: the full-twist eigenvalue taken with the
    library's framing sign, corrected by one curl scalar per strand, so
    that theta of the single box is exactly the curl scalar."""
    eps = CURL_MATCH_SIGN
    c = full_twist_eigenvalue(p, d, eps)
    curl = curl_scalar(p, eps)
    out = c
    for _ in range(d.size):
        out = out * curl
    return out


@dataclass(frozen=True)
class SMatrix:
    p: Params
    labels: tuple[YoungDiagram, ...]
    entries: tuple[tuple[Scalar, ...], ...]

    def determinant(self) -> Scalar:
        return determinant(self.p, [list(r) for r in self.entries])

    def to_json(self) -> dict:
        return {
            "N": self.p.N,
            "K": self.p.K,
            "labels": [list(d.rows) for d in self.labels],
            "entries": [
                [{**c.to_json(), "embed": [c.embed().real, c.embed().imag]} for c in row]
                for row in self.entries
            ],
        }


def _hopf_value(p: Params, lam: YoungDiagram, mu: YoungDiagram) -> Scalar:
    """Closure of the two-block Hopf cabling, crossings taken with the
    library's framing sign so the linking chirality matches the twist."""
    a, b = lam.size, mu.size
    if a + b == 0:
        return p.one
    pi = tensor_embed(
        young_idempotent(p, lam).idem if a else HeckeElement.identity(p, 0),
        young_idempotent(p, mu).idem if b else HeckeElement.identity(p, 0),
    )
    if a == 0 or b == 0:
        return loop_power(p, a + b) * markov_trace(p, pi)
    word = block_transposition_word(a, b).word + block_transposition_word(b, a).word
    beta2 = from_braid(p, BraidWord(a + b, tuple(CURL_MATCH_SIGN * i for i in word)))
    return loop_power(p, a + b) * markov_trace(p, pi * beta2)


@lru_cache(maxsize=None)
def s_matrix(p: Params) -> SMatrix:
    """S~_{lam mu}: the closure of the two-component Hopf cabling with
    blocks colored lam and mu; row/column ∅ reproduces qdim."""
    labs = labels(p)
    for lam in labs:
        for mu in labs:
            if lam.size + mu.size > GRAM_LIMIT:
                raise ValueError(
                    "label sizes exceed the strand limit for Hopf closures")
    rows = tuple(
        tuple(_hopf_value(p, lam, mu) for mu in labs) for lam in labs
    )
    return SMatrix(p, tuple(labs), rows)


def mf_dim(p: Params, genus: int, marked: tuple[YoungDiagram, ...] | list[YoungDiagram]) -> int:
    """Dimension of the modular-functor space of a genus-g surface with
    marked points colored by `marked`, via a caterpillar pair-of-pants
    decomposition: fold the fusion matrices of the labels into the
    vacuum vector, apply the handle operator sum_mu N_mu N_{mu-dagger}
    per handle, and read off the vacuum coefficient."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    labs = labels(p)
    index = {d: i for i, d in enumerate(labs)}
    for d in marked:
        if d not in index:
            raise ValueError(f"{tuple(d.rows)} is not a label of the category")
    size = len(labs)
    vec = [0] * size
    vec[index[YoungDiagram.of()]] = 1
    for d in marked:
        mat = fusion_matrix(p, d)
        vec = [sum(mat[i][j] * vec[i] for i in range(size)) for j in range(size)]
    if genus:
        handle = [[0] * size for _ in range(size)]
        for mu in labs:
            m1 = fusion_matrix(p, mu)
            m2 = fusion_matrix(p, dagger(p, mu))
            for i in range(size):
                for j in range(size):
                    handle[i][j] += sum(m1[i][k] * m2[k][j] for k in range(size))
        for _ in range(genus):
            vec = [sum(handle[i][j] * vec[i] for i in range(size)) for j in range(size)]
    return vec[index[YoungDiagram.of()]]
