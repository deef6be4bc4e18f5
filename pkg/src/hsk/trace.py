"""The Markov trace on the Hecke tower, its bilinear and hermitian
forms, Gram matrices, and the braid-closure invariant.

The trace is the unique family Tr: H_n -> scalars with Tr(1) = 1 and
the Markov property Tr(x e_n) = eta Tr(x), where

    eta = [N+1] / ([2][N]).

This is the tower value whose block weights are the quantum dimensions
of the level-bounded diagrams: every diagram with fewer than N rows
and at most K columns carries a nonzero weight, a full column of N
boxes carries weight [N]^-N (so the column closes to 1, as the
trivialised determinant object must), and the weights of all other
shapes vanish.  On generators it pins

    Tr(T_{s_i}) = zeta_T = q - (q+1) eta = (q - 1)/(1 - q^N).

Traces of basis elements are computed by the normal-form recursion:
write w in S_n as w = u.(s_{n-1} s_{n-2} ... s_k) with u in S_{n-1};
then

    Tr(T_w) = zeta_T . Tr(T_u T_{s_{n-2}} ... T_{s_k}),

where the right-hand product is expanded in H_{n-1} and the recursion
bottoms out at n = 1.

Closures of braids are normalised so that the trivial n-strand braid
closes to [N]^n, the unlink value; a single +/-1 kink contributes the
curl scalar curl(+/-1), and the two curl scalars are exactly mutually
inverse.  A negative kink contributes curl(-1) = q^((N^2-1)/2N)
= zeta^(N^2-1) (zeta the primitive 2N(N+K)-th root): the framing
anomaly of the generating object.  The one-negative-crossing 2-braid
closure at (2,2) is sqrt(2).zeta^3.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hecke import BraidWord, HeckeElement, _rmul_gen, from_braid
from .linalg import hermitian_min_eigenvalue, rref
from .perms import perm_table
from .scalar import Params, Scalar, qint

__all__ = [
    "GRAM_LIMIT",
    "TRACE_LIMIT",
    "CURL_MATCH_SIGN",
    "GramData",
    "eta",
    "trace_parameter",
    "markov_trace",
    "pairing",
    "gram",
    "gram_bilinear",
    "gram_hermitian",
    "gram_rref",
    "closure_invariant",
    "curl_scalar",
]

# Largest n for full n! x n! Gram computations, and for single traces.
GRAM_LIMIT = 6
TRACE_LIMIT = 8

# The crossing sign whose curl scalar equals the framing factor
# q^((N^2-1)/2N); see curl_scalar.
CURL_MATCH_SIGN = -1


def trace_parameter(p: Params) -> Scalar:
    """zeta_T = Tr(T_{s_i}) = (q - 1)/(1 - q^N)."""
    return (p.q - 1) * (p.one - p.q_pow(p.N)).inverse()


def eta(p: Params) -> Scalar:
    """eta = Tr(e_i) = [N+1]/([2][N]).

    Vanishes exactly at K = 1, where the symmetric square is not an
    allowed object and e_i spans the radical of the 2-strand form.
    """
    return qint(p, p.N + 1) * (qint(p, 2) * qint(p, p.N)).inverse()


@lru_cache(maxsize=None)
def _trace_vector(p: Params, n: int) -> tuple[Scalar, ...]:
    """Tr(T_w) for every w in S_n, indexed like perm_table(n)."""
    if n <= 1:
        return (p.one,)
    tbl = perm_table(n)
    sub = perm_table(n - 1)
    prev = _trace_vector(p, n - 1)
    zt = trace_parameter(p)
    out: list[Scalar] = []
    for w in range(tbl.size):
        pw = tbl.perms[w]
        j = pw.index(n - 1)
        if j == n - 1:
            out.append(prev[sub.index[pw[:-1]]])
            continue
        # w = v.(s_{n-2} ... s_j) with v in S_{n-1} (generators 0-based):
        # v is w with the value n deleted from position j.  Peel the top
        # generator by the Markov property and expand the remaining
        # descending chain in H_{n-1}.
        terms = {sub.index[pw[:j] + pw[j + 1:]]: p.one}
        for i in range(n - 3, j - 1, -1):
            terms = _rmul_gen(p, sub, terms, i)
        acc = p.zero
        for u, c in terms.items():
            acc = acc + c * prev[u]
        out.append(zt * acc)
    return tuple(out)


def markov_trace(p: Params, x: HeckeElement) -> Scalar:
    if x.p != p:
        raise ValueError("element parameters do not match")
    if x.n > TRACE_LIMIT:
        raise ValueError(f"trace limited to {TRACE_LIMIT} strands")
    vec = _trace_vector(p, max(x.n, 1))
    acc = p.zero
    for w, c in x.terms.items():
        acc = acc + c * vec[w]
    return acc


def pairing(p: Params, x: HeckeElement, y: HeckeElement, form: str = "bilinear") -> Scalar:
    """Bilinear <x,y> = Tr(xy) or hermitian (x,y) = Tr(y* x)."""
    if x.n != y.n:
        raise ValueError("strand counts differ")
    if form == "bilinear":
        return markov_trace(p, x * y)
    if form == "hermitian":
        return markov_trace(p, y.star() * x)
    raise ValueError("form must be 'bilinear' or 'hermitian'")


@lru_cache(maxsize=None)
def gram_bilinear(p: Params, n: int) -> tuple[tuple[Scalar, ...], ...]:
    """G[u][v] = Tr(T_u T_v), assembled row by row over the right weak
    order: for l(u s_i) = l(u)+1,

        G[u s_i][v] = G[u][s_i v]                       if l(s_i v) > l(v),
                      (q-1) G[u][v] + q G[u][s_i v]     otherwise,

    so the whole matrix costs O(n!^2) scalar operations."""
    _check_gram_limit(n)
    tbl = perm_table(n)
    q = p.q
    qm1 = q - 1
    rows: list[tuple[Scalar, ...]] = [tuple(_trace_vector(p, max(n, 1)))]
    for u in range(1, tbl.size):
        i = next(i for i in range(n - 1) if tbl.length[tbl.rmul[u][i]] < tbl.length[u])
        parent = rows[tbl.rmul[u][i]]
        lm = tbl.lmul
        ln = tbl.length
        row = [
            parent[lm[v][i]] if ln[lm[v][i]] > ln[v]
            else qm1 * parent[v] + q * parent[lm[v][i]]
            for v in range(tbl.size)
        ]
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def gram_hermitian(p: Params, n: int) -> tuple[tuple[Scalar, ...], ...]:
    """K[u][v] = (T_u, T_v) = Tr((T_v)^(-1) T_u), the matrix of the
    hermitian form (x,y) = Tr(y* x) on the T_w basis (star conjugates
    the coordinates of y, so the form's matrix itself carries no
    conjugation).  The transposed matrix W[v][u] = Tr((T_v)^(-1) T_u)
    is assembled by a cyclic-invariance recursion: for l(v s_i) = l(v)+1,

        W[v s_i][u] = W[v][u s_i]                             if l(u s_i) < l(u),
                      q^(-1) W[v][u s_i] + (q^(-1)-1) W[v][u] otherwise."""
    _check_gram_limit(n)
    tbl = perm_table(n)
    qi = p.q_pow(-1)
    qim1 = qi - 1
    rows: list[tuple[Scalar, ...]] = [tuple(_trace_vector(p, max(n, 1)))]
    for v in range(1, tbl.size):
        i = next(i for i in range(n - 1) if tbl.length[tbl.rmul[v][i]] < tbl.length[v])
        parent = rows[tbl.rmul[v][i]]
        rm = tbl.rmul
        ln = tbl.length
        row = [
            parent[rm[u][i]] if ln[rm[u][i]] < ln[u]
            else qi * parent[rm[u][i]] + qim1 * parent[u]
            for u in range(tbl.size)
        ]
        rows.append(tuple(row))
    return tuple(zip(*rows))


def _check_gram_limit(n: int):
    if n > GRAM_LIMIT:
        raise ValueError(f"Gram computations limited to {GRAM_LIMIT} strands")


@lru_cache(maxsize=None)
def gram_rref(p: Params, n: int, form: str = "bilinear") -> tuple[tuple[tuple[Scalar, ...], ...], tuple[int, ...]]:
    """Cached reduced row echelon form of a Gram matrix.

    Returns (R, pivots).  Because row operations preserve column
    relations, column w of R expresses column w of the Gram matrix over
    the pivot columns; this is what the purified-algebra quotient uses."""
    mat = gram_bilinear(p, n) if form == "bilinear" else gram_hermitian(p, n)
    red, piv = rref(p, [list(r) for r in mat])
    return tuple(tuple(r) for r in red), tuple(piv)


@dataclass(frozen=True)
class GramData:
    """Gram matrix of a trace form on the T_w basis of H_n, with its
    exact rank and a kernel basis (the radical of the form)."""

    p: Params
    n: int
    form: str
    rank: int
    kernel_basis: tuple[HeckeElement, ...]

    @property
    def matrix(self) -> tuple[tuple[Scalar, ...], ...]:
        return gram_bilinear(self.p, self.n) if self.form == "bilinear" else gram_hermitian(self.p, self.n)

    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue of the embedded matrix (hermitian form)."""
        return hermitian_min_eigenvalue([list(r) for r in self.matrix])

    def to_json(self, full: bool = False) -> dict:
        data = {
            "n": self.n,
            "form": self.form,
            "dim": len(self.matrix),
            "rank": self.rank,
            "kernel_dim": len(self.kernel_basis),
        }
        if full:
            data["matrix"] = [
                [{**c.to_json(), "embed": [c.embed().real, c.embed().imag]} for c in row]
                for row in self.matrix
            ]
            data["kernel_basis"] = [x.to_json() for x in self.kernel_basis]
        return data


def gram(p: Params, n: int, form: str = "bilinear") -> GramData:
    """Full Gram matrix of the chosen trace form with exact rank and
    kernel.  The kernel of the hermitian form is computed on the left
    (coordinates of x in (x,y) enter unconjugated), which for these
    matrices equals the right kernel of the transpose."""
    if form not in ("bilinear", "hermitian"):
        raise ValueError("form must be 'bilinear' or 'hermitian'")
    _check_gram_limit(n)
    mat = gram_bilinear(p, n) if form == "bilinear" else gram_hermitian(p, n)
    size = len(mat)
    if form == "bilinear":
        red, piv = gram_rref(p, n, "bilinear")
    else:
        cols = [[mat[u][v] for u in range(size)] for v in range(size)]
        r2, p2 = rref(p, cols)
        red, piv = tuple(tuple(r) for r in r2), tuple(p2)
    kern = _nullspace_from_rref(p, red, piv, size)
    elements = tuple(
        HeckeElement(p, n, {w: c for w, c in enumerate(vec) if not c.is_zero()})
        for vec in kern
    )
    rank = size - len(elements)
    return GramData(p, n, form, rank, elements)


def _nullspace_from_rref(p: Params, red, piv, ncols):
    pivot_set = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [p.zero] * ncols
        vec[f] = p.one
        for r, c in enumerate(piv):
            vec[c] = -red[r][f]
        basis.append(vec)
    return basis


def closure_invariant(p: Params, b: BraidWord) -> Scalar:
    """Invariant of the closed braid in the skein normalisation where
    the trivial n-braid closes to [N]^n."""
    x = from_braid(p, b)
    return loop_power(p, b.strands) * markov_trace(p, x)


def loop_power(p: Params, n: int) -> Scalar:
    """[N]^n, the unlink value on n components."""
    acc = p.one
    qn = qint(p, p.N)
    for _ in range(n):
        acc = acc * qn
    return acc


def curl_scalar(p: Params, sign: int) -> Scalar:
    """Markov stabilization factor: closing b.sigma_n^(s) multiplies
    the closure of b by curl(s).  From the Markov property,

        curl(+1) = -[N] q^((1-N)/2N) zeta_T,
        curl(-1) = -[N] q^((N-1)/2N) zeta_T',

    with zeta_T' = Tr(T_{s_i}^(-1)); the two are mutually inverse, and
    curl(-1) simplifies to the framing factor q^((N^2-1)/2N)
    = zeta^(N^2-1)."""
    qn = qint(p, p.N)
    if sign > 0:
        return -qn * p.zeta_pow(1 - p.N) * trace_parameter(p)
    ztp = p.q_pow(-1) * trace_parameter(p) + p.q_pow(-1) - p.one
    return -qn * p.zeta_pow(p.N - 1) * ztp
