"""Lie algebras from structure constants, with exact polynomial scalars.

A :class:`LieAlgebra` stores the dense tensor ``C[i][j][k]`` of
``[X_i, X_j] = C_ij^k X_k`` together with basis labels and declared
parameter names.  Antisymmetry in (i, j) is enforced at construction;
validity (the Jacobi identity) is checked by :func:`jacobi_residual`.

Instances are treated as immutable after construction and are safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    ShapeError,
    SymmetricEntry,
)
from .exactalg import PolyExpr, PolyLike, as_poly
from .exactlinalg import Matrix, Vector, invert, mat, mat_mul

BracketEntry = tuple  # (i, j, k, coef)


def zero_tensor3(n: int):
    z = PolyExpr.zero()
    return [[[z for _ in range(n)] for _ in range(n)] for _ in range(n)]


def zero_matrix(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    z = PolyExpr.zero()
    return [[z for _ in range(m)] for _ in range(n)]


@dataclass
class LieAlgebra:
    dim: int
    labels: tuple[str, ...]
    params: tuple[str, ...]
    c: list  # dense dim^3 tensor of PolyExpr, antisymmetric in (i, j)
    _nonzero: list | None = field(default=None, repr=False, compare=False)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise IndexOutOfRange(f"unknown basis label {label!r}") from None

    def structure_constant(self, i: int, j: int, k: int) -> PolyExpr:
        return self.c[i][j][k]

    def nonzero(self) -> list:
        """Cached sparse view [(i, j, k, coef)] of the structure tensor."""
        if self._nonzero is None:
            self._nonzero = [
                (i, j, k, self.c[i][j][k])
                for i in range(self.dim)
                for j in range(self.dim)
                for k in range(self.dim)
                if not self.c[i][j][k].is_zero
            ]
        return self._nonzero

    def pair_map(self) -> dict:
        out: dict = {}
        for i, j, k, coef in self.nonzero():
            out.setdefault((i, j), []).append((k, coef))
        return out

    def basis_vector(self, label_or_index) -> Vector:
        i = (
            label_or_index
            if isinstance(label_or_index, int)
            else self.index(label_or_index)
        )
        if not 0 <= i < self.dim:
            raise IndexOutOfRange(f"basis index {i} out of range")
        return [
            PolyExpr.one() if j == i else PolyExpr.zero() for j in range(self.dim)
        ]

    def vector(self, combo: Mapping[str, PolyLike]) -> Vector:
        """Coefficient vector of a linear combination given by label."""
        v = [PolyExpr.zero()] * self.dim
        for label, coef in combo.items():
            v[self.index(label)] = v[self.index(label)] + as_poly(coef)
        return v

    def to_json(self) -> dict:
        entries = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(self.dim):
                    if not self.c[i][j][k].is_zero:
                        entries.append(
                            {"i": i, "j": j, "k": k, "coef": str(self.c[i][j][k])}
                        )
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "params": list(self.params),
            "brackets": entries,
        }


def new_lie_algebra(
    dim: int,
    labels: Sequence[str],
    brackets: Iterable[BracketEntry],
    params: Sequence[str] = (),
) -> LieAlgebra:
    """Build an algebra from sparse oriented entries [X_i, X_j] += coef X_k.

    Each unordered pair should be supplied in one orientation (duplicates
    with the same (i, j, k) are summed); the (j, i) component is derived by
    antisymmetry.  Entries (i, i, k) with nonzero coefficient raise
    :class:`SymmetricEntry`.
    """
    if len(labels) != dim:
        raise DimensionMismatch(f"{len(labels)} labels for dimension {dim}")
    if len(set(labels)) != dim:
        raise ShapeError("basis labels must be unique")
    c = zero_tensor3(dim)
    for i, j, k, coef in brackets:
        for idx in (i, j, k):
            if not 0 <= idx < dim:
                raise IndexOutOfRange(f"index {idx} out of range for dim {dim}")
        coef = as_poly(coef)
        if coef.is_zero:
            continue
        if i == j:
            raise SymmetricEntry(f"nonzero bracket entry ({i},{i},{k})")
        c[i][j][k] = c[i][j][k] + coef
        c[j][i][k] = c[j][i][k] - coef
    declared = tuple(params)
    used = set()
    for row in c:
        for col in row:
            for p in col:
                used |= p.parameters()
    if not declared:
        declared = tuple(sorted(used))
    elif not used <= set(declared):
        raise ShapeError(
            f"undeclared parameters in brackets: {sorted(used - set(declared))}"
        )
    return LieAlgebra(dim, tuple(labels), declared, c)


def from_json(data: Mapping) -> LieAlgebra:
    return new_lie_algebra(
        data["dim"],
        data["labels"],
        [(e["i"], e["j"], e["k"], e["coef"]) for e in data["brackets"]],
        params=data.get("params", ()),
    )


def bracket(L: LieAlgebra, v: Vector, w: Vector) -> Vector:
    """[v, w] for coefficient vectors, bilinear in exact arithmetic."""
    if len(v) != L.dim or len(w) != L.dim:
        raise DimensionMismatch("vector length does not match algebra dimension")
    v = [as_poly(x) for x in v]
    w = [as_poly(x) for x in w]
    out = [PolyExpr.zero()] * L.dim
    for i, j, k, coef in L.nonzero():
        if v[i].is_zero or w[j].is_zero:
            continue
        out[k] = out[k] + v[i] * w[j] * coef
    return out


def adjoint(L: LieAlgebra, i: int) -> Matrix:
    """Matrix of ad_{X_i}: (ad_i)^k_j = C_ij^k, acting on coordinates."""
    if not 0 <= i < L.dim:
        raise IndexOutOfRange(f"basis index {i} out of range")
    return [[L.c[i][j][k] for j in range(L.dim)] for k in range(L.dim)]


def jacobi_residual(L: LieAlgebra):
    """Dense tensor R_ijl^m = sum_k cyclic(C_ij^k C_kl^m); zero iff Jacobi."""
    n = L.dim
    pm = L.pair_map()
    first: dict = {}
    for (i, j), ks in pm.items():
        for k, c1 in ks:
            for l in range(n):
                for m, c2 in pm.get((k, l), ()):
                    key = (i, j, l, m)
                    prod = c1 * c2
                    first[key] = first.get(key, PolyExpr.zero()) + prod
    z = PolyExpr.zero()
    res = [
        [[[z for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for _ in range(n)
    ]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for m in range(n):
                    total = (
                        first.get((i, j, l, m), z)
                        + first.get((j, l, i, m), z)
                        + first.get((l, i, j, m), z)
                    )
                    res[i][j][l][m] = total
    return res


def jacobi_violations(L: LieAlgebra) -> list:
    """Index tuples (i, j, l, m) where the Jacobi residual is nonzero."""
    res = jacobi_residual(L)
    n = L.dim
    return [
        (i, j, l, m)
        for i in range(n)
        for j in range(n)
        for l in range(n)
        for m in range(n)
        if not res[i][j][l][m].is_zero
    ]


def is_jacobi_zero(L: LieAlgebra) -> bool:
    return not jacobi_violations(L)


@dataclass
class SymmetricTensor:
    """Symmetric contravariant 2-tensor K^{ab} (e.g. a quadratic Casimir)."""

    k: Matrix

    def __post_init__(self):
        n = len(self.k)
        self.k = mat(self.k)
        for row in self.k:
            if len(row) != n:
                raise ShapeError("symmetric tensor must be square")
        for a in range(n):
            for b in range(a + 1, n):
                if self.k[a][b] != self.k[b][a]:
                    raise ShapeError(f"tensor not symmetric at ({a},{b})")


def casimir_invariant(L: LieAlgebra, K: SymmetricTensor) -> bool:
    """ad-invariance of K: sum_c (C_ic^a K^cb + C_ic^b K^ac) = 0 for all i,a,b."""
    n = L.dim
    if len(K.k) != n:
        raise DimensionMismatch("tensor dimension does not match algebra")
    for i in range(n):
        for a in range(n):
            for b in range(n):
                total = PolyExpr.zero()
                for c in range(n):
                    if not L.c[i][c][a].is_zero and not K.k[c][b].is_zero:
                        total = total + L.c[i][c][a] * K.k[c][b]
                    if not L.c[i][c][b].is_zero and not K.k[a][c].is_zero:
                        total = total + L.c[i][c][b] * K.k[a][c]
                if not total.is_zero:
                    return False
    return True


@dataclass
class BasisChange:
    """Invertible linear map; row a of ``m`` is the new basis vector e'_a in
    old coordinates.  The exact inverse is computed on construction."""

    m: Matrix
    labels: tuple[str, ...]
    inverse: Matrix = field(default=None, repr=False)

    def __post_init__(self):
        self.m = mat(self.m)
        self.labels = tuple(self.labels)
        if len(self.labels) != len(self.m):
            raise ShapeError("one label per basis row required")
        if self.inverse is None:
            self.inverse = invert(self.m)  # raises SingularMatrix

    def inverted(self, labels: Sequence[str]) -> "BasisChange":
        return BasisChange(self.inverse, tuple(labels), inverse=self.m)


def transform_structure(c, m: Matrix, w: Matrix):
    """C'_ab^c = M_a^i M_b^j C_ij^k W_k^c for basis rows M, inverse W."""
    n = len(m)
    out = zero_tensor3(n)
    sparse = [
        (i, j, k, c[i][j][k])
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if not c[i][j][k].is_zero
    ]
    for a in range(n):
        for b in range(n):
            acc = [PolyExpr.zero()] * n
            for i, j, k, coef in sparse:
                if m[a][i].is_zero or m[b][j].is_zero:
                    continue
                scale = m[a][i] * m[b][j] * coef
                for cc in range(n):
                    if not w[k][cc].is_zero:
                        acc[cc] = acc[cc] + scale * w[k][cc]
            out[a][b] = acc
    return out


def transform_contra2(r: Matrix, w: Matrix) -> Matrix:
    """r'^ab = W_i^a W_j^b r^ij (contravariant 2-tensor push-forward)."""
    n = len(w)
    out = zero_matrix(n)
    for i in range(n):
        for j in range(n):
            if r[i][j].is_zero:
                continue
            for a in range(n):
                if w[i][a].is_zero:
                    continue
                for b in range(n):
                    if not w[j][b].is_zero:
                        out[a][b] = out[a][b] + w[i][a] * w[j][b] * r[i][j]
    return out


def transform_cocomm(f, m: Matrix, w: Matrix):
    """f'_a^bc = M_a^i f_i^jk W_j^b W_k^c."""
    n = len(m)
    out = zero_tensor3(n)
    sparse = [
        (i, j, k, f[i][j][k])
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if not f[i][j][k].is_zero
    ]
    for a in range(n):
        for i, j, k, coef in sparse:
            if m[a][i].is_zero:
                continue
            scale = m[a][i] * coef
            for b in range(n):
                if w[j][b].is_zero:
                    continue
                for cc in range(n):
                    if not w[k][cc].is_zero:
                        out[a][b][cc] = out[a][b][cc] + scale * w[j][b] * w[k][cc]
    return out


def transform_vector(v: Vector, w: Matrix) -> Vector:
    n = len(w)
    out = [PolyExpr.zero()] * n
    for i in range(n):
        if as_poly(v[i]).is_zero:
            continue
        for a in range(n):
            if not w[i][a].is_zero:
                out[a] = out[a] + as_poly(v[i]) * w[i][a]
    return out


def change_basis(L: LieAlgebra, bc: BasisChange) -> LieAlgebra:
    """Structure constants in the new basis; bracket commutes with the map."""
    if len(bc.m) != L.dim:
        raise DimensionMismatch("basis change dimension does not match algebra")
    c = transform_structure(L.c, bc.m, bc.inverse)
    used = set()
    for row in c:
        for col in row:
            for p in col:
                used |= p.parameters()
    return LieAlgebra(L.dim, bc.labels, tuple(sorted(used)), c)


def substitute_params(L: LieAlgebra, mapping: Mapping[str, PolyLike]) -> LieAlgebra:
    """Apply an exact parameter substitution to every structure constant."""
    c = [
        [[L.c[i][j][k].substitute(mapping) for k in range(L.dim)]
         for j in range(L.dim)]
        for i in range(L.dim)
    ]
    used = set()
    for row in c:
        for col in row:
            for p in col:
                used |= p.parameters()
    return LieAlgebra(L.dim, L.labels, tuple(sorted(used)), c)


def algebras_equal(a: LieAlgebra, b: LieAlgebra) -> bool:
    """Exact equality of dimension and structure tensors (labels ignored)."""
    if a.dim != b.dim:
        return False
    return all(
        a.c[i][j][k] == b.c[i][j][k]
        for i in range(a.dim)
        for j in range(a.dim)
        for k in range(a.dim)
    )
