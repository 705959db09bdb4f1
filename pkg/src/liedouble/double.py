"""The classical double D(g) and the iterated double D(D(a)).

For a bialgebra with [X_i,X_j] = C_ij^k X_k and δ(X_i) = f_i^{jk} X_j⊗X_k,
the double carries the brackets

    [X_i,X_j] = C_ij^k X_k
    [x^i,x^j] = f_k^{ij} x^k
    [x^i,X_j] = C_jk^i x^k − f_j^{ik} X_k

with dual basis {x^i}, the hyperbolic pairing <X_i, x^j> = δ_i^j, and the
canonical element r = Σ_i x^i ⊗ X_i.  The exposed antisymmetric r-matrix
is the skew part (1/2) Σ_i (x^i⊗X_i − X_i⊗x^i): under the package's wedge
normalization u∧v = u⊗v − v⊗u this is the tensor whose basis transports
land exactly on the published quasitriangular r-matrices.

The canonical cocommutator of the double is
δ_D(X_i) = −f_i^{jk} X_j⊗X_k,  δ_D(x^i) = C_jk^i x^j⊗x^k; feeding it back
into the construction yields D(D(a)) on the ordered basis {X, x, y, Y}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bialgebra import CocommTensor, LieBialgebra, new_bialgebra
from .errors import DimensionMismatch
from .exactalg import PolyExpr, Q, as_poly
from .exactlinalg import Matrix, Vector
from .liealg import LieAlgebra, zero_matrix, zero_tensor3
from .rmatrix import RMatrix

HALF = PolyExpr.const(Q(1, 2))


def double_structure_tensor(L: LieAlgebra, f) -> list:
    """Dense 2n structure tensor of D(g) from (C, f)."""
    n = L.dim
    c2 = zero_tensor3(2 * n)
    for i, j, k, coef in L.nonzero():
        c2[i][j][k] = coef
    for i in range(n):
        for j in range(n):
            for k in range(n):
                fk_ij = f[k][i][j]
                if not fk_ij.is_zero:
                    c2[n + i][n + j][n + k] = c2[n + i][n + j][n + k] + fk_ij
                # [x^i, X_j] = C_jk^i x^k - f_j^{ik} X_k
                c_jki = L.c[j][k][i]
                if not c_jki.is_zero:
                    c2[n + i][j][n + k] = c2[n + i][j][n + k] + c_jki
                    c2[j][n + i][n + k] = c2[j][n + i][n + k] - c_jki
                f_jik = f[j][i][k]
                if not f_jik.is_zero:
                    c2[n + i][j][k] = c2[n + i][j][k] - f_jik
                    c2[j][n + i][k] = c2[j][n + i][k] + f_jik
    return c2


def double_structure_algebra(B: LieBialgebra) -> LieAlgebra:
    """The 2n-dimensional algebra of D(g) (no Jacobi check here)."""
    n = B.dim
    c2 = double_structure_tensor(B.algebra, B.cocomm.f)
    labels = B.algebra.labels + B.dual_labels
    params = set()
    for plane in c2:
        for row in plane:
            for p in row:
                params |= p.parameters()
    return LieAlgebra(2 * n, labels, tuple(sorted(params)), c2)


@dataclass
class DoubleAlgebra:
    """D(g) with its split basis, canonical pairing and canonical r-matrix."""

    algebra: LieAlgebra          # dimension 2n, basis {X_i} + {x^i}
    n: int
    source: LieBialgebra
    pairing_matrix: Matrix       # hyperbolic form <X_i, x^j> = δ_i^j
    canonical_r_raw: Matrix      # Σ x^i ⊗ X_i (not antisymmetric)
    canonical_r_skew: RMatrix    # its skew part

    @property
    def dim(self) -> int:
        return 2 * self.n


def build_double(B: LieBialgebra) -> DoubleAlgebra:
    """Construct D(g) for a validated bialgebra."""
    n = B.dim
    algebra = double_structure_algebra(B)
    pairing_matrix = zero_matrix(2 * n)
    raw = zero_matrix(2 * n)
    skew = zero_matrix(2 * n)
    one = PolyExpr.one()
    for i in range(n):
        pairing_matrix[i][n + i] = one
        pairing_matrix[n + i][i] = one
        raw[n + i][i] = one
        skew[n + i][i] = HALF
        skew[i][n + i] = -HALF
    return DoubleAlgebra(
        algebra=algebra,
        n=n,
        source=B,
        pairing_matrix=pairing_matrix,
        canonical_r_raw=raw,
        canonical_r_skew=RMatrix(algebra.labels, skew),
    )


def pairing(D: DoubleAlgebra, u: Vector, v: Vector) -> PolyExpr:
    """Symmetric bilinear pairing <u, v> on the double."""
    if len(u) != D.dim or len(v) != D.dim:
        raise DimensionMismatch("pairing arguments must have length 2n")
    u = [as_poly(x) for x in u]
    v = [as_poly(x) for x in v]
    total = PolyExpr.zero()
    for i in range(D.n):
        total = total + u[i] * v[D.n + i] + u[D.n + i] * v[i]
    return total


def canonical_cocommutator(D: DoubleAlgebra) -> CocommTensor:
    """δ_D from the canonical element: δ_D(X_i) = −f_i^{jk} X_j⊗X_k,
    δ_D(x^i) = C_jk^i x^j⊗x^k."""
    n = D.n
    f2 = zero_tensor3(2 * n)
    src_f = D.source.cocomm.f
    src_c = D.source.algebra.c
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not src_f[i][j][k].is_zero:
                    f2[i][j][k] = -src_f[i][j][k]
                if not src_c[j][k][i].is_zero:
                    f2[n + i][n + j][n + k] = src_c[j][k][i]
    return CocommTensor(f2)


def second_dual_labels(n: int) -> tuple[str, ...]:
    """Default labels {y^i} (duals of X_i) and {Y_i} (duals of x^i)."""
    return tuple(f"y{i}" for i in range(n)) + tuple(f"Y{i}" for i in range(n))


def double_of_double(
    B: LieBialgebra, dual_labels: Sequence[str] | None = None
) -> DoubleAlgebra:
    """D(D(a)) on the ordered basis {X_i, x^i, y^i, Y_i}.

    The second application uses the canonical cocommutator of D(a); the
    pairing of the result satisfies <Y_i, x^j> = <y^j, X_i> = δ_i^j.
    """
    inner = build_double(B)
    delta = canonical_cocommutator(inner)
    labels = (
        tuple(dual_labels) if dual_labels is not None else second_dual_labels(B.dim)
    )
    outer_bialgebra = new_bialgebra(inner.algebra, delta, dual_labels=labels)
    return build_double(outer_bialgebra)


def crossed_bracket_mismatches(D2: DoubleAlgebra, B: LieBialgebra) -> list:
    """Check the iterated double's crossed brackets against the closed forms
    assembled from the base bialgebra's tensors:

        [Y_i, X_j] = C_ij^k Y_k                 [y^i, x^j] = f_k^{ij} y^k
        [y^i, X_j] = C_jk^i y^k + f_j^{ik} (X_k - Y_k)
        [Y_i, x^j] = f_i^{jk} Y_k - C_ik^j (x^k + y^k)

    Returns a list of human-readable mismatch descriptions (empty = pass).
    """
    from .liealg import bracket

    n = B.dim
    alg = D2.algebra
    C = B.algebra.c
    f = B.cocomm.f
    mismatches = []

    def expect(pairs):
        v = [PolyExpr.zero()] * (4 * n)
        for idx, coef in pairs:
            v[idx] = v[idx] + coef
        return v

    for i in range(n):
        for j in range(n):
            cases = {
                f"[{alg.labels[3 * n + i]}, {alg.labels[j]}]": (
                    alg.basis_vector(3 * n + i),
                    alg.basis_vector(j),
                    expect([(3 * n + k, C[i][j][k]) for k in range(n)]),
                ),
                f"[{alg.labels[2 * n + i]}, {alg.labels[n + j]}]": (
                    alg.basis_vector(2 * n + i),
                    alg.basis_vector(n + j),
                    expect([(2 * n + k, f[k][i][j]) for k in range(n)]),
                ),
                f"[{alg.labels[2 * n + i]}, {alg.labels[j]}]": (
                    alg.basis_vector(2 * n + i),
                    alg.basis_vector(j),
                    expect(
                        [(2 * n + k, C[j][k][i]) for k in range(n)]
                        + [(k, f[j][i][k]) for k in range(n)]
                        + [(3 * n + k, -f[j][i][k]) for k in range(n)]
                    ),
                ),
                f"[{alg.labels[3 * n + i]}, {alg.labels[n + j]}]": (
                    alg.basis_vector(3 * n + i),
                    alg.basis_vector(n + j),
                    expect(
                        [(3 * n + k, f[i][j][k]) for k in range(n)]
                        + [(n + k, -C[i][k][j]) for k in range(n)]
                        + [(2 * n + k, -C[i][k][j]) for k in range(n)]
                    ),
                ),
            }
            for name, (u, v, expected) in cases.items():
                if bracket(alg, u, v) != expected:
                    mismatches.append(f"{name} differs from the closed form")
    return mismatches


# --- bracket-table emission ---------------------------------------------


def format_combo(labels: Sequence[str], coeffs: Vector) -> str:
    """Render Σ coeff_k · label_k, e.g. ``x2 + 1/2*eta*X1``."""
    pieces = []
    for lab, coef in zip(labels, coeffs):
        coef = as_poly(coef)
        if coef.is_zero:
            continue
        if coef == 1:
            term = lab
        elif coef == -1:
            term = "-" + lab
        elif coef.is_single_term:
            text = str(coef)
            term = f"{text}*{lab}"
        else:
            term = f"({coef})*{lab}"
        pieces.append(term)
    if not pieces:
        return "0"
    out = pieces[0]
    for term in pieces[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def bracket_table_text(L: LieAlgebra) -> str:
    """Aligned plain-text table of all brackets [e_a, e_b] with a < b."""
    lines = []
    heads = []
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            heads.append(f"[{L.labels[a]}, {L.labels[b]}]")
    width = max(len(h) for h in heads)
    idx = 0
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            rhs = format_combo(L.labels, [L.c[a][b][k] for k in range(L.dim)])
            lines.append(f"{heads[idx].ljust(width)} = {rhs}")
            idx += 1
    return "\n".join(lines) + "\n"


def bracket_table_json(L: LieAlgebra) -> dict:
    return L.to_json()
