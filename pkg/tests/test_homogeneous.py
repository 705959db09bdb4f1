import random
from fractions import Fraction as Q

import pytest

from liedouble.double import build_double, double_of_double
from liedouble.errors import (
    BadPartition,
    BasisNotComplete,
    NotClosed,
    NotInFirstFactor,
    WrongDimension,
)
from liedouble.exactalg import PolyExpr
from liedouble.homogeneous import (
    LagrangianSpec,
    Subspace,
    annihilator,
    classify,
    is_lagrangian,
    is_semidirect,
    is_subalgebra,
    lagrangian_bracket_table,
    lagrangian_from_pi,
    spec_with_zero_pi,
    subspace_in_g,
)
from liedouble.liealg import bracket

P = PolyExpr.parse


def spec_for(B, h_labels, pi=None):
    """Spec with h spanned by basis labels and the remaining basis vectors,
    in basis order, as the complement."""
    L = B.algebra
    h = [L.basis_vector(lab) for lab in h_labels]
    rest = [L.basis_vector(lab) for lab in L.labels if lab not in h_labels]
    if pi is None:
        return spec_with_zero_pi(h, rest)
    return LagrangianSpec(h, rest, pi)


def table_as_dict(table):
    out = {}
    for i, a in enumerate(table.labels):
        for j, b in enumerate(table.labels):
            if i >= j:
                continue
            entry = {
                table.labels[k]: table.c[i][j][k]
                for k in range(table.dim)
                if not table.c[i][j][k].is_zero
            }
            out[(a, b)] = {k: str(v) for k, v in entry.items()}
    return out


# --- annihilator -----------------------------------------------------------


def test_annihilator_of_rotation_subalgebra(sl2_hyp):
    D = build_double(sl2_hyp)
    h = subspace_in_g(D, [sl2_hyp.algebra.basis_vector("J12")])
    ann = annihilator(D, h)
    assert ann.n_vectors == 2
    expect = {tuple(str(x) for x in v) for v in ann.vectors}
    a1 = ("0",) * 3 + ("1", "0", "0")
    a2 = ("0",) * 3 + ("0", "1", "0")
    assert expect == {a1, a2}


def test_annihilator_of_full_algebra(sl2_hyp):
    D = build_double(sl2_hyp)
    h = subspace_in_g(
        D, [sl2_hyp.algebra.basis_vector(i) for i in range(3)]
    )
    assert annihilator(D, h).n_vectors == 0


def test_annihilator_of_null_generator(sl2_par_j):
    D = build_double(sl2_par_j)
    h = subspace_in_g(D, [sl2_par_j.algebra.basis_vector("J+")])
    ann = annihilator(D, h)
    labels = D.algebra.labels
    spanned = set()
    for v in ann.vectors:
        for i, x in enumerate(v):
            if not x.is_zero:
                spanned.add(labels[i])
    assert spanned == {"chi", "a-"}


def test_annihilator_rejects_dual_components(sl2_hyp):
    D = build_double(sl2_hyp)
    bad = Subspace(6, [[0, 0, 0, 1, 0, 0]])
    with pytest.raises(NotInFirstFactor):
        annihilator(D, bad)


# --- lagrangian_from_pi / is_lagrangian -------------------------------------


def test_zero_pi_gives_h_plus_annihilator(sl2_hyp):
    D = build_double(sl2_hyp)
    spec = spec_for(sl2_hyp, ["J12"])
    l = lagrangian_from_pi(D, spec)
    assert l.n_vectors == 3
    flat = [tuple(str(x) for x in v) for v in l.vectors]
    assert flat[0] == ("0", "0", "1", "0", "0", "0")  # J12
    assert flat[1] == ("0", "0", "0", "1", "0", "0")  # a1
    assert flat[2] == ("0", "0", "0", "0", "1", "0")  # a2
    assert is_lagrangian(D, l)


def test_pi_block_appears_in_primal_part(sl2_hyp):
    D = build_double(sl2_hyp)
    spec = spec_for(sl2_hyp, ["J12"], pi=[[0, 1], [-1, 0]])
    l = lagrangian_from_pi(D, spec)
    # first T-vector: t^{P1} + pi^{01} T_{P2} = a1 + P2
    assert [str(x) for x in l.vectors[1]] == ["0", "1", "0", "1", "0", "0"]
    assert is_lagrangian(D, l)


def test_nonantisymmetric_pi_is_not_lagrangian(sl2_hyp):
    D = build_double(sl2_hyp)
    spec = spec_for(sl2_hyp, ["J12"], pi=[[0, 1], [0, 0]])
    l = lagrangian_from_pi(D, spec)
    assert not is_lagrangian(D, l)


def test_pi_antisymmetry_iff_lagrangian_random(sl2_ell):
    D = build_double(sl2_ell)
    rng = random.Random(77)
    for _ in range(12):
        x = Q(rng.randint(-5, 5), rng.randint(1, 4))
        anti = [[0, x], [-x, 0]]
        spec = spec_for(sl2_ell, ["P1"], pi=anti)
        assert is_lagrangian(D, lagrangian_from_pi(D, spec))
        y = x + 1
        skewless = [[0, x], [-y, 0]]
        spec = spec_for(sl2_ell, ["P1"], pi=skewless)
        assert not is_lagrangian(D, lagrangian_from_pi(D, spec))


def test_first_factor_is_lagrangian(sl2_hyp):
    D = build_double(sl2_hyp)
    g_itself = subspace_in_g(
        D, [sl2_hyp.algebra.basis_vector(i) for i in range(3)]
    )
    assert is_lagrangian(D, g_itself)


def test_dual_pair_span_is_not_lagrangian(sl2_hyp):
    D = build_double(sl2_hyp)
    bad = Subspace(
        6,
        [
            D.algebra.basis_vector("P1"),
            D.algebra.basis_vector("a1"),
            D.algebra.basis_vector("a2"),
        ],
    )
    assert not is_lagrangian(D, bad)


def test_wrong_dimension_rejected(sl2_hyp):
    D = build_double(sl2_hyp)
    with pytest.raises(WrongDimension):
        is_lagrangian(D, Subspace(6, [D.algebra.basis_vector("P1")]))


def test_incomplete_basis_rejected(sl2_hyp):
    D = build_double(sl2_hyp)
    h = [sl2_hyp.algebra.basis_vector("J12")]
    comp = [sl2_hyp.algebra.basis_vector("J12")]  # not a complement
    with pytest.raises(BasisNotComplete):
        lagrangian_from_pi(D, LagrangianSpec(h, comp, [[0]]))


# --- is_subalgebra ----------------------------------------------------------


def test_rotation_lagrangian_is_subalgebra(sl2_hyp):
    D = build_double(sl2_hyp)
    l = lagrangian_from_pi(D, spec_for(sl2_hyp, ["J12"]))
    assert is_subalgebra(D, l)


def test_wrong_pairing_partner_is_not_subalgebra(sl2_hyp):
    D = build_double(sl2_hyp)
    jplus = [1, 1, 0, 0, 0, 0]  # P1 + P2 in double coordinates
    a1 = D.algebra.basis_vector("a1")
    got = bracket(D.algebra, jplus, a1)
    # [J+, a1] = 2η J12 + theta, which leaves span{J+, a1}
    assert [str(x) for x in got] == ["0", "0", "2*eta", "0", "0", "1"]
    assert not is_subalgebra(D, Subspace(6, [jplus, a1]))


# --- classify ---------------------------------------------------------------


def test_classify_poisson_subgroup_case(sl2_hyp):
    D = build_double(sl2_hyp)
    rep = classify(D, sl2_hyp, spec_for(sl2_hyp, ["J12"]))
    assert rep.lagrangian and rep.subalgebra
    assert rep.coisotropic and rep.poisson_subgroup
    assert rep.violations == []
    assert all(x.is_zero for plane in rep.m_i for row in plane for x in row)


def test_classify_coisotropic_only_case(sl2_hyp):
    D = build_double(sl2_hyp)
    rep = classify(D, sl2_hyp, spec_for(sl2_hyp, ["P1"]))
    assert rep.coisotropic and not rep.poisson_subgroup
    assert any("mixed" in v for v in rep.violations)


def test_classify_twisted_lorentz_subalgebra(so22_twisted):
    D = build_double(so22_twisted)
    rep = classify(D, so22_twisted, spec_for(so22_twisted, ["J", "K1", "K2"]))
    assert rep.lagrangian and rep.subalgebra
    assert rep.coisotropic and not rep.poisson_subgroup


def test_classify_report_json(sl2_hyp):
    D = build_double(sl2_hyp)
    rep = classify(D, sl2_hyp, spec_for(sl2_hyp, ["P1"]))
    data = rep.to_json()
    assert data["coisotropic"] is True
    assert data["poisson_subgroup"] is False
    assert data["m_i_nonzero"] == []
    assert data["violations"]


# --- bracket tables ---------------------------------------------------------


def test_table_hyperbolic_rotation(sl2_hyp):
    D = build_double(sl2_hyp)
    table = lagrangian_bracket_table(D, spec_for(sl2_hyp, ["J12"]))
    assert table.labels == ("J12", "a1", "a2")
    assert table_as_dict(table) == {
        ("J12", "a1"): {"a2": "-1"},
        ("J12", "a2"): {"a1": "-1"},
        ("a1", "a2"): {},
    }


def test_table_elliptic_rotation(sl2_ell):
    D = build_double(sl2_ell)
    table = lagrangian_bracket_table(D, spec_for(sl2_ell, ["P1"]))
    assert table.labels == ("P1", "a2", "theta")
    assert table_as_dict(table) == {
        ("P1", "a2"): {"theta": "1"},
        ("P1", "theta"): {"a2": "-1"},
        ("a2", "theta"): {},
    }


def test_table_parabolic_null_generator(sl2_par_j):
    D = build_double(sl2_par_j)
    table = lagrangian_bracket_table(D, spec_for(sl2_par_j, ["J+"]))
    assert table.labels == ("J+", "chi", "a-")
    assert table_as_dict(table) == {
        ("J+", "chi"): {"a-": "-1"},
        ("J+", "a-"): {},
        ("chi", "a-"): {},
    }


LINEAR_TABLE = {
    ("J", "K1"): {"K2": "1"},
    ("J", "K2"): {"K1": "-1"},
    ("K1", "K2"): {"J": "-1"},
    ("p0", "p1"): {"p2": "-1"},
    ("p0", "p2"): {"p1": "1"},
    ("p1", "p2"): {"p0": "1"},
    ("J", "p0"): {},
    ("K2", "p0"): {"p2": "-1"},
    ("K1", "p0"): {"p1": "-1"},
    ("J", "p1"): {"p2": "1"},
    ("K2", "p1"): {},
    ("K1", "p1"): {"p0": "-1"},
    ("J", "p2"): {"p1": "-1"},
    ("K2", "p2"): {"p0": "-1"},
    ("K1", "p2"): {},
}


def reorder(expected):
    """Expected tables are written with the double's pair orientation
    [x, y]; normalise to the table's label order with antisymmetry."""
    return expected


def test_table_linear_six_dimensional(so22_r1):
    D = build_double(so22_r1)
    table = lagrangian_bracket_table(D, spec_for(so22_r1, ["J", "K1", "K2"]))
    assert table.labels == ("J", "K1", "K2", "p0", "p1", "p2")
    got = table_as_dict(table)
    for (a, b), entry in LINEAR_TABLE.items():
        i, j = table.labels.index(a), table.labels.index(b)
        if i < j:
            assert got[(a, b)] == entry, (a, b)
        else:
            flipped = {
                k: str(-PolyExpr.parse(v)) for k, v in entry.items()
            }
            assert got[(b, a)] == flipped, (a, b)


TWISTED_TABLE = {
    ("J", "K1"): {"K2": "1"},
    ("J", "K2"): {"K1": "-1"},
    ("K1", "K2"): {"J": "-1"},
    ("p0", "p1"): {},
    ("p0", "p2"): {"p0": "-1/2", "p1": "-1/2"},
    ("p1", "p2"): {"p0": "-1/2", "p1": "-1/2"},
    ("p0", "J"): {"K1": "1/2"},
    ("p0", "K2"): {"p2": "1", "K1": "1/2"},
    ("p0", "K1"): {"p1": "1"},
    ("p1", "J"): {"p2": "-1", "K1": "-1/2"},
    ("p1", "K2"): {"K1": "-1/2"},
    ("p1", "K1"): {"p0": "1"},
    ("p2", "J"): {"p1": "1", "J": "-1/2", "K2": "1/2"},
    ("p2", "K2"): {"p0": "1", "J": "1/2", "K2": "-1/2"},
    ("p2", "K1"): {},
}


def test_table_twisted_six_dimensional(so22_twisted):
    D = build_double(so22_twisted)
    table = lagrangian_bracket_table(
        D, spec_for(so22_twisted, ["J", "K1", "K2"])
    )
    assert table.labels == ("J", "K1", "K2", "p0", "p1", "p2")
    got = table_as_dict(table)
    for (a, b), entry in TWISTED_TABLE.items():
        i, j = table.labels.index(a), table.labels.index(b)
        if i < j:
            assert got[(a, b)] == entry, (a, b)
        else:
            flipped = {k: str(-PolyExpr.parse(v)) for k, v in entry.items()}
            assert got[(b, a)] == flipped, (a, b)
    from liedouble.liealg import is_jacobi_zero

    assert is_jacobi_zero(table)


def test_null_generator_table_in_ck_basis(sl2_hyp):
    # h = span{P1 + P2} is coisotropic for the hyperbolic structure; the
    # reduced bracket closes even though h is not spanned by a basis vector
    D = build_double(sl2_hyp)
    L = sl2_hyp.algebra
    h = [[1, 1, 0]]
    comp = [L.basis_vector("P2"), L.basis_vector("J12")]
    spec = LagrangianSpec(h, comp, [[0, 0], [0, 0]])
    rep = classify(D, sl2_hyp, spec)
    assert rep.coisotropic and not rep.poisson_subgroup
    table = lagrangian_bracket_table(D, spec)
    assert table.dim == 3


def test_table_not_closed(so22_twisted):
    # h = span{P1, K1} is not a subalgebra ([P1,K1] = -P0 leaves the span),
    # so the candidate l = h ⊕ h^perp cannot carry an induced bracket
    D = build_double(so22_twisted)
    L = so22_twisted.algebra
    h = [L.basis_vector("P1"), L.basis_vector("K1")]
    comp = [L.basis_vector(lab) for lab in ("J", "P0", "P2", "K2")]
    zero = [[0] * 4 for _ in range(4)]
    spec = LagrangianSpec(h, comp, zero)
    rep = classify(D, so22_twisted, spec)
    assert not rep.subalgebra
    with pytest.raises(NotClosed):
        lagrangian_bracket_table(D, spec)


# --- iterated double: l = a ⊕ a^⊥ -------------------------------------------


def test_double_of_double_lagrangian_is_semidirect(sl2_eta, iso11_eta):
    for B in (sl2_eta, iso11_eta):
        D2 = double_of_double(B)
        B2 = D2.source
        spec = spec_for(B2, ["X0", "X1", "X2"])
        rep = classify(D2, B2, spec)
        assert rep.lagrangian and rep.subalgebra
        assert rep.coisotropic and rep.poisson_subgroup
        table = lagrangian_bracket_table(D2, spec)
        assert table.labels == ("X0", "X1", "X2", "Y0", "Y1", "Y2")
        # [X_i, X_j] = C_ij^k X_k, [Y_i, Y_j] = C_ij^k Y_k, [Y_i, X_j] = C_ij^k Y_k
        n = 3
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert table.c[i][j][k] == B.algebra.c[i][j][k]
                    assert table.c[n + i][n + j][n + k] == B.algebra.c[i][j][k]
                    assert table.c[n + i][j][n + k] == B.algebra.c[i][j][k]
                    assert table.c[i][j][n + k].is_zero
                    assert table.c[n + i][n + j][k].is_zero
                    assert table.c[n + i][j][k].is_zero
        assert is_semidirect(table, [0, 1, 2], [3, 4, 5])


def test_semidirect_verdicts(so22_r1, so22_twisted):
    D = build_double(so22_r1)
    table = lagrangian_bracket_table(D, spec_for(so22_r1, ["J", "K1", "K2"]))
    assert is_semidirect(table, [0, 1, 2], [3, 4, 5])
    D = build_double(so22_twisted)
    table = lagrangian_bracket_table(
        D, spec_for(so22_twisted, ["J", "K1", "K2"])
    )
    assert not is_semidirect(table, [0, 1, 2], [3, 4, 5])


def test_semidirect_abelian_and_partition_errors():
    from liedouble.liealg import new_lie_algebra

    abelian = new_lie_algebra(4, ("a", "b", "c", "d"), [])
    assert is_semidirect(abelian, [0, 1], [2, 3])
    with pytest.raises(BadPartition):
        is_semidirect(abelian, [0, 1], [1, 2, 3])
    with pytest.raises(BadPartition):
        is_semidirect(abelian, [0], [2, 3])


def test_poisson_subgroup_implies_semidirect_catalog(sl2_hyp, sl2_ell, sl2_par_j):
    cases = [(sl2_hyp, ["J12"]), (sl2_ell, ["P1"]), (sl2_par_j, ["J+"])]
    for B, h_labels in cases:
        D = build_double(B)
        spec = spec_for(B, h_labels)
        rep = classify(D, B, spec)
        assert rep.poisson_subgroup
        table = lagrangian_bracket_table(D, spec)
        h_idx = [table.labels.index(lab) for lab in h_labels]
        t_idx = [i for i in range(table.dim) if i not in h_idx]
        assert is_semidirect(table, h_idx, t_idx)


def test_coisotropic_table_pattern(sl2_ell, sl2_hyp):
    # with π = 0 the reduced bracket is
    #   [t^a, t^b] = f^{ab}_g t^g,
    #   [t^a, H_i] = C^a_{i b} t^b + f_i^{j a} H_j,
    #   [H_i, H_j] = C_ij^k H_k
    for B, h_label in ((sl2_ell, "J12"), (sl2_hyp, "P1")):
        D = build_double(B)
        spec = spec_for(B, [h_label])
        rep = classify(D, B, spec)
        assert rep.coisotropic and not rep.poisson_subgroup
        table = lagrangian_bracket_table(D, spec)
        L = B.algebra
        f = B.cocomm.f
        hi = L.index(h_label)
        comp = [i for i in range(3) if i != hi]
        # table basis order: (H, t^0, t^1)
        for a in range(2):
            for b in range(2):
                got = table.c[1 + a][1 + b]
                assert got[0].is_zero  # no H component in [t,t]
                for g in range(2):
                    assert got[1 + g] == f[comp[g]][comp[a]][comp[b]]
            got = table.c[1 + a][0]  # [t^a, H]
            assert got[0] == f[hi][hi][comp[a]]  # f_i^{j a} with j = i = h
            for b in range(2):
                assert got[1 + b] == L.c[hi][comp[b]][comp[a]]  # C^a_{i b}
