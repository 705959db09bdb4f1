"""Numerical chart layer: group charts, invariant vector fields, Sklyanin
brackets and the closed-form Poisson bracket library.

Charts
------
CK    coordinates (theta, a1, a2) with group element
      g = exp(a1 P1) exp(a2 P2) exp(theta J12) in the 3x3 representation;
PM    coordinates (a+, a-, chi) with 2x2 element
      T = exp(a- J-) exp(a+ J+) exp(chi J3);
ADS3  coordinates (x0, x1, x2), carrying only closed-form brackets.

Coordinate functions are the chart projections, so the directional
derivative of a coordinate along an invariant field is literally a field
component; no symbolic differentiation is needed.

The Sklyanin bracket of two coordinates is
    {f, g} = r^{kl} (X^L_k.f X^L_l.g − X^R_k.f X^R_l.g),
with the left-invariant fields generating right translations
(d/dt coords(g·exp(tX)) at t=0) and the right-invariant fields left
translations.  The wedge normalization of the r-matrices is fixed in
:mod:`liedouble.rmatrix`; the hyperbolic family on the CK chart is the
calibration case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import OutOfChart, UnknownBracket, WrongChart
from .rmatrix import RMatrix

CK, PM, ADS3 = "CK", "PM", "ADS3"

CHART_COORDS = {
    CK: ("theta", "a1", "a2"),
    PM: ("a+", "a-", "chi"),
    ADS3: ("x0", "x1", "x2"),
}

CHART_FIELD_LABELS = {CK: ("P1", "P2", "J12"), PM: ("J3", "J+", "J-")}


@dataclass(frozen=True)
class ChartPoint:
    chart_id: str
    coords: tuple

    def __post_init__(self):
        if self.chart_id not in CHART_COORDS:
            raise WrongChart(f"unknown chart {self.chart_id!r}")
        if len(self.coords) != 3:
            raise WrongChart("chart points have three coordinates")
        object.__setattr__(self, "coords", tuple(float(x) for x in self.coords))


def point(chart_id: str, *coords) -> ChartPoint:
    return ChartPoint(chart_id, tuple(coords))


def _require(p: ChartPoint, chart_id: str):
    if p.chart_id != chart_id:
        raise WrongChart(f"expected a {chart_id} point, got {p.chart_id}")


def coord_index(chart_id: str, name) -> int:
    if isinstance(name, int):
        if not 0 <= name < 3:
            raise WrongChart(f"coordinate index {name} out of range")
        return name
    try:
        return CHART_COORDS[chart_id].index(name)
    except ValueError:
        raise WrongChart(
            f"{name!r} is not a coordinate of chart {chart_id}"
        ) from None


# --- generalized trigonometry for the two-parameter family -----------------


def _ck_cos(kappa: float, x: float) -> float:
    if kappa > 0:
        return math.cos(math.sqrt(kappa) * x)
    if kappa < 0:
        return math.cosh(math.sqrt(-kappa) * x)
    return 1.0


def _ck_sin(kappa: float, x: float) -> float:
    if kappa > 0:
        w = math.sqrt(kappa)
        return math.sin(w * x) / w
    if kappa < 0:
        w = math.sqrt(-kappa)
        return math.sinh(w * x) / w
    return x


def ck_matrix(p: ChartPoint, k1: float = 1.0, k2: float = -1.0) -> np.ndarray:
    """3x3 matrix of exp(a1 P1) exp(a2 P2) exp(theta J12).

    Coordinate a1 lives at curvature k1, a2 at k1*k2, theta at k2; the
    default (1, -1) is the Lorentzian chart used throughout."""
    _require(p, CK)
    theta, a1, a2 = p.coords
    c1, s1 = _ck_cos(k1, a1), _ck_sin(k1, a1)
    c2, s2 = _ck_cos(k1 * k2, a2), _ck_sin(k1 * k2, a2)
    ct, st = _ck_cos(k2, theta), _ck_sin(k2, theta)
    return np.array(
        [
            [
                c1 * c2,
                -k1 * s1 * ct - k1 * k2 * c1 * s2 * st,
                k1 * k2 * s1 * st - k1 * k2 * c1 * s2 * ct,
            ],
            [
                s1 * c2,
                c1 * ct - k1 * k2 * s1 * s2 * st,
                -k2 * c1 * st - k1 * k2 * s1 * s2 * ct,
            ],
            [s2, c2 * st, c2 * ct],
        ]
    )


def ck_chart_inverse(m: np.ndarray) -> ChartPoint:
    """Invert :func:`ck_matrix` at (k1, k2) = (1, -1).

    a2 = asinh m31, a1 = atan2(m21, m11), theta = atanh(m32/m33); raises
    :class:`OutOfChart` when the formulas are singular or the matrix does
    not reproduce."""
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise OutOfChart("expected a 3x3 matrix")
    if m[2][2] <= 0 or abs(m[2][1]) >= abs(m[2][2]):
        raise OutOfChart("matrix lies outside the chart image (theta branch)")
    a2 = math.asinh(m[2][0])
    a1 = math.atan2(m[1][0], m[0][0])
    theta = math.atanh(m[2][1] / m[2][2])
    p = ChartPoint(CK, (theta, a1, a2))
    if not np.allclose(ck_matrix(p), m, rtol=1e-8, atol=1e-8):
        raise OutOfChart("matrix is not in the image of the chart")
    return p


def pm_matrix(p: ChartPoint) -> np.ndarray:
    """2x2 element exp(a- J-) exp(a+ J+) exp(chi J3)."""
    _require(p, PM)
    ap, am, chi = p.coords
    e = math.exp(chi)
    return np.array([[e, ap / e], [am * e, (1.0 + ap * am) / e]])


def pm_chart_inverse(m: np.ndarray) -> ChartPoint:
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise OutOfChart("expected a 2x2 matrix")
    if m[0][0] <= 0:
        raise OutOfChart("chart requires a positive upper-left entry")
    chi = math.log(m[0][0])
    am = m[1][0] / m[0][0]
    ap = m[0][1] * m[0][0]
    p = ChartPoint(PM, (ap, am, chi))
    if not np.allclose(pm_matrix(p), m, rtol=1e-8, atol=1e-8):
        raise OutOfChart("matrix is not in the image of the chart")
    return p


def group_matrix(p: ChartPoint) -> np.ndarray:
    return ck_matrix(p) if p.chart_id == CK else pm_matrix(p)


def chart_inverse(chart_id: str, m: np.ndarray) -> ChartPoint:
    return ck_chart_inverse(m) if chart_id == CK else pm_chart_inverse(m)


def generator_matrix(chart_id: str, label: str) -> np.ndarray:
    """Representation matrices of the chart's Lie algebra basis."""
    if chart_id == CK:
        gens = {
            "P1": np.array([[0.0, -1, 0], [1, 0, 0], [0, 0, 0]]),
            "P2": np.array([[0.0, 0, 1], [0, 0, 0], [1, 0, 0]]),
            "J12": np.array([[0.0, 0, 0], [0, 0, 1], [0, 1, 0]]),
        }
    elif chart_id == PM:
        gens = {
            "J3": np.array([[1.0, 0], [0, -1]]),
            "J+": np.array([[0.0, 1], [0, 0]]),
            "J-": np.array([[0.0, 0], [1, 0]]),
        }
    else:
        raise WrongChart(f"chart {chart_id} has no matrix representation")
    if label not in gens:
        raise WrongChart(f"{label!r} is not a generator of chart {chart_id}")
    return gens[label]


# --- invariant vector fields ------------------------------------------------


def invariant_fields(chart_id: str, side: str, p: ChartPoint) -> dict:
    """Component vectors of the invariant fields at p, keyed by generator.

    Components are with respect to the chart's coordinate order.  ``left``
    fields generate right translations g exp(tX), ``right`` fields left
    translations exp(tX) g."""
    if side not in ("left", "right"):
        raise WrongChart(f"side must be 'left' or 'right', got {side!r}")
    _require(p, chart_id)
    if chart_id == CK:
        theta, a1, a2 = p.coords
        ch2, th2 = math.cosh(a2), math.tanh(a2)
        cht, sht = math.cosh(theta), math.sinh(theta)
        c1, s1 = math.cos(a1), math.sin(a1)
        if side == "left":
            return {
                "J12": np.array([1.0, 0.0, 0.0]),
                "P1": np.array([-th2 * cht, cht / ch2, sht]),
                "P2": np.array([-th2 * sht, sht / ch2, cht]),
            }
        return {
            "J12": np.array([c1 / ch2, th2 * c1, s1]),
            "P1": np.array([0.0, 1.0, 0.0]),
            "P2": np.array([-s1 / ch2, -th2 * s1, c1]),
        }
    if chart_id == PM:
        ap, am, chi = p.coords
        e2, em2 = math.exp(2 * chi), math.exp(-2 * chi)
        if side == "left":
            return {
                "J+": np.array([e2, 0.0, 0.0]),
                "J-": np.array([ap * ap * em2, em2, ap * em2]),
                "J3": np.array([0.0, 0.0, 1.0]),
            }
        return {
            "J+": np.array([1.0 + 2 * ap * am, -am * am, am]),
            "J-": np.array([0.0, 1.0, 0.0]),
            "J3": np.array([2 * ap, -2 * am, 1.0]),
        }
    raise WrongChart(f"chart {chart_id} has no invariant fields")


def sklyanin_numeric(
    chart_id: str,
    r: RMatrix,
    params: Mapping[str, float],
    ci,
    cj,
    p: ChartPoint,
) -> float:
    """{coord_i, coord_j}(p) for the Sklyanin bracket of r.

    The r-matrix labels must be the chart's generator labels.  The value
    is computed once per unordered pair, so antisymmetry is exact."""
    i = coord_index(chart_id, ci)
    j = coord_index(chart_id, cj)
    if i == j:
        return 0.0
    sign = 1.0
    if i > j:
        i, j, sign = j, i, -1.0
    labels = CHART_FIELD_LABELS.get(chart_id)
    if labels is None:
        raise WrongChart(f"chart {chart_id} has no Sklyanin computation")
    if set(r.labels) != set(labels):
        raise WrongChart(
            f"r-matrix labels {r.labels} do not match chart generators {labels}"
        )
    left = invariant_fields(chart_id, "left", p)
    right = invariant_fields(chart_id, "right", p)
    total = 0.0
    n = len(r.labels)
    for a in range(n):
        la = r.labels[a]
        for b in range(a + 1, n):
            coef = r.r[a][b]
            if coef.is_zero:
                continue
            lb = r.labels[b]
            w = float(coef.evaluate(params))
            lterm = left[la][i] * left[lb][j] - left[lb][i] * left[la][j]
            rterm = right[la][i] * right[lb][j] - right[lb][i] * right[la][j]
            total += w * (lterm - rterm)
    return sign * total


# --- closed-form bracket library --------------------------------------------


@dataclass(frozen=True)
class BracketFn:
    """A named closed-form Poisson bracket on one chart.

    ``pairs`` maps an ordered coordinate pair to a function
    (params, coords) -> value; the other orientation follows by
    antisymmetry."""

    id: str
    chart_id: str
    param_names: tuple
    pairs: Mapping


_REGISTRY: dict[str, BracketFn] = {}


def register_bracket(fn: BracketFn):
    _REGISTRY[fn.id] = fn


def bracket_fn(bracket_id: str) -> BracketFn:
    if bracket_id not in _REGISTRY:
        raise UnknownBracket(f"no closed-form bracket named {bracket_id!r}")
    return _REGISTRY[bracket_id]


def bracket_ids() -> list:
    return sorted(_REGISTRY)


def closed_form(bracket_id: str, pair, p: ChartPoint, params: Mapping) -> float:
    """Evaluate the published closed form of {pair[0], pair[1]} at p."""
    fn = bracket_fn(bracket_id)
    _require(p, fn.chart_id)
    ci = coord_index(fn.chart_id, pair[0])
    cj = coord_index(fn.chart_id, pair[1])
    names = CHART_COORDS[fn.chart_id]
    key = (names[ci], names[cj])
    if key in fn.pairs:
        return fn.pairs[key](params, p.coords)
    rev = (key[1], key[0])
    if rev in fn.pairs:
        return -fn.pairs[rev](params, p.coords)
    if ci == cj:
        return 0.0
    raise UnknownBracket(f"bracket {bracket_id} has no pair {key}")


def _tanh_ratio(eta: float, x: float) -> float:
    return math.tanh(eta * x) / eta if eta != 0.0 else x


def _tan_ratio(eta: float, x: float) -> float:
    return math.tan(eta * x) / eta if eta != 0.0 else x


def _sin_ratio(eta: float, x: float) -> float:
    return math.sin(eta * x) / eta if eta != 0.0 else x


def _sinh_ratio(eta: float, x: float) -> float:
    return math.sinh(eta * x) / eta if eta != 0.0 else x


def _upsilon(eta: float, x0: float, x1: float) -> float:
    c = math.cos(eta * x0)
    return c * (c * math.cosh(eta * x1) + math.sinh(eta * x1))


def _install_builtin_brackets():
    # hyperbolic family, CK chart
    register_bracket(
        BracketFn(
            "hyp-CK",
            CK,
            ("eta",),
            {
                ("theta", "a1"): lambda q, c: -2
                * q["eta"]
                * math.sin(c[1])
                / math.cosh(c[2]),
                ("theta", "a2"): lambda q, c: -2 * q["eta"] * math.tanh(c[2]),
                ("a1", "a2"): lambda q, c: 2
                * q["eta"]
                * (1.0 / math.cosh(c[2]) - math.cos(c[1])),
            },
        )
    )
    # hyperbolic family, PM chart
    register_bracket(
        BracketFn(
            "hyp-PM",
            PM,
            ("eta",),
            {
                ("a+", "a-"): lambda q, c: -2 * q["eta"] * c[0] * c[1],
                ("chi", "a+"): lambda q, c: -q["eta"] * c[0],
                ("chi", "a-"): lambda q, c: -q["eta"] * c[1],
            },
        )
    )
    # elliptic family, CK chart
    register_bracket(
        BracketFn(
            "ell-CK",
            CK,
            ("z",),
            {
                ("theta", "a1"): lambda q, c: 2
                * q["z"]
                * math.sinh(c[0])
                / math.cosh(c[2]),
                ("theta", "a2"): lambda q, c: -2
                * q["z"]
                * (1.0 / math.cosh(c[2]) - math.cosh(c[0])),
                ("a1", "a2"): lambda q, c: -2 * q["z"] * math.tanh(c[2]),
            },
        )
    )
    # elliptic family, PM chart (published with the J-basis normalization)
    register_bracket(
        BracketFn(
            "ell-PM",
            PM,
            ("z",),
            {
                ("a+", "a-"): lambda q, c: -2
                * q["z"]
                * (c[1] * (1.0 + c[0] * c[1]) + c[0]),
                ("chi", "a+"): lambda q, c: -q["z"] * (1.0 - math.exp(2 * c[2]))
                + q["z"] * c[0] * c[0] * math.exp(-2 * c[2]),
                ("chi", "a-"): lambda q, c: -q["z"] * (1.0 - math.exp(-2 * c[2]))
                - q["z"] * c[1] * c[1],
            },
        )
    )
    # parabolic family, PM chart
    register_bracket(
        BracketFn(
            "par-PM",
            PM,
            (),
            {
                ("a+", "a-"): lambda q, c: -c[1] * (1.0 + c[0] * c[1]),
                ("chi", "a+"): lambda q, c: -0.5 * (1.0 - math.exp(2 * c[2])),
                ("chi", "a-"): lambda q, c: -0.5 * c[1] * c[1],
            },
        )
    )
    # parabolic family, CK chart
    register_bracket(
        BracketFn(
            "par-CK",
            CK,
            (),
            {
                ("theta", "a1"): lambda q, c: (math.exp(c[0]) - math.cos(c[1]))
                / math.cosh(c[2]),
                ("theta", "a2"): lambda q, c: math.exp(c[0])
                - 1.0 / math.cosh(c[2]),
                ("a1", "a2"): lambda q, c: math.sin(c[1]) - math.tanh(c[2]),
            },
        )
    )
    # first double structure on the 3d anti-de Sitter chart
    register_bracket(
        BracketFn(
            "ads3-double1",
            ADS3,
            ("eta",),
            {
                ("x0", "x1"): lambda q, c: -_tanh_ratio(q["eta"], c[2])
                * _upsilon(q["eta"], c[0], c[1]),
                ("x0", "x2"): lambda q, c: _tanh_ratio(q["eta"], c[1])
                * _upsilon(q["eta"], c[0], c[1]),
                ("x1", "x2"): lambda q, c: _tan_ratio(q["eta"], c[0])
                * _upsilon(q["eta"], c[0], c[1]),
            },
        )
    )
    # twisted (space-like) family on the same chart

    def _tw01(q, c):
        eta, xi = q["eta"], q["xi"]
        if eta == 0.0:
            return 0.0
        cos0 = math.cos(eta * c[0])
        sin0 = math.sin(eta * c[0])
        sinh1 = math.sinh(eta * c[1])
        return (
            0.5
            * xi
            * _tanh_ratio(eta, c[2])
            / math.cosh(eta * c[1])
            * (cos0 * cos0 * sinh1 * sinh1 - sin0 * sin0)
        )

    def _tw02(q, c):
        eta, xi = q["eta"], q["xi"]
        cos0 = math.cos(eta * c[0])
        return -0.5 * _sin_ratio(eta, c[0]) * math.cosh(eta * c[1]) + (
            _sinh_ratio(eta, c[1]) / 2.0
        ) * (
            math.sin(eta * c[0]) * math.tanh(eta * c[1]) - xi * cos0 * cos0
        )

    def _tw12(q, c):
        eta, xi = q["eta"], q["xi"]
        cos0 = math.cos(eta * c[0])
        return -0.5 * _sinh_ratio(eta, c[1]) * cos0 - 0.5 * xi * _sin_ratio(
            eta, c[0]
        ) * cos0 * math.cosh(eta * c[1])

    register_bracket(
        BracketFn(
            "ads3-twisted",
            ADS3,
            ("eta", "xi"),
            {("x0", "x1"): _tw01, ("x0", "x2"): _tw02, ("x1", "x2"): _tw12},
        )
    )


_install_builtin_brackets()


# --- derived numerics: linearization, Jacobi, flat limits --------------------


def _pair_value(bracket_id, a, b, coords, params):
    fn = bracket_fn(bracket_id)
    names = CHART_COORDS[fn.chart_id]
    return closed_form(
        bracket_id, (names[a], names[b]), ChartPoint(fn.chart_id, coords), params
    )


def linearize(bracket_id: str, params: Mapping, step: float = 1e-5) -> np.ndarray:
    """lin[a][b][c] = d{x_a, x_b}/dx_c at the origin.

    Central differences with one Richardson extrapolation level."""
    lin = np.zeros((3, 3, 3))
    for a in range(3):
        for b in range(a + 1, 3):
            for c in range(3):

                def d(h):
                    plus = [0.0, 0.0, 0.0]
                    minus = [0.0, 0.0, 0.0]
                    plus[c] = h
                    minus[c] = -h
                    return (
                        _pair_value(bracket_id, a, b, tuple(plus), params)
                        - _pair_value(bracket_id, a, b, tuple(minus), params)
                    ) / (2 * h)

                val = (4 * d(step / 2) - d(step)) / 3
                lin[a][b][c] = val
                lin[b][a][c] = -val
    return lin


def jacobi_numeric(bracket_id: str, params: Mapping, p: ChartPoint,
                   step: float = 1e-5) -> float:
    """|cyclic sum of {{x_a, x_b}, x_c}| with finite-difference outer
    derivatives: {g, x_c} = sum_d {x_d, x_c} dg/dx_d."""
    fn = bracket_fn(bracket_id)
    _require(p, fn.chart_id)
    coords = list(p.coords)

    def partial(a, b, d):
        plus = list(coords)
        minus = list(coords)
        plus[d] += step
        minus[d] -= step
        return (
            _pair_value(bracket_id, a, b, tuple(plus), params)
            - _pair_value(bracket_id, a, b, tuple(minus), params)
        ) / (2 * step)

    def pv(a, b):
        return _pair_value(bracket_id, a, b, tuple(coords), params)

    total = 0.0
    for (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        total += sum(pv(d, c) * partial(a, b, d) for d in range(3))
    return abs(total)


@dataclass
class FlatLimitReport:
    bracket_id: str
    pair: tuple
    point: tuple
    eta_values: tuple
    bracket_values: tuple
    extrapolated: float
    target: float

    @property
    def abs_err(self) -> float:
        return abs(self.extrapolated - self.target)


# flat-limit targets: value of the bracket at eta -> 0
_FLAT_TARGETS: dict[str, Callable] = {
    "ads3-double1": {
        ("x0", "x1"): lambda q, c: -c[2],
        ("x0", "x2"): lambda q, c: c[1],
        ("x1", "x2"): lambda q, c: c[0],
    },
    "ads3-twisted": {
        ("x0", "x1"): lambda q, c: 0.0,
        ("x0", "x2"): lambda q, c: -0.5 * (c[0] + q["xi"] * c[1]),
        ("x1", "x2"): lambda q, c: -0.5 * (q["xi"] * c[0] + c[1]),
    },
}


def flat_limit_target(bracket_id: str, pair, p: ChartPoint, params) -> float:
    fn = bracket_fn(bracket_id)
    names = CHART_COORDS[fn.chart_id]
    ci, cj = coord_index(fn.chart_id, pair[0]), coord_index(fn.chart_id, pair[1])
    table = _FLAT_TARGETS.get(bracket_id)
    if table is None:
        raise UnknownBracket(f"no flat-limit target for {bracket_id!r}")
    key = (names[ci], names[cj])
    if key in table:
        return table[key](params, p.coords)
    return -table[(key[1], key[0])](params, p.coords)


def flat_limit_check(
    bracket_id: str,
    pair,
    p: ChartPoint,
    eta_sequence: Sequence[float] | None = None,
    params: Mapping | None = None,
) -> FlatLimitReport:
    """Evaluate the bracket along a deformation-parameter sequence tending
    to zero and Richardson-extrapolate.

    The ladder eliminates successive integer powers of eta (the brackets
    are generally not even in eta), assuming the sequence halves."""
    if eta_sequence is None:
        eta_sequence = tuple(0.1 / 2**k for k in range(8))
    params = dict(params or {})
    values = []
    for eta in eta_sequence:
        q = dict(params)
        q["eta"] = eta
        values.append(closed_form(bracket_id, pair, p, q))
    table = [list(values)]
    k = len(values)
    for level in range(1, k):
        prev = table[-1]
        factor = 2.0**level
        table.append(
            [
                (factor * prev[i + 1] - prev[i]) / (factor - 1.0)
                for i in range(len(prev) - 1)
            ]
        )
    extrapolated = table[-1][0]
    q0 = dict(params)
    q0["eta"] = 0.0
    target = flat_limit_target(bracket_id, pair, p, q0)
    return FlatLimitReport(
        bracket_id=bracket_id,
        pair=tuple(pair),
        point=p.coords,
        eta_values=tuple(eta_sequence),
        bracket_values=tuple(values),
        extrapolated=extrapolated,
        target=target,
    )


# --- verification harness ----------------------------------------------------


@dataclass
class SklyaninCell:
    """One (closed-form family, chart, r-matrix) verification cell."""

    bracket_id: str
    chart_id: str
    r: RMatrix
    param_ranges: Mapping  # name -> (lo, hi)


def _sample_point(rng, chart_id) -> ChartPoint:
    return ChartPoint(chart_id, tuple(rng.uniform(-1.0, 1.0) for _ in range(3)))


def verify_sklyanin_cell(
    cell: SklyaninCell,
    rng,
    n_points: int,
    tol_rel: float,
    tol_abs: float,
) -> list:
    """Compare Sklyanin numerics against the closed forms on random points.

    Returns one result dict per coordinate pair."""
    params = {
        name: rng.uniform(lo, hi) for name, (lo, hi) in cell.param_ranges.items()
    }
    names = CHART_COORDS[cell.chart_id]
    results = []
    for a in range(3):
        for b in range(a + 1, 3):
            max_abs = 0.0
            max_rel = 0.0
            ok = True
            for _ in range(n_points):
                p = _sample_point(rng, cell.chart_id)
                sk = sklyanin_numeric(cell.chart_id, cell.r, params, a, b, p)
                cf = closed_form(cell.bracket_id, (names[a], names[b]), p, params)
                err = abs(sk - cf)
                rel = err / max(abs(cf), 1e-300)
                max_abs = max(max_abs, err)
                max_rel = max(max_rel, rel)
                if err > tol_abs + tol_rel * abs(cf):
                    ok = False
            results.append(
                {
                    "bracket_id": cell.bracket_id,
                    "chart": cell.chart_id,
                    "pair": [names[a], names[b]],
                    "n_points": n_points,
                    "params": {k: params[k] for k in sorted(params)},
                    "max_abs_err": max_abs,
                    "max_rel_err": max_rel,
                    "pass": ok,
                }
            )
    return results
