"""Intersection theory on smooth rational normal scrolls.

The Chow ring of a smooth d-dimensional scroll of degree e is generated by
the hyperplane class H and the fiber class F subject to F^2 = 0,
H^(d+1) = 0, H^d F = 0 and H^d = e H^(d-1) F.  Elements are kept in normal
form as dictionaries mapping (i, j) to rational coefficients of H^i F^j.
On top of the ring sit the closed-form Euler characteristics for surfaces
and threefolds, rank-2 bundle computations, arithmetic-genus formulas, and
two report generators that check a curve record against the structural
statements satisfied by curves whose canonical models land on scrolls.
Every quantity with more than one natural derivation is computed along all
of them and compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, ceil

from .errors import (
    NonIntegralGenus,
    NotTopDimensional,
    PathsDisagree,
    UnsupportedDimension,
)

ChowElement = dict[tuple[int, int], Fraction]


@dataclass(frozen=True)
class Ambient:
    """A rational normal scroll of type (m_1 <= ... <= m_d)."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(sorted(int(m) for m in self.dims)))
        if not self.dims or self.dims[0] < 0:
            raise ValueError(f"invalid scroll type {self.dims}")

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def e(self) -> int:
        return sum(self.dims)

    @property
    def ambient_dimension(self) -> int:
        return self.e + self.d - 1

    @property
    def smooth(self) -> bool:
        return self.dims[0] >= 1

    @classmethod
    def balanced(cls, d: int, e: int) -> "Ambient":
        """The scroll of dimension d and degree e with dims as equal as
        possible."""
        base, extra = divmod(e, d)
        return cls((base,) * (d - extra) + (base + 1,) * extra)


@dataclass(frozen=True)
class DivisorClass:
    """The divisor class h*H + f*F."""

    h: int
    f: int


@dataclass(frozen=True)
class RankTwoBundleClass:
    """Chern data of a rank-2 bundle: c1 = uH + vF, c2 = wH^2 + zHF."""

    u: int
    v: int
    w: int
    z: int

    @classmethod
    def from_curve_data(cls, u: int, v: int, ell: int, degree: int, n: int) -> "RankTwoBundleClass":
        """Chern data whose second class is a curve of the given degree
        meeting a fiber ell times, inside a scroll spanning P^n."""
        return cls(u, v, ell, degree - ell * (n - 2))


def _require_smooth(amb: Ambient) -> None:
    if not amb.smooth:
        raise ValueError(f"Chow operations need a smooth scroll, got {amb.dims}")


def chow_element(amb: Ambient, coefficients) -> ChowElement:
    """Normal form of a coefficient dictionary {(i, j): c} for H^i F^j."""
    _require_smooth(amb)
    out: ChowElement = {}
    for (i, j), c in coefficients.items():
        c = Fraction(c)
        if c == 0 or j >= 2 or i > amb.d:
            continue
        if i == amb.d:
            if j == 1:
                continue
            i, j, c = amb.d - 1, 1, c * amb.e
        key = (i, j)
        out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def hyperplane(amb: Ambient) -> ChowElement:
    return chow_element(amb, {(1, 0): 1})


def fiber(amb: Ambient) -> ChowElement:
    return chow_element(amb, {(0, 1): 1})


def divisor_element(amb: Ambient, c: DivisorClass) -> ChowElement:
    return chow_element(amb, {(1, 0): c.h, (0, 1): c.f})


def chow_mul(amb: Ambient, x: ChowElement, y: ChowElement) -> ChowElement:
    raw: dict[tuple[int, int], Fraction] = {}
    for (i1, j1), c1 in x.items():
        for (i2, j2), c2 in y.items():
            key = (i1 + i2, j1 + j2)
            raw[key] = raw.get(key, Fraction(0)) + c1 * c2
    return chow_element(amb, raw)


def chow_degree(amb: Ambient, x: ChowElement) -> Fraction:
    """Coefficient of the top class H^(d-1) F; anything else present means
    the element is not top-dimensional."""
    top = (amb.d - 1, 1)
    for key, c in x.items():
        if key != top and c != 0:
            raise NotTopDimensional(f"class has a component on H^{key[0]} F^{key[1]}")
    return x.get(top, Fraction(0))


def chow_mul_degree(amb: Ambient, x: ChowElement, y: ChowElement):
    """Product in normal form, plus its degree when top-dimensional."""
    product = chow_mul(amb, x, y)
    try:
        degree = chow_degree(amb, product)
    except NotTopDimensional:
        return product, None
    return product, int(degree) if degree.denominator == 1 else degree


def h0_class(amb: Ambient, c: DivisorClass) -> tuple[int, bool]:
    """Global sections of O(hH + fF), with a flag for vanishing of all
    higher cohomology.

    The bundle pushes down to a sum of line bundles on the base line, one
    per degree-h monomial in the scroll type, so the count is the clipped
    sum of their section counts.  For h >= 0 and f >= -h*m_1 - 1 this
    agrees with the closed form
    (f + 1) C(h + d - 1, d - 1) + e C(h + d - 1, d).
    """
    _require_smooth(amb)
    a, b = c.h, c.f
    m1 = amb.dims[0]
    vanishing = a >= 0 and b >= -(a * m1 + 1)
    if a < 0:
        return 0, vanishing
    value = sum(
        max(0, b + sum(combo) + 1)
        for combo in combinations_with_replacement(amb.dims, a)
    )
    if b >= -a * m1 - 1:
        d, e = amb.d, amb.e
        closed = (b + 1) * comb(a + d - 1, d - 1) + e * comb(a + d - 1, d)
        if closed != value:
            raise PathsDisagree(f"section count {value} vs closed form {closed}")
    return value, vanishing


def canonical_class(amb: Ambient) -> DivisorClass:
    _require_smooth(amb)
    return DivisorClass(-amb.d, amb.e - 2)


def _chern_classes(amb: Ambient) -> tuple[ChowElement, ChowElement]:
    """c1 and c2 of the tangent bundle, for d in {2, 3}."""
    e = amb.e
    if amb.d == 2:
        return (
            chow_element(amb, {(1, 0): 2, (0, 1): 2 - e}),
            chow_element(amb, {(1, 1): 4}),
        )
    if amb.d == 3:
        return (
            chow_element(amb, {(1, 0): 3, (0, 1): 2 - e}),
            chow_element(amb, {(2, 0): 3, (1, 1): 6 - 2 * e}),
        )
    raise UnsupportedDimension(f"tangent Chern classes coded for d=2,3 only, got d={amb.d}")


def _chi_closed_form(amb: Ambient, c: DivisorClass) -> Fraction:
    h, f, e = Fraction(c.h), Fraction(c.f), amb.e
    if amb.d == 2:
        return 1 + h + f + h * f + Fraction(e, 2) * h * (h + 1)
    if amb.d == 3:
        return (
            1
            + Fraction(2 * e + 9, 6) * h
            + f
            + Fraction(e + 1, 2) * h ** 2
            + Fraction(3, 2) * h * f
            + Fraction(e, 6) * h ** 3
            + Fraction(1, 2) * h ** 2 * f
        )
    raise UnsupportedDimension(f"closed-form chi needs d in {{2, 3}}, got d={amb.d}")


def euler_characteristic_chow(amb: Ambient, c: DivisorClass) -> Fraction:
    """Euler characteristic evaluated through the Chow ring (the
    Riemann-Roch expansion), as an independent route to the closed form."""
    _require_smooth(amb)
    c1, c2 = _chern_classes(amb)
    dd = divisor_element(amb, c)
    if amb.d == 2:
        shifted = chow_element(
            amb, {(1, 0): c.h + 2, (0, 1): c.f + 2 - amb.e}
        )
        main = chow_degree(amb, chow_mul(amb, dd, shifted)) / 2
        todd = (chow_degree(amb, chow_mul(amb, c1, c1)) + chow_degree(amb, c2)) / 12
        return main + todd
    d2 = chow_mul(amb, dd, dd)
    d3 = chow_mul(amb, d2, dd)
    c1sq_plus_c2 = _add(chow_mul(amb, c1, c1), c2)
    return (
        chow_degree(amb, d3) / 6
        + chow_degree(amb, chow_mul(amb, d2, c1)) / 4
        + chow_degree(amb, chow_mul(amb, dd, c1sq_plus_c2)) / 12
        + chow_degree(amb, chow_mul(amb, c1, c2)) / 24
    )


def _add(x: ChowElement, y: ChowElement) -> ChowElement:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v != 0}


def _scale(x: ChowElement, s) -> ChowElement:
    s = Fraction(s)
    return {k: v * s for k, v in x.items() if v * s != 0}


def euler_characteristic(amb: Ambient, c: DivisorClass) -> int:
    """chi(O(hH + fF)) by the closed form, verified against the Chow-ring
    route; the two must agree and the result must be an integer."""
    _require_smooth(amb)
    closed = _chi_closed_form(amb, c)
    ring = euler_characteristic_chow(amb, c)
    if closed != ring:
        raise PathsDisagree(
            f"chi closed form {closed} vs ring evaluation {ring} on {amb.dims}, class {c}"
        )
    if closed.denominator != 1:
        raise NonIntegralGenus(f"chi({c}) = {closed} is not an integer")
    return int(closed)


def _bundle_chi_dual_fraction(amb: Ambient, b: RankTwoBundleClass) -> Fraction:
    if amb.d != 3:
        raise UnsupportedDimension("rank-2 bundle chi is coded for threefolds only")
    _require_smooth(amb)
    u, v, w, z = (Fraction(t) for t in (b.u, b.v, b.w, b.z))
    e = amb.e
    closed = (
        2
        - Fraction(2 * e + 9, 6) * u
        - v
        - (e + 1) * w
        - Fraction(3, 2) * z
        + Fraction(e + 1, 2) * u ** 2
        + Fraction(3, 2) * u * v
        + Fraction(e, 2) * u * w
        + Fraction(1, 2) * u * z
        + Fraction(1, 2) * v * w
        - Fraction(e, 6) * u ** 3
        - Fraction(1, 2) * u ** 2 * v
    )
    # independent route: ch(dual E) * Todd, degree-3 piece
    c1 = chow_element(amb, {(1, 0): b.u, (0, 1): b.v})
    c2 = chow_element(amb, {(2, 0): b.w, (1, 1): b.z})
    c1sq = chow_mul(amb, c1, c1)
    ch2 = _scale(_add(c1sq, _scale(c2, -2)), Fraction(1, 2))
    ch3 = _scale(
        _add(chow_mul(amb, c1sq, c1), _scale(chow_mul(amb, c1, c2), -3)),
        Fraction(-1, 6),
    )
    t1, t2 = _chern_classes(amb)
    td1 = _scale(t1, Fraction(1, 2))
    td2 = _scale(_add(chow_mul(amb, t1, t1), t2), Fraction(1, 12))
    td3 = _scale(chow_mul(amb, t1, t2), Fraction(1, 24))
    total = _add(
        _add(_scale(td3, 2), chow_mul(amb, _scale(c1, -1), td2)),
        _add(chow_mul(amb, ch2, td1), ch3),
    )
    top = total.get((2, 1), Fraction(0))
    if closed != top:
        raise PathsDisagree(
            f"bundle chi closed form {closed} vs ring evaluation {top}"
        )
    return closed


def bundle_chi_dual(amb: Ambient, b: RankTwoBundleClass) -> int:
    """chi of the dual of a rank-2 bundle on a threefold scroll."""
    value = _bundle_chi_dual_fraction(amb, b)
    if value.denominator != 1:
        raise NonIntegralGenus(f"chi of the dual bundle is {value}, not an integer")
    return int(value)


def pa_from_bundle(amb: Ambient, b: RankTwoBundleClass) -> int:
    """Arithmetic genus of the curve cut out by a rank-2 bundle on a
    threefold scroll, computed along four algebraically independent paths
    that must agree exactly:

    the expanded closed form; the structure-sheaf resolution (chi of the
    dual bundle minus chi of the dual determinant); the Chow product
    c2(E).(K + c1(E)); and the linear form in the fiber degree.
    """
    if amb.d != 3:
        raise UnsupportedDimension("the genus formula is coded for threefolds only")
    _require_smooth(amb)
    u, v, w, z = b.u, b.v, b.w, b.z
    e, n = amb.e, amb.ambient_dimension
    path_a = 1 + Fraction((e * (u - 2) + v - 2) * w + (u - 3) * z, 2)
    path_b = _bundle_chi_dual_fraction(amb, b) - _chi_closed_form(
        amb, DivisorClass(-u, -v)
    )
    c2e = chow_element(amb, {(2, 0): w, (1, 1): z})
    adjoint = chow_element(amb, {(1, 0): u - 3, (0, 1): v + e - 2})
    path_c = 1 + chow_degree(amb, chow_mul(amb, c2e, adjoint)) / 2
    path_d = 1 + Fraction((u - 3) * (w * e + z) + w * (v + n - 4), 2)
    if not (path_a == path_b == path_c == path_d):
        raise PathsDisagree(
            f"genus paths disagree: {path_a}, {path_b}, {path_c}, {path_d}"
        )
    if path_a.denominator != 1:
        raise NonIntegralGenus(
            f"bundle data {b} yields genus {path_a}; no such curve exists"
        )
    return int(path_a)


def genus_on_surface(degree: int, n: int, ell: int | None = None, mode: str = "smooth") -> int:
    """Arithmetic genus of a degree-`degree` curve on a surface scroll
    spanning P^n, meeting a fiber ell times (smooth mode), or on the cone
    over a rational normal curve (cone mode, ell ignored)."""
    if mode == "cone":
        return genus_on_cone(degree, n)
    if mode != "smooth":
        raise ValueError(f"mode must be smooth or cone, got {mode!r}")
    if degree < 1 or n < 3 or ell is None or ell < 1:
        raise ValueError("smooth mode needs degree >= 1, n >= 3, ell >= 1")
    twice = (2 * ell - 2) * degree - (n - 1) * ell ** 2 + (n - 3) * ell
    if twice % 2 != 0:
        raise NonIntegralGenus(
            f"degree {degree}, span {n}, fiber count {ell} give genus {Fraction(twice + 2, 2)}"
        )
    pa = (twice + 2) // 2
    cross = euler_characteristic(
        Ambient.balanced(2, n - 1), DivisorClass(-ell, -(degree - ell * (n - 1)))
    )
    if pa != cross:
        raise PathsDisagree(f"genus formula {pa} vs chi route {cross}")
    if pa < 0:
        raise NonIntegralGenus(f"inputs give negative genus {pa}")
    return pa


def genus_on_cone(degree: int, n: int) -> int:
    """Arithmetic genus of a degree-`degree` curve on the cone over a
    rational normal curve spanning P^n."""
    if degree < 1 or n < 3:
        raise ValueError("cone mode needs degree >= 1, n >= 3")
    q = ceil(Fraction(degree, n - 1))
    twice_term = q * (q - 1) * (n - 1)
    if twice_term % 2 != 0:
        raise NonIntegralGenus(f"cone formula gives a non-integer for ({degree}, {n})")
    pa = (q - 1) * (degree - 1) - twice_term // 2
    if pa < 0:
        raise NonIntegralGenus(f"inputs give negative genus {pa}")
    return pa


@dataclass(frozen=True)
class Finding:
    """One checked statement: item name, pass/fail/n-a status, and a short
    human-readable detail line."""

    item: str
    status: str
    detail: str


def _finding(item: str, ok: bool | None, detail: str) -> Finding:
    if ok is None:
        return Finding(item, "n/a", detail)
    return Finding(item, "pass" if ok else "fail", detail)


def surface_scroll_report(
    g: int,
    g_prime: int,
    eta: int,
    mu: int,
    gon: int,
    gon_cprime: int,
    structures,
    kunz: bool | None = None,
    almost_gorenstein: bool | None = None,
    single_nongorenstein_point: bool | None = None,
) -> list[Finding]:
    """Check a non-Gorenstein curve record against the structural
    constraints that hold when its canonical model lies on a surface
    scroll.

    `structures` lists the available scroll structures as (m, ell) pairs,
    m being the smaller scroll dimension (m = 0 means a cone) and ell the
    fiber degree of the canonical model.  A Gorenstein record (eta == 0),
    a record of genus below 4, or an empty structure list yields
    not-applicable findings throughout, never an error.
    """
    structures = [(int(m), int(ell)) for m, ell in structures]
    findings: list[Finding] = []
    if eta == 0 or g < 4 or not structures:
        reason = (
            "curve is Gorenstein"
            if eta == 0
            else ("genus below four" if g < 4 else "no surface structure")
        )
        items = (
            "fiber-degree-bound",
            "line-image-rational",
            "conic-nearly-gorenstein",
            "cubic-kunz-almost-gorenstein",
            "cubic-dimension-bound",
            "vertex-gonality",
            "gonality-descent",
            "directrix-gonality",
            "image-genus-identity",
            "fiber-degree-ceiling",
        )
        return [Finding(item, "n/a", reason) for item in items]

    smooth = [(m, ell) for m, ell in structures if m > 0]
    cones = [(m, ell) for m, ell in structures if m == 0]

    ok = all(ell <= 3 for _, ell in smooth) and all(ell <= 2 for _, ell in cones)
    findings.append(
        _finding(
            "fiber-degree-bound",
            ok,
            "ell <= 3 on smooth scrolls and ell <= 2 on cones",
        )
    )

    lines = [s for s in smooth if s[1] == 1]
    if lines:
        findings.append(
            _finding(
                "line-image-rational",
                g_prime == 0,
                f"ell = 1 on a smooth scroll forces a rational image, g' = {g_prime}",
            )
        )
    else:
        findings.append(Finding("line-image-rational", "n/a", "no smooth structure with ell = 1"))

    conic_smooth = [s for s in smooth if s[1] == 2]
    conic_cone = [s for s in cones if s[1] == 2]
    if conic_smooth or conic_cone:
        ok = True
        parts = []
        if conic_smooth:
            ok = ok and mu == 1
            parts.append(f"smooth: mu = {mu}")
        if conic_cone:
            ok = ok and mu == 1 and g - g_prime <= 3
            parts.append(f"cone: mu = {mu}, g - g' = {g - g_prime}")
        findings.append(
            _finding("conic-nearly-gorenstein", ok, "; ".join(parts))
        )
    else:
        findings.append(Finding("conic-nearly-gorenstein", "n/a", "no structure with ell = 2"))

    cubics = [s for s in smooth if s[1] == 3]
    if cubics:
        if kunz is None or almost_gorenstein is None:
            findings.append(
                Finding(
                    "cubic-kunz-almost-gorenstein",
                    "n/a",
                    "needs the Kunz and almost-Gorenstein flags",
                )
            )
        else:
            findings.append(
                _finding(
                    "cubic-kunz-almost-gorenstein",
                    kunz == almost_gorenstein,
                    f"kunz = {kunz}, almost Gorenstein = {almost_gorenstein}",
                )
            )
        ok = all(3 * m >= g - 3 for m, _ in cubics)
        if ok and kunz is not None and single_nongorenstein_point is not None:
            attained = any(3 * m == g - 3 for m, _ in cubics)
            ok = attained == (kunz and single_nongorenstein_point)
            detail = (
                f"3m >= g - 3 with equality iff Kunz at a single point; "
                f"equality {attained}, flags {kunz and single_nongorenstein_point}"
            )
        else:
            detail = "3m >= g - 3"
        findings.append(_finding("cubic-dimension-bound", ok, detail))
    else:
        findings.append(Finding("cubic-kunz-almost-gorenstein", "n/a", "no structure with ell = 3"))
        findings.append(Finding("cubic-dimension-bound", "n/a", "no structure with ell = 3"))

    vertex = [s for s in cones if g - g_prime == 3]
    if vertex:
        findings.append(
            _finding(
                "vertex-gonality",
                gon <= 5,
                f"cone structure with g - g' = 3 bounds the gonality by 5, got {gon}",
            )
        )
    else:
        findings.append(Finding("vertex-gonality", "n/a", "no cone structure with g - g' = 3"))

    findings.append(
        _finding(
            "gonality-descent",
            gon <= gon_cprime + g - g_prime,
            f"gon(C) = {gon} <= gon(C') + g - g' = {gon_cprime + g - g_prime}",
        )
    )

    if smooth:
        ok = all(gon_cprime <= ell for _, ell in smooth)
        findings.append(
            _finding(
                "directrix-gonality",
                ok,
                f"gon(C') = {gon_cprime} is at most the fiber degree of every smooth structure",
            )
        )
        ok = True
        for _, ell in smooth:
            expected = (ell - 1) * ((1 - Fraction(g, 2)) * ell + 2 * g - eta - 3)
            ok = ok and expected == g_prime
        findings.append(
            _finding(
                "image-genus-identity",
                ok,
                "g' = (ell - 1)((1 - g/2) ell + 2g - eta - 3) for each smooth structure",
            )
        )
    else:
        findings.append(Finding("directrix-gonality", "n/a", "no smooth structure"))
        findings.append(Finding("image-genus-identity", "n/a", "no smooth structure"))

    if cones:
        ok = all(
            Fraction(ell) <= 1 + Fraction(g - eta, g - 2) for _, ell in cones
        )
        findings.append(
            _finding(
                "fiber-degree-ceiling",
                ok,
                "ell <= 1 + (g - eta)/(g - 2) on every cone structure",
            )
        )
    else:
        findings.append(Finding("fiber-degree-ceiling", "n/a", "no cone structure"))

    return findings


def threefold_bundle_report(
    g: int,
    eta: int,
    mu: int,
    ell: int,
    u: int,
    v: int,
    g_prime: int | None = None,
    nearly_gorenstein: bool | None = None,
    kunz: bool | None = None,
    single_nongorenstein_point: bool | None = None,
    m_min: int | None = None,
) -> list[Finding]:
    """Check a non-Gorenstein curve record against the numerical
    constraints on the rank-2 bundle resolving its canonical model on a
    threefold scroll, where c1 = uH + vF and the model meets a fiber ell
    times.

    A Gorenstein record or one of genus at most 4 yields not-applicable
    findings throughout.
    """
    findings: list[Finding] = []
    if eta == 0 or g <= 4:
        reason = "curve is Gorenstein" if eta == 0 else "needs genus at least 5"
        return [Finding("chi-residual", "n/a", reason)]

    residual = Fraction(
        (u - 4) * (2 * g - 2 - eta) + eta + 2 * mu + ell * (v + g - 5)
    )
    if residual == 0:
        detail = "(u - 4)(2g - 2 - eta) + eta + 2 mu + ell (v + g - 5) = 0"
    else:
        forced = -(g - 5) - Fraction((u - 4) * (2 * g - 2 - eta) + eta + 2 * mu, ell)
        detail = f"residual {residual}; the chi balance forces v = {forced}"
    findings.append(_finding("chi-residual", residual == 0, detail))

    if ell == 1:
        findings.append(
            _finding(
                "line-image-twist",
                u == 2 and v == mu + 1,
                f"ell = 1 needs u = 2 and v = mu + 1 = {mu + 1}, got u = {u}, v = {v}",
            )
        )
        if g_prime is not None:
            findings.append(
                _finding(
                    "line-image-rational",
                    g_prime == 0,
                    f"ell = 1 forces a rational image, g' = {g_prime}",
                )
            )
        if nearly_gorenstein is not None:
            findings.append(
                _finding(
                    "nearly-gorenstein-twist",
                    nearly_gorenstein == (v == 2),
                    f"nearly Gorenstein iff v = 2; v = {v}",
                )
            )
    elif ell == 2:
        findings.append(
            _finding(
                "conic-image-twist",
                u == 3 and v == 4 - eta - mu,
                f"ell = 2 needs u = 3 and v = 4 - eta - mu = {4 - eta - mu}, got u = {u}, v = {v}",
            )
        )
        if nearly_gorenstein is not None:
            findings.append(
                _finding(
                    "nearly-gorenstein-twist",
                    nearly_gorenstein == (v == 3 - eta),
                    f"nearly Gorenstein iff v = 3 - eta = {3 - eta}; v = {v}",
                )
            )
        if kunz is not None:
            findings.append(
                _finding(
                    "kunz-twist",
                    kunz == (v == 2),
                    f"Kunz iff v = 2; v = {v}",
                )
            )
    elif ell == 3:
        expected = -(g - 5) - Fraction(eta + 2 * mu, 3)
        findings.append(
            _finding(
                "cubic-image-twist",
                u == 4 and expected == v,
                f"ell = 3 needs u = 4 and v = -(g - 5) - (eta + 2 mu)/3 = {expected}, got u = {u}, v = {v}",
            )
        )
        if kunz is not None and single_nongorenstein_point is not None:
            findings.append(
                _finding(
                    "kunz-single-point-twist",
                    (kunz and single_nongorenstein_point) == (v == -(g - 4)),
                    f"Kunz at a single point iff v = -(g - 4) = {-(g - 4)}; v = {v}",
                )
            )
    elif ell == 4:
        low = -(g - 5) - Fraction(eta + 2 * mu, 4)
        high = -(g - 5) - Fraction(g - 1 + mu, 2)
        forms = {4: low, 5: high}
        expected = forms.get(u)
        findings.append(
            _finding(
                "quartic-image-twist",
                expected is not None and expected == v,
                f"ell = 4 needs u in {{4, 5}} with v = {low} (u = 4) or v = {high} (u = 5), got u = {u}, v = {v}",
            )
        )
        if u == 4:
            if kunz is not None and single_nongorenstein_point is not None:
                findings.append(
                    _finding(
                        "quartic-kunz-exclusion",
                        not (kunz and single_nongorenstein_point),
                        "a quartic image with u = 4 cannot be Kunz at a single point",
                    )
                )
            if m_min is not None:
                bound = Fraction(4 * (g - 5) + eta + 2 * mu, 16)
                findings.append(
                    _finding(
                        "quartic-dimension-bound",
                        Fraction(m_min) >= bound,
                        f"m >= (4(g - 5) + eta + 2 mu)/16 = {bound}, got m = {m_min}",
                    )
                )
    else:
        if m_min is None:
            findings.append(
                Finding(
                    "large-fiber-dimension-bound",
                    "n/a",
                    "needs the minimal scroll dimension m",
                )
            )
        else:
            # m >= [ell (g - 5) + (sqrt(2 ell) - 4)(2g - 2 - eta) + eta + 2 mu]
            #      / (ell (ell + 1)), compared exactly by squaring
            deg = 2 * g - 2 - eta
            lhs = m_min * ell * (ell + 1) - ell * (g - 5) + 4 * deg - eta - 2 * mu
            ok = lhs >= 0 and lhs * lhs >= 2 * ell * deg * deg
            findings.append(
                _finding(
                    "large-fiber-dimension-bound",
                    ok,
                    f"m (ell)(ell + 1) clears the square-root bound at ell = {ell}",
                )
            )
    return findings
