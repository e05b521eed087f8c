"""Rational monomial curves and their intrinsic invariants.

A curve here is the image of t -> (1 : t^a1 : ... : t^an) with strictly
increasing positive exponents of overall gcd 1.  Such a curve is rational
and has at most two points of interest: the one at t = 0 and the one at
t = infinity, each described by a numerical semigroup of local values.
Everything downstream (canonical sections, sheaf degrees, gonality pencils,
symmetry-defect flags) is computed exactly from those two semigroups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    GcdNotOne,
    GenusZero,
    NotIncreasing,
    NotUnibranchSingle,
    PathsDisagree,
    ZeroExponent,
)
from .semigroups import (
    NumericalSemigroup,
    ValueSet,
    eta_local,
    kappa_sets,
    make_semigroup,
    mu_local,
)


class MonomialCurve:
    """A monomial curve, lazily exposing its two branch semigroups.

    s_zero is generated by the exponents themselves (values of functions at
    t = 0), s_infinity by the drops from the top exponent (values at
    t = infinity, where 1/t is the local parameter).
    """

    __slots__ = ("exponents", "_s_zero", "_s_infinity")

    def __init__(self, exponents: tuple[int, ...]):
        self.exponents = exponents
        self._s_zero = None
        self._s_infinity = None

    @property
    def s_zero(self) -> NumericalSemigroup:
        if self._s_zero is None:
            self._s_zero = make_semigroup(self.exponents)
        return self._s_zero

    @property
    def s_infinity(self) -> NumericalSemigroup:
        if self._s_infinity is None:
            top = self.exponents[-1]
            drops = [top - a for a in self.exponents[:-1]] + [top]
            self._s_infinity = make_semigroup(drops)
        return self._s_infinity

    @property
    def delta_zero(self) -> int:
        return self.s_zero.delta

    @property
    def delta_infinity(self) -> int:
        return self.s_infinity.delta

    @property
    def genus(self) -> int:
        """Arithmetic genus: the two local gap counts add up."""
        return self.delta_zero + self.delta_infinity

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialCurve):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"MonomialCurve{self.exponents}"

    def __str__(self) -> str:
        inside = ":".join(f"t^{a}" for a in self.exponents)
        return f"(1:{inside})"

    def to_dict(self) -> dict:
        return {"exponents": list(self.exponents)}


def make_curve(exponents) -> MonomialCurve:
    """Validate exponents and build the curve.

    >>> make_curve((4, 5, 7, 8)).genus
    4
    """
    exps = tuple(int(a) for a in exponents)
    if not exps or exps[0] <= 0 or any(b <= a for a, b in zip(exps, exps[1:])):
        raise NotIncreasing(
            f"exponents must be strictly increasing positive integers, got {exps}"
        )
    if math.gcd(*exps) != 1:
        raise GcdNotOne(f"exponents {exps} have gcd {math.gcd(*exps)}")
    return MonomialCurve(exps)


def representative_curve(s: NumericalSemigroup) -> MonomialCurve:
    """A monomial curve whose branch at t = 0 realizes the given semigroup
    and whose other point is smooth.

    Smoothness at infinity needs the top two exponents consecutive (the
    drops then generate everything).  Starting from the minimal generators,
    either the predecessor of the top generator already lies in the
    semigroup and is inserted, or successive semigroup elements above the
    top are appended until two consecutive ones appear.
    """
    if s.delta == 0:
        return make_curve((1, 2))
    exps = list(s.minimal_generators)
    if len(exps) == 1:
        # single minimal generator with gcd 1 means the whole semigroup,
        # which the delta == 0 branch already handled
        raise GcdNotOne(f"unexpected single minimal generator {exps}")
    top = exps[-1]
    if exps[-2] == top - 1:
        return make_curve(tuple(exps))
    if (top - 1) in s:
        return make_curve(tuple(sorted(exps + [top - 1])))
    x = top
    while True:
        x += 1
        if x in s:
            exps.append(x)
            if exps[-2] == x - 1:
                return make_curve(tuple(exps))


def canonical_section_exponents(curve: MonomialCurve) -> tuple[int, ...]:
    """Exponents c such that t^c dt is regular at both points, raw form.

    The form t^c dt has a pole-free expansion at t = 0 unless -c-1 is a
    local value there, and at infinity (parameter u = 1/t, where it reads
    -u^(-c-2) du up to sign) unless c+1 is a local value.  The count always
    equals the genus.
    """
    s0, si = curve.s_zero, curve.s_infinity
    raw = tuple(
        c
        for c in range(-s0.beta, si.beta - 1)
        if (-c - 1) not in s0 and (c + 1) not in si
    )
    assert len(raw) == curve.genus
    return raw


def normalize_values(values) -> tuple[int, ...]:
    """Sorted distinct values translated so the smallest is 0."""
    vals = sorted(set(values))
    if not vals:
        return ()
    lowest = vals[0]
    return tuple(v - lowest for v in vals)


def equal_up_to_reversal(a, b) -> bool:
    """Equality of normalized value sets, allowing the flip x -> max - x."""
    left = normalize_values(a)
    right = normalize_values(b)
    if left == right:
        return True
    if not left:
        return False
    top = left[-1]
    return tuple(sorted(top - x for x in left)) == right


def canonical_exponents(curve: MonomialCurve) -> tuple[int, ...]:
    """Normalized canonical exponents (smallest shifted to 0).

    For a curve with a smooth point at infinity this is exactly the finite
    dual part of the semigroup at the other point.
    """
    if curve.genus == 0:
        raise GenusZero(f"{curve} has genus 0, no canonical sections")
    return normalize_values(canonical_section_exponents(curve))


@dataclass(frozen=True)
class SheafData:
    """Degree and number of global sections of a monomial sheaf."""

    degree: int
    h0: int


def sheaf_degree_h0(curve: MonomialCurve, generator_exponents) -> SheafData:
    """Invariants of the subsheaf of the function field spanned by the
    monomials t^b over the coordinate ring.

    The local stalk at each point is a union of shifted semigroups; degree
    contributions are counted with sign (stalk gains minus stalk losses
    against the semigroup itself), so negative shifts are handled uniformly.
    """
    gens = sorted(set(int(b) for b in generator_exponents))
    if not gens:
        raise ValueError("at least one generator exponent is required")
    vs0 = curve.s_zero.value_set()
    vsi = curve.s_infinity.value_set()
    stalk0 = vs0.shift(gens[0])
    stalki = vsi.shift(-gens[0])
    for b in gens[1:]:
        stalk0 = stalk0.union(vs0.shift(b))
        stalki = stalki.union(vsi.shift(-b))
    degree = (
        stalk0.count_difference(vs0)
        - vs0.count_difference(stalk0)
        + stalki.count_difference(vsi)
        - vsi.count_difference(stalki)
    )
    h0 = sum(
        1
        for c in stalk0.elements_up_to(-stalki.min_element)
        if (-c) in stalki
    )
    return SheafData(degree, h0)


def verify_dualizing_candidate(curve: MonomialCurve, generator_exponents) -> bool:
    """Whether the monomial sheaf has degree 2g-2 and exactly g sections."""
    data = sheaf_degree_h0(curve, generator_exponents)
    g = curve.genus
    return data == SheafData(2 * g - 2, g)


def pencil_degree(curve: MonomialCurve, n: int) -> int:
    """Degree of the sheaf spanned by 1 and t^n."""
    if n == 0:
        raise ZeroExponent("a pencil needs a nonzero exponent")
    return sheaf_degree_h0(curve, (0, n)).degree


def gonality_pencil(curve: MonomialCurve) -> tuple[int, int]:
    """Smallest pencil degree and the exponent achieving it.

    The search window is wide enough that any exponent beyond it shifts
    entirely past both conductors and can only do worse; ties go to the
    exponent of smallest absolute value, positive first.
    """
    window = 2 * (curve.s_zero.beta + curve.s_infinity.beta + 1)
    best: tuple[int, int] | None = None
    for size in range(1, window + 1):
        for n in (size, -size):
            d = pencil_degree(curve, n)
            if best is None or d < best[0]:
                best = (d, n)
    return best


def gonality(curve: MonomialCurve) -> int:
    return gonality_pencil(curve)[0]


def _canonical_fold(canonical: tuple[int, ...]) -> int:
    """gcd of the normalized canonical exponents (0 contributes nothing)."""
    return math.gcd(*canonical) if canonical else 0


@dataclass(frozen=True)
class CurveAnalysis:
    """Everything the catalog records about one curve."""

    exponents: tuple[int, ...]
    genus: int
    g_prime: int
    eta: int
    mu: int
    gonality: int
    canonical: tuple[int, ...]
    flags: dict
    eta_branches: tuple[int, int]
    mu_branches: tuple[int, int]
    hyperelliptic: bool

    @property
    def label(self) -> str:
        f = self.flags
        if f["gorenstein"]:
            return "Gor"
        if f["nearly_normal"]:
            return "NN"
        if f["kunz"]:
            return "K"
        if f["nearly_gorenstein"]:
            return "NG"
        return "--"

    def to_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "genus": self.genus,
            "g_prime": self.g_prime,
            "eta": self.eta,
            "mu": self.mu,
            "gonality": self.gonality,
            "canonical": list(self.canonical),
            "flags": dict(self.flags),
            "label": self.label,
            "hyperelliptic": self.hyperelliptic,
        }


def analyze(curve: MonomialCurve) -> CurveAnalysis:
    """Compute the full invariant record of a curve.

    The genus identity g = g' + eta + mu is asserted whenever the canonical
    morphism is birational (fold 1) and the genus is at least 2; a failure
    would mean two independent computation paths disagree.
    """
    g = curve.genus
    branches = (curve.s_zero, curve.s_infinity)
    eta_b = tuple(eta_local(s) for s in branches)
    mu_b = tuple(mu_local(s).mu for s in branches)
    eta, mu = sum(eta_b), sum(mu_b)
    if g == 0:
        canonical: tuple[int, ...] = ()
        g_prime = 0
        fold = 0
    else:
        canonical = canonical_exponents(curve)
        fold = _canonical_fold(canonical)
        if g == 1:
            g_prime = 0
        else:
            divided = tuple(c // fold for c in canonical if c)
            g_prime = make_curve(divided).genus
            if fold == 1 and g != g_prime + eta + mu:
                raise PathsDisagree(
                    f"genus split failed for {curve}: "
                    f"g={g}, g'={g_prime}, eta={eta}, mu={mu}"
                )
    flags = {
        "gorenstein": eta == 0,
        "kunz": all(e == 1 for e in eta_b if e > 0),
        "almost_gorenstein": all(m == 1 for m in mu_b if m > 0),
        "nearly_gorenstein": mu == 1,
        "nearly_normal": sum(s.beta - s.delta for s in branches) == 1,
    }
    return CurveAnalysis(
        exponents=curve.exponents,
        genus=g,
        g_prime=g_prime,
        eta=eta,
        mu=mu,
        gonality=gonality(curve),
        canonical=canonical,
        flags=flags,
        eta_branches=eta_b,
        mu_branches=mu_b,
        hyperelliptic=(g >= 2 and fold == 2),
    )


def _singular_branch_dual(curve: MonomialCurve) -> tuple[int, ...]:
    if curve.genus == 0:
        raise GenusZero(f"{curve} has genus 0")
    d0, di = curve.delta_zero, curve.delta_infinity
    if d0 > 0 and di > 0:
        raise NotUnibranchSingle(
            f"{curve} is singular at both points; no preferred orientation"
        )
    s = curve.s_zero if d0 > 0 else curve.s_infinity
    return kappa_sets(s).k_star


def isomorphic_via_canonical(a: MonomialCurve, b: MonomialCurve) -> bool:
    """Whether two curves, each singular at a single point, have the same
    canonical model up to the ambient parameter flip."""
    return equal_up_to_reversal(_singular_branch_dual(a), _singular_branch_dual(b))
