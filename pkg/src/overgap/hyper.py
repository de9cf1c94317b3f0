"""Terminating and convergent basic hypergeometric series, evaluated exactly.

A series spec holds monomial parameters (a_1, ..., a_{r+1}; b_1, ..., b_s)
and a monomial argument w; the value is

    sum_{n >= 0} [prod_i (a_i; q)_n / ((q; q)_n prod_j (b_j; q)_n)]
                 * ((-1)^n q^(n(n-1)/2))^(s - r) * w^n.

Evaluation walks the terms with exact ratio updates: multiplying by the
new numerator factors and dividing out the new denominator factors keeps
every intermediate a window-true :class:`~overgap.qseries.QSeries`, so
the partial sum is exact to the requested order.  A numerator parameter
q^(-k) (sign +1, no z) terminates the series after k + 1 terms; without
one, the argument must carry a positive q-exponent so that later terms
fall below the order.

The module also packages three verification routines: the classical
q-Chu-Vandermonde summation, a three-parameter series transformation,
and a chain of displayed forms connecting the smallest-part expansion of
the bounded-gap generating function to its closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .qseries import (
    QMonomial,
    QSeries,
    ZLaurentPoly,
    bounded_gap_overpartition_gf,
    pochhammer,
    pochhammer_infinite,
    qs_div_one_minus,
    qs_invert,
    qs_mul,
    qs_mul_finite,
)

__all__ = [
    "NonUnitDenominator",
    "NonTerminatingWithoutConvergence",
    "HypergeometricSpec",
    "eval_phi",
    "check_q_chu_vandermonde",
    "check_3phi2_transform",
    "chain_lines",
    "LineCheck",
    "ChainReport",
    "compare_lines",
    "verify_identity_chain",
]

_ONE = ZLaurentPoly.one()
_MINUS_ONE = ZLaurentPoly.const(-1)
_ONE_PLUS_Z = ZLaurentPoly({0: 1, 1: 1})


class NonUnitDenominator(ValueError):
    """A denominator parameter would produce a non-invertible factor."""


class NonTerminatingWithoutConvergence(ValueError):
    """Terms cannot be bounded: no terminating parameter and no decay."""


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters of a basic hypergeometric series, all signed monomials."""

    numerator: tuple[QMonomial, ...]
    denominator: tuple[QMonomial, ...]
    argument: QMonomial

    @property
    def exponent_shift(self) -> int:
        """The power s - r applied to the (-1)^n q^(n(n-1)/2) factor."""
        return len(self.denominator) - (len(self.numerator) - 1)

    def termination_index(self) -> int | None:
        """Smallest k with a numerator parameter exactly q^(-k), else None."""
        best = None
        for param in self.numerator:
            if param.sign == 1 and param.z_exp == 0 and param.q_exp <= 0:
                k = -param.q_exp
                if best is None or k < best:
                    best = k
        return best


def _auto_terms(spec: HypergeometricSpec, target_order: int) -> int:
    index = spec.termination_index()
    if index is not None:
        return index + 1
    if spec.argument.q_exp < 1 or spec.exponent_shift < 0:
        raise NonTerminatingWithoutConvergence(
            "series does not terminate and its terms do not gain q-order"
        )
    slack = 0
    for param in spec.numerator:
        if param.q_exp < 0:
            depth = -param.q_exp
            slack += depth * (depth + 1) // 2
    return max(0, target_order + slack)


def _window_slack(spec: HypergeometricSpec, terms: int) -> int:
    """Total downward drift of the term windows over the whole sum."""
    slack = 0
    for param in spec.numerator:
        for k in range(terms - 1):
            drop = param.q_exp + k
            if drop < 0:
                slack -= drop
    if spec.argument.q_exp < 0:
        slack += (terms - 1) * -spec.argument.q_exp
    shift = spec.exponent_shift
    if shift < 0 and terms >= 2:
        slack += (-shift) * (terms - 1) * (terms - 2) // 2
    return slack


def eval_phi(
    spec: HypergeometricSpec, terms: int | None, target_order: int
) -> QSeries:
    """Exact partial sum of the series, valid up to ``target_order``.

    With ``terms`` None the count is chosen automatically: the
    termination index plus one when the series terminates, otherwise
    enough terms that the rest vanish below the order.
    """
    for param in spec.denominator:
        if param.q_exp < 1:
            raise NonUnitDenominator(
                f"denominator parameter {param} needs q_exp >= 1 to stay invertible"
            )
    if terms is None:
        terms = _auto_terms(spec, target_order)
    if terms <= 0:
        return QSeries.zero(target_order)
    term = QSeries.one(target_order + _window_slack(spec, terms))
    shift = spec.exponent_shift
    arg = spec.argument
    total = term.truncate(target_order)
    for n in range(1, terms):
        for param in spec.numerator:
            factor = ZLaurentPoly._make({param.z_exp: -param.sign})
            term = qs_mul_finite(term, [(0, _ONE), (param.q_exp + n - 1, factor)])
        term = qs_div_one_minus(term, QMonomial.q_power(n))
        for param in spec.denominator:
            term = qs_div_one_minus(
                term, QMonomial(param.sign, param.z_exp, param.q_exp + n - 1)
            )
        term = term * arg
        if shift:
            term = term * QMonomial(-1 if shift % 2 else 1, 0, (n - 1) * shift)
        if term.is_zero():
            break
        if term.order < target_order:
            raise AssertionError("hypergeometric window accounting failed")
        total = total + term.truncate(target_order)
    return total


def check_q_chu_vandermonde(
    a: QMonomial, c: QMonomial, n: int, target_order: int
) -> bool:
    """The q-Chu-Vandermonde summation, both sides computed independently.

    The terminating series with numerator parameters (a, q^(-n)),
    denominator parameter c and argument c q^n / a must equal
    (c/a; q)_n / (c; q)_n to the requested order.
    """
    if n < 0:
        raise ValueError("the termination depth n must be nonnegative")
    spec = HypergeometricSpec(
        (a, QMonomial.q_power(-n)), (c,), (c * QMonomial.q_power(n)) / a
    )
    lhs = eval_phi(spec, n + 1, target_order)
    numerator = pochhammer(c / a, n, target_order)
    drop = min(0, numerator.min_exp)
    denominator_inv = qs_invert(
        pochhammer(c, n, target_order - drop), target_order - drop
    )
    rhs = qs_mul(numerator, denominator_inv)
    return lhs.eq_up_to(rhs, target_order)


def check_3phi2_transform(
    a: QMonomial,
    b: QMonomial,
    c: QMonomial,
    d: QMonomial,
    e: QMonomial,
    target_order: int,
) -> bool:
    """A transformation between two series with three numerator parameters.

    The series with parameters (a, b, c; d, e) and argument de/(abc) must
    equal the series with parameters (a, d/b, d/c; d, de/(bc)) and
    argument e/a, multiplied by the infinite-product prefactor
    (e/a)_inf (de/(bc))_inf / ((e)_inf (de/(abc))_inf).
    """
    lhs_spec = HypergeometricSpec((a, b, c), (d, e), (d * e) / (a * b * c))
    lhs = eval_phi(lhs_spec, None, target_order)
    rhs_spec = HypergeometricSpec(
        (a, d / b, d / c), (d, (d * e) / (b * c)), e / a
    )
    series = eval_phi(rhs_spec, None, target_order)
    width = target_order - min(0, series.min_exp)
    numerator = qs_mul(
        pochhammer_infinite(e / a, width),
        pochhammer_infinite((d * e) / (b * c), width),
    )
    denominator = qs_mul(
        pochhammer_infinite(e, width),
        pochhammer_infinite((d * e) / (a * b * c), width),
    )
    prefactor = qs_mul(numerator, qs_invert(denominator, width))
    rhs = qs_mul(prefactor, series)
    return lhs.eq_up_to(rhs, target_order)


# -- the derivation chain ----------------------------------------------------


def chain_lines(t: int, target_order: int) -> list[tuple[str, QSeries]]:
    """Each displayed closed form of the derivation, computed on its own.

    The chain starts from the sum over the smallest part r of the
    bounded-gap members (z marking overlined parts), passes through a
    Pochhammer-quotient rewriting, a series with three numerator
    parameters, its transformed partner, a terminating series with two
    numerator parameters, the q-Chu-Vandermonde evaluation of that
    series, and ends at the closed product form.  Consecutive lines are
    equal as series; :func:`verify_identity_chain` checks exactly that.
    """
    if t < 1:
        raise ValueError("the bound t must be positive")
    if target_order < 1:
        raise ValueError("target_order must be positive")
    order = target_order
    q1 = QMonomial.q_power(1)
    neg_zq = QMonomial(-1, 1, 1)
    z1 = ZLaurentPoly.monomial(1, 1)
    lines: list[tuple[str, QSeries]] = []

    # 1: members grouped by smallest part r; the r-th summand is
    #    (1+z) q^r prod_{j=1}^{t-1} (1 + z q^{r+j}) / prod_{j=0}^{t} (1 - q^{r+j})
    acc = QSeries.zero(order)
    for r in range(1, order):
        summand = QSeries.from_terms({r: _ONE_PLUS_Z}, order)
        for j in range(1, t):
            summand = qs_mul_finite(summand, [(0, _ONE), (r + j, z1)])
        for j in range(t + 1):
            summand = qs_div_one_minus(summand, QMonomial.q_power(r + j))
        acc = acc + summand
    lines.append(("smallest_part_sum", acc))

    # 2: the same sum with the factors bundled into Pochhammer quotients:
    #    (1+z) sum_{r>=1} q^r (q)_{r-1} (-zq)_{r+t-1} / ((q)_{r+t} (-zq)_r)
    term = QSeries.from_terms({1: _ONE}, order)
    term = qs_mul(term, pochhammer(neg_zq, t, order))
    term = qs_mul(term, qs_invert(pochhammer(q1, t + 1, order), order))
    term = qs_div_one_minus(term, neg_zq)
    total = QSeries.zero(order)
    r = 1
    while r < order and not term.is_zero():
        total = total + term.truncate(order)
        term = qs_mul_finite(term, [(1, _ONE), (r + 1, _MINUS_ONE)])
        term = qs_mul_finite(term, [(0, _ONE), (r + t, z1)])
        term = qs_div_one_minus(term, QMonomial.q_power(r + t + 1))
        term = qs_div_one_minus(term, QMonomial(-1, 1, r + 1))
        r += 1
    lines.append(("pochhammer_quotient_sum", total * _ONE_PLUS_Z))

    # 3: prefactor (1+z) q (-zq)_t / ((1+zq) (q)_{t+1}) times the series
    #    with numerator (q, q, -zq^{t+1}), denominator (-zq^2, q^{t+2}),
    #    argument q
    prefactor = QSeries.from_terms({1: _ONE_PLUS_Z}, order)
    prefactor = qs_mul(prefactor, pochhammer(neg_zq, t, order))
    prefactor = qs_div_one_minus(prefactor, neg_zq)
    prefactor = qs_mul(prefactor, qs_invert(pochhammer(q1, t + 1, order), order))
    spec_3 = HypergeometricSpec(
        (q1, q1, QMonomial(-1, 1, t + 1)),
        (QMonomial(-1, 1, 2), QMonomial.q_power(t + 2)),
        q1,
    )
    lines.append(("series_3phi2", qs_mul(prefactor, eval_phi(spec_3, None, order))))

    # 4: the transformed partner of line 3: an extra infinite-product
    #    quotient and the terminating series with numerator
    #    (q, -zq, q^{1-t}), denominator (-zq^2, q^2), argument q^{t+1}
    inf_num = qs_mul(
        pochhammer_infinite(QMonomial.q_power(t + 1), order),
        pochhammer_infinite(QMonomial.q_power(2), order),
    )
    inf_den = qs_mul(
        pochhammer_infinite(QMonomial.q_power(t + 2), order),
        pochhammer_infinite(q1, order),
    )
    spec_4 = HypergeometricSpec(
        (q1, neg_zq, QMonomial.q_power(1 - t)),
        (QMonomial(-1, 1, 2), QMonomial.q_power(2)),
        QMonomial.q_power(t + 1),
    )
    transformed = eval_phi(spec_4, None, order)
    if transformed.min_exp < 0:
        raise AssertionError("transformed series unexpectedly Laurent")
    pref_4 = qs_mul(prefactor, qs_mul(inf_num, qs_invert(inf_den, order)))
    lines.append(("transformed_3phi2", qs_mul(pref_4, transformed)))

    # 5: -(-zq)_t / ((1-q^t) (q)_t) times (series - 1) for the
    #    terminating series with numerator (-z, q^{-t}), denominator
    #    (-zq), argument q^{t+1}
    neg_pref = qs_mul(
        pochhammer(neg_zq, t, order), qs_invert(pochhammer(q1, t, order), order)
    ) * (-1)
    neg_pref = qs_div_one_minus(neg_pref, QMonomial.q_power(t))
    spec_5 = HypergeometricSpec(
        (QMonomial(-1, 1, 0), QMonomial.q_power(-t)),
        (neg_zq,),
        QMonomial.q_power(t + 1),
    )
    phi_5 = eval_phi(spec_5, t + 1, order)
    lines.append(("series_2phi1", qs_mul(neg_pref, phi_5 - 1)))

    # 6: line 5 with the series summed by q-Chu-Vandermonde to
    #    (q)_t / (-zq)_t
    summed = qs_mul(
        pochhammer(q1, t, order), qs_invert(pochhammer(neg_zq, t, order), order)
    )
    lines.append(("chu_closed_form", qs_mul(neg_pref, summed - 1)))

    # 7: the closed product form
    lines.append(("closed_form", bounded_gap_overpartition_gf(t, order, True)))
    return lines


class LineCheck(NamedTuple):
    label: str
    equal_to_previous: bool


@dataclass(frozen=True)
class ChainReport:
    """Pairwise comparison results along the derivation chain."""

    t: int
    order: int
    z_mode: str
    lines: tuple[LineCheck, ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "order": self.order,
            "lines": [
                {"label": line.label, "equal_to_previous": line.equal_to_previous}
                for line in self.lines
            ],
            "pass": self.passed,
        }


_Z_MODES = ("tracked", "zero", "one")


def compare_lines(
    t: int, lines: list[tuple[str, QSeries]], order: int, z_mode: str = "tracked"
) -> ChainReport:
    """Pairwise equality of consecutive chain lines up to ``order``.

    With ``z_mode`` "zero" or "one" the marking variable is specialised
    in every line before comparing; the first line is vacuously true.
    """
    if z_mode not in _Z_MODES:
        raise ValueError(f"z_mode must be one of {_Z_MODES}")
    if z_mode == "tracked":
        values = [series for _, series in lines]
    else:
        z_value = 0 if z_mode == "zero" else 1
        values = [series.subs_z(z_value) for _, series in lines]
    checks = [LineCheck(lines[0][0], True)]
    for i in range(1, len(lines)):
        checks.append(
            LineCheck(lines[i][0], values[i].eq_up_to(values[i - 1], order))
        )
    passed = all(check.equal_to_previous for check in checks)
    return ChainReport(t, order, z_mode, tuple(checks), passed)


def verify_identity_chain(
    t: int, target_order: int, z_mode: str = "tracked"
) -> ChainReport:
    """Compute the chain at bound t and compare consecutive lines."""
    return compare_lines(t, chain_lines(t, target_order), target_order, z_mode)
