"""Series evaluation, the two classical identities, and the derivation chain."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from overgap.hyper import (
    ChainReport,
    HypergeometricSpec,
    NonTerminatingWithoutConvergence,
    NonUnitDenominator,
    chain_lines,
    check_3phi2_transform,
    check_q_chu_vandermonde,
    compare_lines,
    eval_phi,
    verify_identity_chain,
)
from overgap.partitions import gf_from_enumeration
from overgap.qseries import (
    QMonomial,
    QSeries,
    bounded_gap_overpartition_gf,
    pochhammer,
    qs_add,
    qs_invert,
    qs_mul,
)

Q = QMonomial.q_power
NEG_Z = QMonomial(-1, 1, 0)
NEG_ZQ = QMonomial(-1, 1, 1)


def direct_phi(spec, terms, target_order, slack=16):
    """Term-by-term evaluation from the defining formula, one inversion
    per term instead of incremental ratios; a deliberately independent
    path used to cross-check eval_phi."""
    width = target_order + slack
    total = QSeries.zero(width)
    shift = spec.exponent_shift
    for n in range(terms):
        numerator = QSeries.one(width)
        for param in spec.numerator:
            numerator = qs_mul(numerator, pochhammer(param, n, width))
        denominator = pochhammer(Q(1), n, width)
        for param in spec.denominator:
            denominator = qs_mul(denominator, pochhammer(param, n, width))
        term = qs_mul(numerator, qs_invert(denominator, width))
        term = term * (spec.argument**n)
        if shift:
            sign = -1 if (n % 2 and shift % 2) else 1
            term = term * QMonomial(sign, 0, shift * (n * (n - 1) // 2))
        total = qs_add(total, term)
    assert total.order >= target_order, "slack too small for this spec"
    return total.truncate(target_order)


# -- spec plumbing ---------------------------------------------------------


def test_exponent_shift():
    two_one = HypergeometricSpec((NEG_Z, Q(-2)), (NEG_ZQ,), Q(3))
    assert two_one.exponent_shift == 0
    three_two = HypergeometricSpec((Q(1), Q(1), NEG_ZQ), (NEG_ZQ, Q(2)), Q(1))
    assert three_two.exponent_shift == 0
    two_two = HypergeometricSpec((NEG_Z, Q(-2)), (NEG_ZQ, Q(2)), Q(2))
    assert two_two.exponent_shift == 1
    four_two = HypergeometricSpec((Q(-2), NEG_Z, Q(2), Q(1)), (NEG_ZQ, Q(3)), Q(1))
    assert four_two.exponent_shift == -1


def test_termination_index():
    assert HypergeometricSpec((NEG_Z, Q(-3)), (NEG_ZQ,), Q(1)).termination_index() == 3
    assert HypergeometricSpec((Q(0), Q(-3)), (NEG_ZQ,), Q(1)).termination_index() == 0
    assert HypergeometricSpec((NEG_Z,), (NEG_ZQ,), Q(1)).termination_index() is None
    # a marked parameter with negative exponent does not terminate anything
    assert (
        HypergeometricSpec((QMonomial(1, 1, -2),), (NEG_ZQ,), Q(1)).termination_index()
        is None
    )


def test_eval_phi_degenerate_cases():
    spec = HypergeometricSpec((Q(0), Q(-4)), (NEG_ZQ,), Q(1))
    # q^0 terminates the series after the constant term
    assert eval_phi(spec, None, 8) == QSeries.one(8)
    assert eval_phi(spec, 0, 8) == QSeries.zero(8)


def test_eval_phi_rejects_bad_denominators():
    with pytest.raises(NonUnitDenominator):
        eval_phi(HypergeometricSpec((Q(-2),), (NEG_Z,), Q(1)), None, 8)
    with pytest.raises(NonUnitDenominator):
        eval_phi(HypergeometricSpec((Q(-2),), (Q(0),), Q(1)), None, 8)


def test_eval_phi_rejects_divergent_requests():
    # no terminating parameter and a constant argument
    with pytest.raises(NonTerminatingWithoutConvergence):
        eval_phi(HypergeometricSpec((NEG_Z,), (NEG_ZQ,), QMonomial(1, 1, 0)), None, 8)
    # no terminating parameter and more numerator than denominator params
    with pytest.raises(NonTerminatingWithoutConvergence):
        eval_phi(HypergeometricSpec((Q(1), Q(2), Q(3)), (NEG_ZQ,), Q(1)), None, 8)


def test_eval_phi_matches_direct_formula():
    cases = [
        (HypergeometricSpec((Q(1), Q(1), QMonomial(-1, 1, 3)), (QMonomial(-1, 1, 2), Q(4)), Q(1)), 9, 9),
        (HypergeometricSpec((NEG_Z, Q(-3)), (NEG_ZQ,), Q(4)), 4, 12),
        (HypergeometricSpec((NEG_Z, Q(-2)), (NEG_ZQ, Q(2)), Q(2)), 3, 10),
        (HypergeometricSpec((Q(-2), NEG_Z, Q(2), Q(1)), (NEG_ZQ, Q(3)), Q(1)), 3, 10),
        (HypergeometricSpec((QMonomial(1, -1, 1),), (QMonomial(-1, 2, 2),), Q(1)), 8, 8),
    ]
    for spec, terms, order in cases:
        assert eval_phi(spec, terms, order).eq_up_to(
            direct_phi(spec, terms, order), order
        )


def test_eval_phi_auto_terms_is_saturated():
    spec = HypergeometricSpec((NEG_ZQ,), (QMonomial(-1, 1, 2),), Q(1))
    auto = eval_phi(spec, None, 10)
    assert auto.eq_up_to(eval_phi(spec, 40, 10), 10)
    terminating = HypergeometricSpec((NEG_Z, Q(-3)), (NEG_ZQ,), Q(4))
    assert eval_phi(terminating, None, 12) == eval_phi(terminating, 4, 12)
    # extra terms past termination are all zero
    assert eval_phi(terminating, 9, 12) == eval_phi(terminating, 4, 12)


# -- the summation and the transformation ----------------------------------


def test_chu_vandermonde_identity_instances():
    for t in (1, 2, 3, 4):
        assert check_q_chu_vandermonde(NEG_Z, NEG_ZQ, t, 25)
    assert check_q_chu_vandermonde(Q(1), Q(3), 3, 20)
    assert check_q_chu_vandermonde(QMonomial(1, 1, 0), Q(1), 4, 18)
    assert check_q_chu_vandermonde(QMonomial(-1, 0, 2), QMonomial(-1, 1, 3), 5, 18)
    assert check_q_chu_vandermonde(NEG_ZQ, Q(2), 0, 12)


def test_chu_vandermonde_is_not_vacuous():
    # a genuinely different right side must be detected: compare the
    # series against the closed form for the wrong depth
    spec = HypergeometricSpec((NEG_Z, Q(-2)), (NEG_ZQ,), NEG_ZQ * Q(2) / NEG_Z)
    lhs = eval_phi(spec, 3, 15)
    wrong = qs_mul(
        pochhammer(NEG_ZQ / NEG_Z, 3, 15), qs_invert(pochhammer(NEG_ZQ, 3, 15), 15)
    )
    assert not lhs.eq_up_to(wrong, 15)


def test_transform_chain_parameter_family():
    for t in (1, 2):
        assert check_3phi2_transform(
            Q(1), Q(1), QMonomial(-1, 1, t + 1), QMonomial(-1, 1, 2), Q(t + 2), 20
        )


def test_transform_degenerate_gauss_instance():
    # b == d cancels a parameter pair on the right side
    assert check_3phi2_transform(
        NEG_ZQ, QMonomial(-1, 1, 2), Q(1), QMonomial(-1, 1, 2), Q(4), 18
    )


def test_transform_detects_perturbation():
    # wrong argument: e bumped on one side only
    a, b, c, d, e = Q(1), Q(1), QMonomial(-1, 1, 3), QMonomial(-1, 1, 2), Q(4)
    lhs = eval_phi(
        HypergeometricSpec((a, b, c), (d, e), (d * e) / (a * b * c)), None, 16
    )
    rhs = eval_phi(
        HypergeometricSpec((a, b, c), (d, e), (d * e * Q(1)) / (a * b * c)), None, 16
    )
    assert not lhs.eq_up_to(rhs, 16)


# -- the derivation chain ----------------------------------------------------


def test_chain_line_labels():
    labels = [label for label, _ in chain_lines(2, 6)]
    assert labels == [
        "smallest_part_sum",
        "pochhammer_quotient_sum",
        "series_3phi2",
        "transformed_3phi2",
        "series_2phi1",
        "chu_closed_form",
        "closed_form",
    ]


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("z_mode", ["tracked", "zero", "one"])
def test_chain_consecutive_equality(t, z_mode):
    report = verify_identity_chain(t, 20, z_mode)
    assert report.passed
    assert report.t == t and report.order == 20 and report.z_mode == z_mode
    assert all(check.equal_to_previous for check in report.lines)


def test_chain_first_line_matches_enumeration():
    for t in (1, 2, 4):
        first = chain_lines(t, 13)[0][1]
        assert first.eq_up_to(gf_from_enumeration("bounded_gap", t, 12), 13)


def test_chain_last_line_is_closed_form():
    lines = chain_lines(3, 15)
    assert lines[-1][1] == bounded_gap_overpartition_gf(3, 15)


def test_chain_lines_differ_across_bounds():
    # negative control: the chain is not comparing zeros to zeros
    assert not chain_lines(2, 10)[0][1].eq_up_to(chain_lines(3, 10)[0][1], 10)


def test_compare_lines_detects_mismatch():
    lines = chain_lines(2, 12)
    tampered = lines[:3] + [("closed_form", chain_lines(3, 12)[-1][1])]
    report = compare_lines(2, tampered, 12)
    assert not report.passed
    assert [c.equal_to_previous for c in report.lines] == [True, True, True, False]


def test_compare_lines_rejects_unknown_mode():
    with pytest.raises(ValueError):
        compare_lines(2, chain_lines(2, 6), 6, z_mode="half")


def test_chain_report_json():
    payload = verify_identity_chain(2, 10).to_json_dict()
    assert payload["t"] == 2 and payload["order"] == 10 and payload["pass"] is True
    assert [line["label"] for line in payload["lines"]] == [
        label for label, _ in chain_lines(2, 6)
    ]
    assert all(line["equal_to_previous"] is True for line in payload["lines"])
    json.dumps(payload)


def test_chain_input_validation():
    with pytest.raises(ValueError):
        chain_lines(0, 10)
    with pytest.raises(ValueError):
        chain_lines(3, 0)


# -- randomized identity instances -------------------------------------------

monomials = st.builds(
    QMonomial,
    st.sampled_from((1, -1)),
    st.integers(min_value=-1, max_value=2),
    st.integers(min_value=1, max_value=3),
)


@settings(deadline=None, max_examples=30)
@given(monomials, monomials, st.integers(min_value=0, max_value=5))
def test_chu_vandermonde_random_instances(a, c, n):
    assert check_q_chu_vandermonde(a, c, n, 18)
