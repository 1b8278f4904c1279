import math

import pytest
from hypothesis import given

from pentafuzz import (
    AMBIGUOUS,
    CONTRADICTORY,
    EPSILON,
    FALSE,
    TRUE,
    UNKNOWN,
    BipolarFuzzySet,
    BipolarValue,
    CardinalityKind,
    DistanceKind,
    EntropyKind,
    UndefinedValueError,
    ValidationError,
    VectorNorm,
    axiom_audit,
    bipolar_distance,
    bipolar_similarity,
    border_cardinality,
    cardinality_point,
    cardinality_set,
    complement,
    dual,
    entropy_point,
    entropy_set,
    matches_paper_pattern,
    negation,
)
from helpers import bipolar_values, fuzzy_values, unit_floats

SIMILARITY_DERIVED = {
    CardinalityKind.FROM_PE: DistanceKind.PSEUDO_EUCLID,
    CardinalityKind.FROM_PH: DistanceKind.PSEUDO_HAMMING,
    CardinalityKind.FROM_PP: DistanceKind.PSEUDO_PROB,
}
DISTANCE_DERIVED = {
    EntropyKind.FROM_PE: DistanceKind.PSEUDO_EUCLID,
    EntropyKind.FROM_PH: DistanceKind.PSEUDO_HAMMING,
    EntropyKind.FROM_PP: DistanceKind.PSEUDO_PROB,
}
SCALAR_ENTROPIES = [
    EntropyKind.FROM_PE,
    EntropyKind.FROM_PH,
    EntropyKind.FROM_PP,
    EntropyKind.SZMIDT_KACPRZYK,
    EntropyKind.SZMIDT_KACPRZYK_PI,
    EntropyKind.BUSTINCE_BURILLO,
    EntropyKind.GRZEGORZEWSKI_MROWKA,
]

# quick-audit knob: full grids are exercised by the acceptance suite
AUDIT_ARGS = dict(grid_step=0.02, n_random=20_000)


class TestCardinalityPoint:
    @pytest.mark.parametrize("kind", list(SIMILARITY_DERIVED))
    def test_landmark_values(self, kind):
        assert cardinality_point(kind, TRUE) == pytest.approx(1.0, abs=1e-9)
        assert cardinality_point(kind, FALSE) == pytest.approx(0.0, abs=1e-9)
        assert cardinality_point(kind, AMBIGUOUS) == pytest.approx(0.5, abs=1e-9)

    @given(fuzzy_values)
    def test_fuzzy_values_count_their_membership(self, x):
        for kind in SIMILARITY_DERIVED:
            assert cardinality_point(kind, x) == pytest.approx(x.mu, abs=EPSILON)

    def test_frozen_examples(self):
        # hamming-derived at (0.3, 0.4): (1 - 0.1) / (2 + 0.3) = 9/23
        assert cardinality_point(
            CardinalityKind.FROM_PH, BipolarValue(0.3, 0.4)
        ) == pytest.approx(9 / 23, abs=1e-12)
        # euclid-derived at unknown: 1 - sqrt(1/4 + 1/4)
        assert cardinality_point(CardinalityKind.FROM_PE, UNKNOWN) == pytest.approx(
            1.0 - math.sqrt(0.5), abs=1e-12
        )

    @given(bipolar_values)
    def test_equals_similarity_to_true_landmark(self, x):
        for kind, dist_kind in SIMILARITY_DERIVED.items():
            assert cardinality_point(kind, x) == pytest.approx(
                bipolar_similarity(dist_kind, x, TRUE), abs=EPSILON
            )

    def test_classic_formulas_on_intuitionistic_values(self):
        x = BipolarValue(0.3, 0.4)
        assert cardinality_point(CardinalityKind.CLASSIC_MIN, x) == pytest.approx(0.3, abs=1e-9)
        assert cardinality_point(CardinalityKind.CLASSIC_MED, x) == pytest.approx(
            0.3 + x.pi / 2.0, abs=1e-9
        )
        assert cardinality_point(CardinalityKind.CLASSIC_MAX, x) == pytest.approx(
            0.3 + x.pi, abs=1e-9
        )

    @pytest.mark.parametrize(
        "kind",
        [CardinalityKind.CLASSIC_MIN, CardinalityKind.CLASSIC_MED, CardinalityKind.CLASSIC_MAX],
    )
    def test_classic_kinds_reject_paraconsistent_input(self, kind):
        with pytest.raises(ValidationError):
            cardinality_point(kind, BipolarValue(0.8, 0.6))


class TestCardinalitySet:
    def test_examples(self):
        s = BipolarFuzzySet([("x1", TRUE), ("x2", AMBIGUOUS)])
        for kind in SIMILARITY_DERIVED:
            assert cardinality_set(kind, s) == pytest.approx(1.5, abs=1e-9)
        full = BipolarFuzzySet([(f"e{k}", TRUE) for k in range(4)])
        assert cardinality_set(CardinalityKind.FROM_PH, full) == pytest.approx(4.0, abs=1e-9)
        empty_valued = BipolarFuzzySet([("x", FALSE)])
        assert cardinality_set(CardinalityKind.FROM_PE, empty_valued) == pytest.approx(
            0.0, abs=1e-9
        )


class TestBorderCardinality:
    def test_crisp_set_has_no_border(self):
        s = BipolarFuzzySet([("a", TRUE), ("b", FALSE), ("c", TRUE)])
        for kind in SIMILARITY_DERIVED:
            assert border_cardinality(kind, s) == pytest.approx(0.0, abs=1e-9)

    def test_ambiguous_set_has_no_border(self):
        s = BipolarFuzzySet([("a", AMBIGUOUS), ("b", AMBIGUOUS)])
        for kind in SIMILARITY_DERIVED:
            assert border_cardinality(kind, s) == pytest.approx(0.0, abs=1e-9)

    def test_unknown_set_border_under_hamming_kind(self):
        # n(U) = 1/3 and U is self-complementary, so each element leaves 1/3
        s = BipolarFuzzySet([("a", UNKNOWN), ("b", UNKNOWN), ("c", UNKNOWN)])
        assert border_cardinality(CardinalityKind.FROM_PH, s) == pytest.approx(1.0, abs=1e-9)

    @given(bipolar_values)
    def test_pointwise_border_is_nonnegative(self, x):
        s = BipolarFuzzySet([("e", x)])
        for kind in SIMILARITY_DERIVED:
            assert border_cardinality(kind, s) >= -EPSILON


class TestEntropyPoint:
    @pytest.mark.parametrize(
        "kind",
        [
            EntropyKind.FROM_PE,
            EntropyKind.FROM_PH,
            EntropyKind.FROM_PP,
            EntropyKind.SZMIDT_KACPRZYK,
            EntropyKind.SZMIDT_KACPRZYK_PI,
        ],
    )
    def test_crisp_and_ambiguous_landmarks(self, kind):
        assert entropy_point(kind, TRUE).scalar == pytest.approx(0.0, abs=1e-9)
        assert entropy_point(kind, FALSE).scalar == pytest.approx(0.0, abs=1e-9)
        assert entropy_point(kind, AMBIGUOUS).scalar == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize(
        "kind,expected",
        [
            (EntropyKind.FROM_PE, math.sqrt(2.0)),
            (EntropyKind.FROM_PH, 4.0 / 3.0),
            (EntropyKind.FROM_PP, 1.5),
        ],
    )
    def test_neutral_landmark_constants(self, kind, expected):
        assert entropy_point(kind, UNKNOWN).scalar == pytest.approx(expected, abs=1e-9)
        assert entropy_point(kind, CONTRADICTORY).scalar == pytest.approx(expected, abs=1e-9)

    @given(bipolar_values)
    def test_equals_twice_min_distance_to_crisp_landmarks(self, x):
        for kind, dist_kind in DISTANCE_DERIVED.items():
            expected = 2.0 * min(
                bipolar_distance(dist_kind, x, TRUE), bipolar_distance(dist_kind, x, FALSE)
            )
            assert entropy_point(kind, x).scalar == pytest.approx(expected, abs=EPSILON)

    @given(fuzzy_values)
    def test_fuzzy_entropy_collapse(self, x):
        expected = 1.0 - abs(1.0 - 2.0 * x.mu)
        for kind in DISTANCE_DERIVED:
            assert entropy_point(kind, x).scalar == pytest.approx(expected, abs=EPSILON)

    def test_bustince_burillo_vanishes_at_ambiguous(self):
        assert entropy_point(EntropyKind.BUSTINCE_BURILLO, AMBIGUOUS).scalar == 0.0

    def test_pi_ratio_kind_undefined_at_neutral_landmarks(self):
        for point in (UNKNOWN, CONTRADICTORY):
            with pytest.raises(UndefinedValueError):
                entropy_point(EntropyKind.SZMIDT_KACPRZYK_PI, point)

    @given(bipolar_values)
    def test_ratio_reduction_for_sk(self, x):
        # penta form of the sk entropy written in (mu, nu, pi/kappa) terms
        diff = abs(x.mu - x.nu)
        slack = abs(x.mu + x.nu - 1.0)
        expected = (1.0 - diff + slack) / (1.0 + diff + slack)
        assert entropy_point(EntropyKind.SZMIDT_KACPRZYK, x).scalar == pytest.approx(
            expected, abs=EPSILON
        )

    def test_vector_kind_carries_components_and_norms(self):
        x = BipolarValue(0.3, 0.4)
        r = entropy_point(EntropyKind.GRZEGORZEWSKI_MROWKA, x)
        assert r.vector == pytest.approx((0.9, 0.3), abs=1e-9)
        assert r.scalar == pytest.approx(0.9, abs=1e-9)
        r_sum = entropy_point(EntropyKind.GRZEGORZEWSKI_MROWKA, x, VectorNorm.SUM)
        assert r_sum.scalar == pytest.approx(1.2, abs=1e-9)

    def test_scalar_kinds_have_no_vector(self):
        assert entropy_point(EntropyKind.FROM_PE, AMBIGUOUS).vector is None

    @given(bipolar_values)
    def test_invariance_under_transforms(self, x):
        for kind in SCALAR_ENTROPIES:
            if (
                kind is EntropyKind.SZMIDT_KACPRZYK_PI
                and abs(x.mu + x.nu - 1.0) > 1.0 - 1e-6
            ):
                continue  # comparisons at the pole amplify last-ulp noise
            try:
                base = entropy_point(kind, x).scalar
            except UndefinedValueError:
                continue
            tol = 1e-6 if kind is EntropyKind.SZMIDT_KACPRZYK_PI else EPSILON
            for op in (complement, dual, negation):
                y = op(x)
                try:
                    moved = entropy_point(kind, y).scalar
                except UndefinedValueError:
                    continue
                scale = max(1.0, abs(base), abs(moved))
                assert abs(base - moved) <= tol * scale


class TestEntropySet:
    def test_examples(self):
        assert entropy_set(
            EntropyKind.FROM_PH, BipolarFuzzySet([("x1", TRUE), ("x2", AMBIGUOUS)])
        ) == pytest.approx(0.5, abs=1e-9)
        crisp = BipolarFuzzySet([("a", TRUE), ("b", FALSE)])
        ambiguous = BipolarFuzzySet([("a", AMBIGUOUS), ("b", AMBIGUOUS)])
        for kind in DISTANCE_DERIVED:
            assert entropy_set(kind, crisp) == pytest.approx(0.0, abs=1e-9)
            assert entropy_set(kind, ambiguous) == pytest.approx(1.0, abs=1e-9)

    def test_empty_universe_rejected(self):
        with pytest.raises(ValidationError):
            entropy_set(EntropyKind.FROM_PE, BipolarFuzzySet([]))


class TestReductionIdentities:
    """General formulas agree with their class-restricted printed forms."""

    @given(bipolar_values)
    def test_cardinality_reductions(self, x):
        diff = x.mu - x.nu
        if x.mu + x.nu <= 1.0:
            slack = 1.0 - x.mu - x.nu  # uncertainty of an intuitionistic value
        else:
            slack = x.mu + x.nu - 1.0  # contradiction of a paraconsistent value
        expected = {
            CardinalityKind.FROM_PE: 1.0
            - math.sqrt(((1.0 - diff) / 2.0) ** 2 + (slack / (1.0 + slack)) ** 2),
            CardinalityKind.FROM_PH: (1.0 + diff) / (2.0 + slack),
            CardinalityKind.FROM_PP: (1.0 + diff) / (2.0 * (1.0 + slack)),
        }
        for kind, want in expected.items():
            assert cardinality_point(kind, x) == pytest.approx(want, abs=EPSILON)

    @given(bipolar_values)
    def test_entropy_reductions(self, x):
        diff = abs(x.mu - x.nu)
        slack = abs(x.mu + x.nu - 1.0)
        expected = {
            EntropyKind.FROM_PE: math.sqrt(
                (1.0 - diff) ** 2 + (2.0 * slack / (1.0 + slack)) ** 2
            ),
            EntropyKind.FROM_PH: 2.0 * (1.0 - diff + slack) / (2.0 + slack),
            EntropyKind.FROM_PP: (1.0 - diff + 2.0 * slack) / (1.0 + slack),
            EntropyKind.BUSTINCE_BURILLO: slack,
        }
        for kind, want in expected.items():
            assert entropy_point(kind, x).scalar == pytest.approx(want, abs=EPSILON)
        if slack < 1.0 - 1e-6:
            # closer to the pole the quotient amplifies last-ulp differences
            # between the two routes beyond any fixed relative tolerance
            want = (1.0 - diff) / (1.0 - slack)
            got = entropy_point(EntropyKind.SZMIDT_KACPRZYK_PI, x).scalar
            assert abs(got - want) <= 1e-6 * max(1.0, got, want)
        gm = entropy_point(EntropyKind.GRZEGORZEWSKI_MROWKA, x)
        assert gm.vector == pytest.approx((1.0 - diff, slack), abs=EPSILON)


class TestAxiomAudit:
    @pytest.mark.parametrize(
        "kind",
        [CardinalityKind.FROM_PH, CardinalityKind.CLASSIC_MIN, CardinalityKind.CLASSIC_MED],
    )
    def test_cardinalities_that_satisfy_all_axioms(self, kind):
        report = axiom_audit(kind, **AUDIT_ARGS)
        assert report.passed, report.failed_axioms()
        assert matches_paper_pattern(report)

    @pytest.mark.parametrize("kind", [CardinalityKind.FROM_PE, CardinalityKind.FROM_PP])
    def test_pe_and_pp_cardinalities_break_containment_monotonicity(self, kind):
        # real violations of c5: growing mu / shrinking nu can move a value
        # farther from the true landmark through the neutrality axis
        report = axiom_audit(kind, **AUDIT_ARGS)
        assert report.failed_axioms() == ("c5",)
        assert report.result("c5").witness is not None
        assert not matches_paper_pattern(report)

    def test_pp_containment_counterexample_is_genuine(self):
        inner = cardinality_point(CardinalityKind.FROM_PP, BipolarValue(0.8, 0.2))
        outer = cardinality_point(CardinalityKind.FROM_PP, BipolarValue(0.8, 0.1))
        assert outer == pytest.approx(17 / 22, abs=1e-12)
        assert inner == pytest.approx(0.8, abs=1e-12)
        assert outer < inner  # (0.8, 0.1) contains (0.8, 0.2) in the order

    def test_classic_max_fails_with_witnesses(self):
        report = axiom_audit(CardinalityKind.CLASSIC_MAX, **AUDIT_ARGS)
        assert not report.passed
        assert set(report.failed_axioms()) == {"c2", "c4"}
        for axiom in report.failed_axioms():
            assert report.result(axiom).witness
        assert matches_paper_pattern(report)

    @pytest.mark.parametrize(
        "kind",
        [
            EntropyKind.FROM_PE,
            EntropyKind.FROM_PH,
            EntropyKind.FROM_PP,
            EntropyKind.SZMIDT_KACPRZYK,
            EntropyKind.SZMIDT_KACPRZYK_PI,
        ],
    )
    def test_scalar_entropies_satisfy_all_axioms(self, kind):
        report = axiom_audit(kind, **AUDIT_ARGS)
        assert report.passed, report.failed_axioms()
        assert matches_paper_pattern(report)

    def test_bustince_burillo_fails_exactly_e2(self):
        report = axiom_audit(EntropyKind.BUSTINCE_BURILLO, **AUDIT_ARGS)
        assert report.failed_axioms() == ("e2",)
        witness = report.result("e2").witness
        assert "0.5" in witness and "0" in witness
        assert matches_paper_pattern(report)

    @pytest.mark.parametrize("norm", list(VectorNorm))
    def test_vector_entropy_satisfies_all_axioms_under_both_norms(self, norm):
        report = axiom_audit(EntropyKind.GRZEGORZEWSKI_MROWKA, vector_norm=norm, **AUDIT_ARGS)
        assert report.passed, report.failed_axioms()
        assert report.kind == f"gm-{norm.value}"

    def test_pi_ratio_entropy_e5_is_vacuous_on_its_domain(self):
        report = axiom_audit(EntropyKind.SZMIDT_KACPRZYK_PI, **AUDIT_ARGS)
        e5 = report.result("e5")
        assert e5.passed and e5.checked == 0
        assert "vacuously" in (e5.note or "")

    def test_report_is_deterministic(self):
        a = axiom_audit(EntropyKind.FROM_PE, **AUDIT_ARGS)
        b = axiom_audit(EntropyKind.FROM_PE, **AUDIT_ARGS)
        assert a == b


class TestScalarAxiomSpotChecks:
    """Value-level counterparts of the audited identities."""

    @given(bipolar_values)
    def test_cardinality_dual_symmetry(self, x):
        for kind in SIMILARITY_DERIVED:
            assert cardinality_point(kind, x) == pytest.approx(
                cardinality_point(kind, dual(x)), abs=EPSILON
            )
            assert cardinality_point(kind, complement(x)) == pytest.approx(
                cardinality_point(kind, negation(x)), abs=EPSILON
            )

    @given(bipolar_values)
    def test_cardinality_complement_bound(self, x):
        for kind in SIMILARITY_DERIVED:
            total = cardinality_point(kind, x) + cardinality_point(kind, complement(x))
            assert total <= 1.0 + EPSILON

    @given(bipolar_values, unit_floats, unit_floats)
    def test_containment_monotonicity_for_hamming_kind(self, x, alpha, beta):
        grown = BipolarValue(min(x.mu + alpha * (1.0 - x.mu), 1.0), beta * x.nu)
        assert cardinality_point(CardinalityKind.FROM_PH, grown) >= cardinality_point(
            CardinalityKind.FROM_PH, x
        ) - EPSILON
