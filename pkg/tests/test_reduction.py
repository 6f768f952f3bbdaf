"""Reduction and integral-closure certificates."""
import random

import pytest

from ulrich_forge import (
    Ideal,
    PolyRing,
    is_integral,
    is_reduction,
    parse_generator_list,
    parse_polynomial,
    verify_minimal_reduction,
)
from ulrich_forge.pipelines import no_ulrich_subring

R = PolyRing(("x", "y"))


def p(text):
    return parse_polynomial(text, R)


def ideal(text):
    return Ideal(parse_generator_list(text, R))


I_2 = ideal("x*y, x^2 - y^2")


class TestIsReduction:
    def test_adjoining_integral_element(self):
        # x^2 satisfies z^2 - (x^2 - y^2) z - (xy)^2 = 0 over I
        z = p("x^2")
        identity = z * z - p("x^2 - y^2") * z - p("x*y") ** 2
        assert identity.is_zero
        cert = is_reduction(I_2, I_2.sum(Ideal([z])))
        assert cert.positive and cert.t <= 2

    def test_multiplicity_negative(self):
        cert = is_reduction(I_2, ideal("x, y"))
        assert cert.kind == "NEGATIVE_MULTIPLICITY"
        assert (cert.e_small, cert.e_large) == (4, 1)

    def test_identity_reduction(self):
        cert = is_reduction(I_2, I_2)
        assert cert.positive and cert.t == 0

    def test_containment_enforced(self):
        with pytest.raises(ValueError):
            is_reduction(ideal("x^2"), ideal("y"))

    def test_finite_colength_enforced(self):
        with pytest.raises(ValueError):
            is_reduction(ideal("x"), ideal("x, y"))


class TestIsIntegral:
    def test_positive_with_membership_gap(self):
        for n in range(2, 6):
            I = ideal(f"x*y, x^{n} - y^{n}")
            z = p(f"x^{n}")
            cert = is_integral(z, I)
            assert cert.positive
            assert not I.normal_form(z).is_zero  # jointly: z in closure(I) - I

    def test_negative_example(self):
        cert = is_integral(p("x"), I_2)
        assert cert.kind == "NEGATIVE_MULTIPLICITY"
        assert (cert.e_small, cert.e_large) == (4, 2)

    def test_element_of_ideal(self):
        cert = is_integral(p("x*y"), I_2)
        assert cert.positive and cert.t == 0

    def test_monotone_in_the_ideal(self):
        # integral over I forces integral over any larger finite-colength ideal
        z = p("x^2")
        bigger = I_2.sum(ideal("x^3"))
        assert is_integral(z, I_2).positive
        assert is_integral(z, bigger).positive

    def test_order_bound_inside_square_of_max(self):
        # certified-integral elements over an ideal inside m^2 stay in m^2
        rng = random.Random(13)
        candidates = [p("x^2"), p("x^3"), p("x^2*y"), p("y^3"), p("x*y^2"),
                      p("x^2 + x*y"), p("y^2 - x*y")]
        for z in candidates:
            cert = is_integral(z, I_2)
            if cert.positive:
                assert all(sum(e) >= 2 for e in z.terms)


class TestVerifyMinimalReduction:
    def test_plane_family_certificate(self):
        sub = no_ulrich_subring(2)
        report = verify_minimal_reduction(sub, parse_generator_list("x*y, x^2 - y^2", R))
        assert report.verdict
        assert len(report.items) == 7
        assert all(cert.positive for _, cert in report.items)

    def test_alternative_parameter_pair(self):
        sub = no_ulrich_subring(2)
        report = verify_minimal_reduction(sub, parse_generator_list("x^2, y^2", R))
        assert report.verdict  # (x^2, y^2) also reduces the maximal ideal

    def test_non_sop_rejected(self):
        sub = no_ulrich_subring(2)
        with pytest.raises(ValueError) as err:
            verify_minimal_reduction(sub, parse_generator_list("x^2, x^3", R))
        assert "colength" in str(err.value)

    def test_elements_outside_subring_rejected(self):
        sub = no_ulrich_subring(2)
        with pytest.raises(ValueError):
            verify_minimal_reduction(sub, parse_generator_list("x, y", R))
