"""
Integration tests running the projection and bound pipelines end to end.
"""

import pytest

from src.acm.reduction import acm_check, regularity_acm
from src.bounds.corpus import corpus
from src.bounds.verdicts import theorem18_verdict
from src.constants import Verdict
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal
from src.project.pipeline import project_field
from src.vfield.field import VectorField
from src.vfield.invariance import invariance_check


class TestTwistedCubicProjection:
    """Projection of the twisted cubic from a generic point."""

    @pytest.fixture
    def certificate(self, twisted_cubic: Ideal, x3: VectorField):
        return project_field(x3, twisted_cubic, twisted_cubic, 0, seed=0)

    def test_certificate_verified(self, certificate):
        """Every identity in the certificate holds."""
        assert certificate.verified
        assert certificate.flags["eliminant_generates"]

    def test_degrees(self, certificate):
        """e = 3, r = 2 and the plane field has degree m + e - r = 2."""
        assert certificate.multiplicity == 3
        assert certificate.regularity == 2
        assert certificate.field.degree == 2
        assert not certificate.field.is_zero()

    def test_image_is_plane_cubic(self, certificate):
        """The image is a curve of degree three in the plane."""
        image = certificate.projected_variety
        assert image.ring.n == 2
        data = hilbert_data(image)
        assert data.dimension == 1
        assert data.degree == 3

    def test_projected_field_invariant(self, certificate):
        """The projected field leaves the image invariant."""
        assert invariance_check(certificate.field, certificate.projected_ideal).verdict
        assert invariance_check(certificate.field, certificate.projected_variety).verdict

    def test_reproducible(self, twisted_cubic: Ideal, x3: VectorField, certificate):
        """The same seed gives the same projection."""
        again = project_field(x3, twisted_cubic, twisted_cubic, 0, seed=0)
        assert again.seed == certificate.seed
        assert again.eliminant == certificate.eliminant
        assert again.field.coefficients == certificate.field.coefficients


class TestCorpusPipelines:
    """Corpus instances through regularity and the bounds."""

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_ccf_regularity(self, d: int):
        """The CCF curves are ACM of regularity d."""
        instance = corpus("ccf", d=d)
        assert acm_check(instance.ideal, seed=0).is_acm
        assert regularity_acm(instance.ideal, seed=0) == d

    def test_ccf_field_invariant(self):
        """The CCF field leaves its curve invariant."""
        instance = corpus("ccf", d=4)
        assert invariance_check(instance.field, instance.ideal).verdict

    def test_twisted_cubic_bound(self):
        """The corpus twisted cubic satisfies the projected bound."""
        instance = corpus("twisted_cubic")
        report = theorem18_verdict(instance.ideal, instance.ideal, instance.field, seed=0)
        assert report.verdict == Verdict.HOLDS_STRICT
        assert (report.lhs, report.rhs) == (3, 4)

    def test_complete_intersection_regularity(self):
        """A (2, 3) complete intersection in P^3 has regularity 2 + 3 - 3 + 2 = 4."""
        instance = corpus("complete_intersection", degrees=[2, 3])
        assert regularity_acm(instance.ideal, seed=0) == 4
