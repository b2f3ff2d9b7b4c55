import pytest

from fmnumber import InsufficientPartners, NotSmooth, SurfaceConfig, fiber_product_invariants, orbit, scalar_mul, schoen_family
from fmnumber.threefold import HodgeDiamond, twist

PRINTED = [[1], [0, 0], [0, 19, 0], [1, 19, 19, 1], [0, 19, 0], [0, 0], [1]]


def surface(fibers, m=None, xi=(1,), s="1"):
    data = {"fibers": [{"at": a, "type": t} for a, t in fibers], "aut_order": 2}
    if m is not None:
        data["marked"] = {"s": s, "kind": "In", "m": m, "xi": {"m": m, "coords": list(xi)}}
    return SurfaceConfig.from_dict(data)


def base(m):
    return surface([("0", "II*"), ("1", "I1"), ("inf", "I1")], m)


def euler_by_fiber_sum(a, b):
    """Independent recount: pair fibers by base point."""
    ea = {str(t): f.euler for t, f in a.fibers}
    eb = {str(t): f.euler for t, f in b.fibers}
    return sum(ea[t] * eb[t] for t in ea if t in eb)


class TestFiberProduct:
    def test_example_ii_with_companion(self, example_ii, companion):
        rep = fiber_product_invariants(example_ii, companion)
        assert rep.diamond.rows() == PRINTED
        assert rep.diamond[1, 1] == rep.diamond[2, 2] == 19
        assert rep.diamond[1, 2] == rep.diamond[2, 1] == 19
        assert (rep.euler, rep.kodaira_dim, rep.picard, rep.rel_picard) == (0, 1, 19, 2)
        assert rep.smooth

    def test_overlap(self, example_ii):
        other = surface([("1", "II*"), ("7", "I1"), ("8", "I1")])
        with pytest.raises(NotSmooth):
            fiber_product_invariants(example_ii, other)

    def test_euler_fiber_sum(self, example_i, companion):
        rep = fiber_product_invariants(example_i, companion)
        assert euler_by_fiber_sum(example_i, companion) == 0 == rep.euler

    def test_smooth_points_do_not_count(self):
        # I0 entries share a base point but have e = 0
        a = surface([("0", "II*"), ("1", "I1"), ("inf", "I1"), ("5", "I0")], 3)
        b = surface([("5", "I0"), ("6", "II*"), ("7", "I1"), ("8", "I1")])
        assert fiber_product_invariants(a, b).euler == 0

    def test_no_multiple_fiber_is_calabi_yau(self, companion):
        plain = surface([("0", "II*"), ("1", "I1"), ("inf", "I1")])
        rep = fiber_product_invariants(plain, companion)
        assert rep.kodaira_dim == 0
        assert rep.notes
        assert rep.diamond.rows() == PRINTED

    def test_diamond_checks(self, example_ii, companion):
        d = fiber_product_invariants(example_ii, companion).diamond
        assert d.is_symmetric()
        assert d.euler() == 0
        assert "19" in d.pretty()

    def test_diamond_json(self, example_ii, companion):
        js = fiber_product_invariants(example_ii, companion).to_json()
        assert js["diamond"] == [[1, 0, 0, 1], [0, 19, 19, 0], [0, 19, 19, 0], [1, 0, 0, 1]]

    def test_asymmetric_diamond_detected(self):
        assert not HodgeDiamond(((1, 0, 0, 1), (0, 19, 18, 0), (0, 19, 19, 0), (1, 0, 0, 1))).is_symmetric()


class TestSchoenFamily:
    def test_n3_at_m14(self, companion):
        fam = schoen_family(base(14), None, companion, 3)
        assert len(fam) == 3
        assert fam.certificate.reps == (1, 3, 5)

    def test_n1_singleton(self, companion):
        fam = schoen_family(base(4), None, companion, 1)
        assert len(fam) == 1
        assert fam.certificate.distinct_partner_classes

    def test_n5_at_m22(self, companion):
        fam = schoen_family(base(22), None, companion, 5)
        assert fam.certificate.reps == (1, 3, 5, 7, 9)
        xi = base(22).xi()
        act = base(22).action()
        for a, i in enumerate(fam.certificate.reps):
            orb = set(orbit(act, scalar_mul(i, xi)))
            for j in fam.certificate.reps[a + 1 :]:
                assert scalar_mul(j, xi) not in orb
        for i, cfg, rep in fam.members:
            assert cfg.xi() == scalar_mul(i, xi)
            assert rep.derived_equivalent_family
            assert rep.non_birational_certificate
            assert rep.diamond.rows() == PRINTED

    def test_certificate_flags(self, companion):
        cert = schoen_family(base(22), None, companion, 5).certificate
        assert cert.non_birational and cert.derived_equivalent
        assert cert.deformation_equivalent and cert.hodge_isometric
        assert "assumed" in cert.generic_fibers_non_isogenous

    def test_insufficient(self, companion):
        with pytest.raises(InsufficientPartners) as exc:
            schoen_family(base(12), None, companion, 3)
        assert exc.value.suggested_m == 14

    def test_odd_m_rejected(self, companion):
        with pytest.raises(ValueError):
            schoen_family(base(15), None, companion, 1)

    def test_custom_rule(self, companion):
        seen = []

        def rule(cfg, i):
            seen.append(i)
            return twist(cfg, i)

        schoen_family(base(14), rule, companion, 2)
        assert seen == [1, 3]

    def test_companion_overlap(self):
        with pytest.raises(NotSmooth):
            schoen_family(base(14), None, base(14), 1)
