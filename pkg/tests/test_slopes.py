from collections import Counter

import pytest

from twobridge.arith import Frac, GMat, INFINITY, linking_number, make_link
from twobridge.diagram import Diagrams, minimal_paths
from twobridge.slopes import (MForm, SForm, SlopeFamily, delta_sum, m_form,
                              m_form_edgewise, s_form, s_form_symbolic,
                              slope_families, straighten, to_preferred)


def frac(p, q):
    return Frac.make(p, q)


def surgery_link(k):
    return make_link(4 * k - 1, 8 * k)


def dt_paths(link):
    d = Diagrams(link)
    return minimal_paths(d.dt, INFINITY, link.fraction())


def d1_c_paths(link):
    d = Diagrams(link)
    return [p for p in minimal_paths(d.d1, INFINITY, link.fraction())
            if "C" in p.edge_types()]


class TestDeltaSum:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_fan_path_through_one(self, k):
        verts = [INFINITY, frac(1, 1), frac(1, 2),
                 frac(2 * k, 4 * k + 1), frac(4 * k - 1, 8 * k)]
        assert delta_sum(verts) == 3

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_fan_path_through_zero(self, k):
        verts = [INFINITY, frac(0, 1), frac(1, 2),
                 frac(2 * k - 1, 4 * k - 1), frac(4 * k - 1, 8 * k)]
        assert delta_sum(verts) == -1

    def test_infinite_endpoint_contributes_nothing(self):
        assert delta_sum([INFINITY, frac(0, 1)]) == 0


# Expected intersection forms for the surgery family at parameter k, in
# the blackboard framing.
def expected_surgery_mforms(k):
    forms = [MForm(1, 2, 1), MForm(1, 0, 1), MForm(1, 0, 1),
             MForm(1, -2, 3 - 4 * k), MForm(1 - 4 * k, 0, -1)]
    if k > 1:
        forms.append(MForm(1, -2, 1))
    return Counter(forms)


class TestMForm:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_surgery_family_forms(self, k):
        got = Counter(m_form(p) for p in dt_paths(surgery_link(k)))
        assert got == expected_surgery_mforms(k)

    def test_straighten_ledger_nonnegative(self):
        for p in dt_paths(make_link(13, 34)):
            _, ledger = straighten(p)
            assert min(ledger.n0p, ledger.n0m, ledger.n1p, ledger.n1m,
                       ledger.n4p, ledger.n4m) >= 0

    def test_agrees_with_edgewise_sum(self):
        for p, q in [(3, 8), (7, 16), (5, 12), (13, 34), (11, 40)]:
            for path in dt_paths(make_link(p, q)):
                assert m_form(path) == m_form_edgewise(path)

    def test_parities(self):
        for p, q in [(3, 8), (5, 18), (19, 50)]:
            for path in dt_paths(make_link(p, q)):
                x, y, z = m_form(path)
                assert (x - z) % 2 == 0
                assert (x + y) % 2 == (1 + q) % 2


class TestTrackContributions:
    # Spot checks of single-edge contributions against hand values.
    def test_a_edge_at_infinity_vanishes(self):
        from twobridge.slopes import _track_contribution
        assert _track_contribution("A", GMat.make(1, 0, 0, 1), 1) == (0, 0, 0, 0)

    def test_c_edge_in_unit_interval(self):
        from twobridge.slopes import _track_contribution
        # -d/c = 3/4 lies in (0, 1): contributes (-2 beta, 0)
        g = GMat.make(1, -1, 4, -3)
        assert _track_contribution("C", g, 1) == (0, -2, 0, 0)

    def test_c_edge_otherwise(self):
        from twobridge.slopes import _track_contribution
        assert _track_contribution("C", GMat.make(1, 0, 0, 1), 1) == (0, 0, 0, 2)

    def test_d_edge_cases(self):
        from twobridge.slopes import _track_contribution
        assert _track_contribution("D", GMat.make(1, 0, 0, 1), 1) == (0, 0, 1, -1)
        assert _track_contribution("D", GMat.make(1, -1, 2, -1), 1) == (0, 0, 1, -1)
        assert _track_contribution("D", GMat.make(1, 0, 2, 1), 1) == (-1, 1, 1, -1)

    def test_free_weight_edge(self):
        from twobridge.slopes import _track_contribution_free
        # -d/c = -1/3 < 0: (2(beta - n), 2n)
        assert _track_contribution_free(GMat.make(1, 0, 3, 1), 1) == (2, -2, 0, 2)
        # -d/c = 5/3 > 0: (-2n, 2(n - beta))
        assert _track_contribution_free(GMat.make(1, -2, 3, -5), 1) == (0, -2, -2, 2)


class TestSForm:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_surgery_family_s_form(self, k):
        paths = d1_c_paths(surgery_link(k))
        assert len(paths) == 1
        assert s_form(paths[0]) == SForm(-2 * k, 2 * k - 1)

    def test_diagonal_count_is_y(self):
        for p, q in [(3, 8), (13, 34), (19, 50)]:
            for path in d1_c_paths(make_link(p, q)):
                assert s_form(path).y == path.edge_types().count("C")

    def test_path_without_diagonals_reduces_to_delta_sum(self):
        d = Diagrams(make_link(3, 8))
        for path in minimal_paths(d.d1, INFINITY, frac(3, 8)):
            if "C" not in path.edge_types():
                assert s_form(path) == SForm(delta_sum(path), 0)

    def test_symbolic_identity_with_edgewise_sum(self):
        for p, q in [(3, 8), (7, 16), (5, 18), (13, 34), (23, 62)]:
            for path in d1_c_paths(make_link(p, q)):
                assert s_form_symbolic(path) == m_form_edgewise(path)


class TestToPreferred:
    def test_mform_shift(self):
        assert to_preferred(MForm(1 - 4 * 2, 0, -1), -1) == MForm(-8, 0, -2)
        assert to_preferred(MForm(1, 2, 1), -1) == MForm(0, 2, 0)
        assert to_preferred(MForm(0, 0, 0), 0) == MForm(0, 0, 0)

    def test_sform_shift(self):
        assert to_preferred(SForm(-2, 1), -1) == SForm(-3, 1)


class TestSlopeFamilies:
    def test_hopf(self):
        result = slope_families(make_link(1, 2))
        assert result.presentation() == {("T", 0, 1, 0), ("T", 0, -1, 0)}
        # both families are merged over the whole t range
        assert all(f.domain == ("0", "inf") for f in result.families)

    def test_whitehead_presentation(self):
        result = slope_families(make_link(3, 8))
        assert result.presentation() == {
            ("T", -4, 0, -2), ("T", 0, 0, 0), ("T", 0, -2, -2),
            ("T", 0, 2, 0), ("S", -3, 1)}

    def test_whitehead_lower_branches_and_endpoints(self):
        fams = slope_families(make_link(3, 8)).families
        assert SlopeFamily("T", (-2, 0, -4), ("0", "1")) in fams
        assert SlopeFamily("endpoint", (-4,), ("inf", "inf"), "second") in fams
        assert SlopeFamily("endpoint", (-4,), ("0", "0"), "first") in fams
        assert SlopeFamily("endpoint", (0,), ("inf", "inf"), "second") in fams

    def test_merged_iff_symmetric(self):
        for f in slope_families(make_link(11, 40)).families:
            if f.branch != "T":
                continue
            x, y, z = f.coeffs
            if f.domain == ("0", "inf"):
                assert x == z
            else:
                assert x != z

    def test_deduplication(self):
        # Two paths of the surgery link share one form; the family
        # appears once.
        result = slope_families(make_link(3, 8))
        assert len(result.mforms) == 4
        assert len(result.mforms_raw) == 4

    def test_repeat_runs_identical(self):
        a = slope_families(make_link(13, 44))
        b = slope_families(make_link(13, 44))
        assert a == b

    def test_s_endpoints_meet_t_families(self):
        # Each s family evaluated at s = 1 and s = -1 is a t = 1 value
        # of some t family of the same link.
        result = slope_families(make_link(3, 8))
        t_at_one = {(x + y, y + z) for x, y, z in result.mforms}
        for x, y in result.sforms:
            assert (x + y, x - y) in t_at_one
            assert (x - y, x + y) in t_at_one
