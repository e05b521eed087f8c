"""Catalog construction, table audits, and rendering."""

from __future__ import annotations

import json

import pytest

from scrollcurves.catalog import (
    AuditReport,
    CatalogRow,
    FlagRecord,
    audit_fixture,
    build_catalog,
    format_exponents,
    render,
)
from scrollcurves.curves import make_curve
from scrollcurves.errors import BoundExceeded, UnknownFixture
from scrollcurves.fixtures import fixture, fixture_names
from scrollcurves.scrolls import min_scroll_dimension

TABLE_SHAPES = {
    "surface-g4": (4, 0),
    "surface-g5": (10, 1),
    "surface-g6": (9, 0),
    "threefold-g6": (4, 1),
    "threefold-g7": (13, 4),
    "threefold-g8": (22, 7),
    "twopoint-g4": (4, 0),
    "twopoint-g5": (8, 1),
}


class TestFixtures:
    def test_names(self):
        assert fixture_names() == tuple(sorted(TABLE_SHAPES))

    def test_row_counts(self):
        for name, (rows, flags) in TABLE_SHAPES.items():
            table = fixture(name)
            assert len(table) == rows
            assert sum(1 for r in table if r.expect_flag) == flags

    def test_total_rows(self):
        assert sum(len(fixture(n)) for n in fixture_names()) == 74

    def test_unknown_name(self):
        with pytest.raises(UnknownFixture, match="surface-g4"):
            fixture("surface-g9")


class TestAudit:
    def test_counts_match_registry(self):
        for name, (rows, flags) in TABLE_SHAPES.items():
            report = audit_fixture(name)
            assert report.total == rows
            assert report.matched == rows - flags
            assert len(report.flagged) == flags

    def test_flags_are_exactly_the_registered_rows(self):
        for name in fixture_names():
            expected = [
                (row.exponents, row.expect_flag)
                for row in fixture(name)
                if row.expect_flag
            ]
            got = [(rec.row.exponents, rec.field) for rec in audit_fixture(name).flagged]
            assert got == expected, name

    def test_surface_g4_fully_matched(self):
        report = audit_fixture("surface-g4")
        assert (report.matched, report.flagged) == (4, ())

    def test_surface_g5_flags_fiber_degree(self):
        (record,) = audit_fixture("surface-g5").flagged
        assert record.row.exponents == (4, 7, 9, 10)
        assert record.field == "ell"
        assert record.fixture_value == (1, 3)
        assert record.computed_value == [(1, 1)]

    def test_threefold_g6_flags_gap_count(self):
        (record,) = audit_fixture("threefold-g6").flagged
        assert record.row.exponents == (5, 6, 13, 14)
        assert record.field == "genus"
        assert record.fixture_value == 6
        assert record.computed_value == 7

    def test_twopoint_duplicate_row_flags_genus(self):
        (record,) = audit_fixture("twopoint-g5").flagged
        assert record.row.exponents == (2, 3, 4, 5, 9)
        assert (record.field, record.computed_value) == ("genus", 4)


class TestBuildCatalog:
    def test_genus_four_non_gorenstein(self):
        rows = build_catalog([4], non_gorenstein=True)
        assert [r.exponents for r in rows] == [
            (3, 7, 8),
            (4, 5, 7, 8),
            (4, 6, 7, 8, 9),
            (5, 6, 7, 8, 9),
        ]
        labels = {r.exponents: r.label for r in rows}
        assert labels[(5, 6, 7, 8, 9)] == "NN"
        assert labels[(4, 5, 7, 8)] == "K"
        assert labels[(4, 6, 7, 8, 9)] == "NG"
        assert labels[(3, 7, 8)] == "--"

    def test_genus_zero_empty(self):
        assert build_catalog([0]) == []

    def test_row_counts_follow_semigroup_counts(self):
        rows = build_catalog([4, 5])
        assert len(rows) == 7 + 12
        assert rows == sorted(rows, key=lambda r: (r.genus, r.exponents))

    def test_deterministic(self):
        assert build_catalog([5]) == build_catalog([5])

    def test_scroll_dim_filter_is_exact(self):
        rows = build_catalog([6], scroll_dim=3)
        assert rows
        for row in rows:
            assert min_scroll_dimension(row.canonical) == 3
            assert row.gonality == 4
            assert all(len(s.blocks) == 3 for s in row.structures)

    def test_genus_six_threefold_non_gorenstein_set(self):
        rows = build_catalog([6], scroll_dim=3, non_gorenstein=True)
        assert {r.exponents for r in rows} == {
            (4, 7, 8, 9),
            (4, 7, 10, 12, 13),
            (5, 7, 8, 10, 11),
            (5, 6, 8, 10, 11),
        }

    def test_genus_six_catalog_covers_clean_fixture_semigroups(self):
        semigroups = {
            make_curve(r.exponents).s_zero for r in build_catalog([6], scroll_dim=3)
        }
        for row in fixture("threefold-g6"):
            if row.expect_flag is None:
                assert make_curve(row.exponents).s_zero in semigroups

    def test_two_point_mode(self):
        rows = build_catalog([4, 5], singular_points=2)
        assert len(rows) == 11
        assert all(r.provenance == "fixture" for r in rows)
        assert all(r.gonality == 3 for r in rows)
        genera = sorted(r.genus for r in rows)
        assert genera == [4] * 4 + [5] * 7
        assert sum(1 for r in rows if r.exponents == (2, 3, 4, 5, 9)) == 1

    def test_two_point_single_genus(self):
        rows = build_catalog([5], singular_points=2)
        assert len(rows) == 7

    def test_range_input(self):
        assert build_catalog(range(4, 6)) == build_catalog([4, 5])

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            build_catalog([40])

    def test_validation(self):
        with pytest.raises(ValueError):
            build_catalog([-1])
        with pytest.raises(ValueError):
            build_catalog([4], singular_points=3)

    def test_provenance_computed(self):
        rows = build_catalog([4])
        assert all(r.provenance == "computed" for r in rows)


class TestRender:
    def test_empty_csv_is_header_only(self):
        out = render([], "csv")
        assert out == (
            "exponents,genus,gonality,eta,mu,g_prime,label,canonical,structures\n"
        )

    def test_json_schema_key_order(self):
        rows = build_catalog([4], non_gorenstein=True)
        decoded = json.loads(render(rows, "json"))
        assert len(decoded) == 4
        for entry in decoded:
            assert list(entry) == [
                "exponents",
                "genus",
                "gonality",
                "eta",
                "mu",
                "g_prime",
                "flags",
                "canonical",
                "structures",
            ]
            assert list(entry["flags"]) == [
                "gorenstein",
                "hyperelliptic",
                "nearly_normal",
                "kunz",
                "almost_gorenstein",
                "nearly_gorenstein",
            ]
            for structure in entry["structures"]:
                assert list(structure) == ["dims", "step", "ell"]

    def test_markdown_columns(self):
        out = render(build_catalog([4], non_gorenstein=True), "markdown")
        lines = out.splitlines()
        assert lines[0] == "| C | gn | class | C' | structures |"
        assert lines[1] == "| --- | --- | --- | --- | --- |"
        assert len(lines) == 6

    def test_md_alias(self):
        rows = build_catalog([4], non_gorenstein=True)
        assert render(rows, "md") == render(rows, "markdown")

    def test_byte_stable(self):
        for fmt in ("json", "csv", "markdown"):
            assert render(build_catalog([5]), fmt) == render(build_catalog([5]), fmt)

    def test_audit_json_clean(self):
        out = render(audit_fixture("surface-g4"), "json")
        assert out == '{"matched":4,"flagged":[]}'

    def test_audit_json_flagged(self):
        decoded = json.loads(render(audit_fixture("threefold-g6"), "json"))
        assert decoded["matched"] == 3
        (flag,) = decoded["flagged"]
        assert flag == {
            "exponents": [5, 6, 13, 14],
            "field": "genus",
            "fixture": 6,
            "computed": 7,
        }

    def test_audit_markdown_mentions_counts(self):
        out = render(audit_fixture("surface-g5"), "markdown")
        assert "matched 9 of 10" in out
        assert "(1:t^4:t^7:t^9:t^10)" in out

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render([], "yaml")

    def test_exponent_formatting(self):
        assert format_exponents((4, 5, 7, 8)) == "(1:t^4:t^5:t^7:t^8)"
        assert format_exponents((1, 2)) == "(1:t:t^2)"
        assert format_exponents((0, 2, 3, 4)) == "(1:t^2:t^3:t^4)"
        assert format_exponents((0, 1, 2, -3)) == "(1:t:t^2:t^-3)"
