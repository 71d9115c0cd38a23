import pytest

from fibgf.polynomials import TPoly, build_product, fibonacci_product_spec
from fibgf.sequences import fibonacci
from fibgf.triangle import (
    a_vector,
    expected_charpoly,
    first_row,
    format_row,
    mark_matrix_charpoly,
    next_row,
    triangle_rows,
    verify_m_recurrence,
    verify_rows_match_product,
)


def test_first_row():
    assert first_row(1).entries == (1, 1)
    t = TPoly.t()
    assert first_row(t).entries == (1, t)
    assert first_row(-1).entries == (1, -1)


def test_row_progression_matches_display():
    rows = list(triangle_rows(5, 1))
    assert rows[1].entries == (1, 1, 1, 1)
    assert rows[2].entries == (1, 1, 1, 2, 1, 1, 1)
    assert rows[3].entries == (1, 1, 1, 2, 1, 2, 2, 1, 2, 1, 1, 1)
    assert rows[4].entries == (1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 2, 2, 1, 2, 1, 1, 1)
    groups5 = [tuple(rows[4].entries[g.start : g.start + g.visible]) for g in rows[4].groups]
    assert groups5 == [(1, 1), (1, 2, 1), (2, 2), (1, 3, 2), (2, 3, 1), (2, 2), (1, 2, 1), (1, 1)]


def test_weighted_row_production():
    t = TPoly.t()
    r2 = next_row(first_row(t), t)
    assert r2.entries == (1, t, t, t * t)


def test_row_sizes():
    for row in triangle_rows(16, 1):
        assert len(row.entries) == fibonacci(row.index + 3) - 1


def test_virtual_edge_parity():
    for row in triangle_rows(22, 1):
        assert row.groups[0].leading_virtual == (row.index % 2 == 0)
        assert row.groups[-1].trailing_virtual == (row.index % 2 == 0)


def test_group_sizes_and_marks_tile():
    for row in triangle_rows(12, 1):
        assert all(g.length in (2, 3) for g in row.groups)
        marks = row.marks()
        assert len(marks) == len(row.entries)
        assert set(marks) <= {"f", "m", "l"}


def test_marks_of_virtual_boundary_row():
    r2 = list(triangle_rows(2, 1))[1]
    assert r2.marks() == ["m", "l", "f", "m"]


def test_a_vector_examples():
    rows = list(triangle_rows(4, 1))
    assert a_vector(rows[0]) == (1, 0, 1, 0, 0, 1, 0)
    assert a_vector(rows[1]) == (1, 2, 1, 1, 1, 0, 1)
    assert a_vector(rows[3]) == (7, 10, 7, 6, 5, 4, 5)


def test_a_vector_rejects_symbolic():
    t = TPoly.t()
    with pytest.raises(ValueError):
        a_vector(first_row(t))


def test_m_recurrence():
    rep = verify_m_recurrence(20)
    assert rep["status"] == "pass"
    assert rep["first_valid_index"] == 1
    assert rep["square_sum_identity"]
    assert rep["vectors"][2] == [1, 2, 1, 1, 1, 0, 1]


def test_square_sum_is_power_sum():
    v2 = [1, 2, 4, 10, 24, 60]
    for row, want in zip(triangle_rows(5, 1), v2[1:]):
        a = a_vector(row)
        assert a[0] + a[1] + a[2] == want


def test_charpoly():
    got = mark_matrix_charpoly()
    assert got == expected_charpoly()
    # x^2 (x+1)^2 (x^3 - 2x^2 - 2x + 2) expanded
    assert list(got.c) == [0, 0, 2, 2, -4, -5, 0, 1]


def test_rows_match_product_all_weights():
    verify_rows_match_product(12, t=1)
    verify_rows_match_product(10, t=-1)
    verify_rows_match_product(10, t=3)
    verify_rows_match_product(12, t=TPoly.t())


def test_rows_match_product_symbolic_deep():
    verify_rows_match_product(22, t=TPoly.t())


def test_format_row_paper_style():
    rows = list(triangle_rows(3, 1))
    assert format_row(rows[0]) == "1 1"
    assert format_row(rows[1]) == "1 1 • 1 1"
    assert format_row(rows[2]) == "1 1 • 1 2 1 • 1 1"


def test_row_entries_equal_product_error_detail():
    # corrupting a row must be caught with the offending exponent
    import dataclasses

    good = list(triangle_rows(3, 1))[2]
    bad = dataclasses.replace(good, entries=good.entries[:3] + (9,) + good.entries[4:])
    poly = build_product(fibonacci_product_spec(3))
    coeffs = poly.dense_coefficients()
    mismatch = [k for k, (a, b) in enumerate(zip(bad.entries, coeffs)) if a != b]
    assert mismatch == [3]
