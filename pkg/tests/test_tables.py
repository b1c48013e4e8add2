from cgraphs import tables


def test_table1_rows():
    rows = tables.table1()
    assert len(rows) == 10
    assert [r.index for r in rows if r.status == tables.FLAG] == [7]
    for r in rows:
        assert r.cell("distinct").computed == r.cell("distinct").oracle
        assert r.cell("m").computed == r.cell("m").oracle


def test_table1_row7_detail():
    row = tables.table1()[6]
    assert row.cell("m").status == tables.MATCH
    assert row.cell("m").computed == 8
    assert row.cell("distinct").status == tables.FLAG
    assert row.cell("distinct").oracle == (0, 1, 2, 3, 21, 22, 23, 24)
    assert row.notes and "computed m=8" in row.notes[0]


def test_table1_without_oracle():
    rows = tables.table1(use_oracle=False)
    assert all(c.oracle is None for r in rows for c in r.cells)
    assert sum(r.status == tables.MATCH for r in rows) == 9


def test_table2_rows():
    rows = tables.table2()
    assert len(rows) == 10
    assert [r.index for r in rows if r.status == tables.FLAG] == [4, 6]
    for r in rows:
        assert r.cell("omega").computed == r.cell("omega").oracle


def test_table2_row4_omega():
    row = tables.table2()[3]
    omega = row.cell("omega")
    assert (omega.printed, omega.computed, omega.oracle, omega.status) == (65, 67, 67, tables.FLAG)
    assert row.cell("comparison").status == tables.MATCH


def test_table2_row6_a():
    row = tables.table2()[5]
    a = row.cell("a")
    assert (a.printed, a.computed, a.oracle) == (15, 13, 13)
    assert row.cell("comparison").status == tables.MATCH
    assert "second-smallest" in row.notes[0]


def test_table2_row9():
    row = tables.table2()[8]
    assert row.status == tables.MATCH
    assert (row.cell("omega").computed, row.cell("a").computed, row.cell("comparison").computed) == (47, 20, ">")


def test_render_rows_schema():
    d = tables.render_rows(tables.table2(use_oracle=False))[0]
    assert set(d) == {"row", "sequence", "status", "cells", "notes"}
    assert set(d["cells"][0]) == {"field", "printed", "computed", "oracle", "status"}
