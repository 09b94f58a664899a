"""Table-file integrity: content pins, loader structure, row grammar,
and fault injection through the --table-dir override."""

import hashlib
import shutil
from pathlib import Path

import pytest

from thetalift.enumeration import regenerate_appendix_c
from thetalift.exact import GENERIC_B, Scalar
from thetalift.langlands import parse_o
from thetalift.theta import (
    TableError,
    appendix_rows_at,
    default_table_dir,
    load_tables,
    lookup_lift,
)

TABLE_DIR = Path(__file__).resolve().parents[1] / "src" / "thetalift" / "tables"

# Audited content pins: any edit to the data files must be deliberate and
# re-audited against the written tables before updating these.
SHA256 = {
    "theta1.tbl": "f861e11d2c8efeacddd57bc5b2ec2735e0acbacb5ef8b898afddd93176a95c68",
    "theta2.tbl": "41866553a098113be333479f4269d699ecb01ecc81ee7bed28e9c46593a7a3a8",
    "theta3.tbl": "d94f19cafa1682f8474381ed5112d4846faa4778a75ac0a63448ce7edf0f9a6d",
    "theta4.tbl": "34c577eac7829eb0c802fbe1b7cb8487c9a2395ae0beef2c895c46dde9c68f5f",
    "appendix_c.tbl": "d4edba1a13d1a5811df339bc3ef7b2b78618e43987e07cfae7154e867032c896",
}

ROW_COUNTS = {1: 6, 2: 10, 3: 11, 4: 3}
APPENDIX_ROWS = 95


def test_table_files_pinned():
    for name, want in SHA256.items():
        digest = hashlib.sha256((TABLE_DIR / name).read_bytes()).hexdigest()
        assert digest == want, f"{name} changed; re-audit before repinning"


def test_loader_row_counts():
    tables = load_tables()
    for rank, count in ROW_COUNTS.items():
        assert len(tables.theta(rank)) == count
    assert len(tables.appendix_c) == APPENDIX_ROWS


def test_loader_uses_packaged_dir_and_caches():
    assert load_tables() is load_tables()
    assert Path(load_tables().source) == default_table_dir().resolve()


def test_every_lift_row_has_condition_and_sides():
    tables = load_tables()
    for rank in (1, 2, 3, 4):
        for row in tables.theta(rank):
            assert row.pattern.side == "o"
            assert row.template.side == "sp"
            assert row.cond


def test_appendix_rows_are_sp_patterns_with_ktypes():
    tables = load_tables()
    for row in tables.appendix_c:
        assert row.pattern.side == "sp"
        assert row.lkts
        assert row.pattern.var_names() <= {"b"}


def test_missing_directory_errors():
    with pytest.raises(TableError):
        load_tables("/no/such/table/dir")


def _copy_tables(tmp_path: Path) -> Path:
    dest = tmp_path / "tables"
    shutil.copytree(TABLE_DIR, dest)
    return dest


def test_corrupt_ktype_value_reported_as_mismatch(tmp_path):
    dest = _copy_tables(tmp_path)
    path = dest / "appendix_c.tbl"
    lines = path.read_text().splitlines()
    idx = next(i for i, l in enumerate(lines) if l.strip() and not l.strip().startswith("#"))
    head, _, cond = lines[idx].partition("=>")
    body, _, cond = cond.rpartition(";")
    # shift the first K-type entry by one: still well-formed, now wrong
    assert body.strip().startswith("{(")
    first = body.index("(") + 1
    stop = body.index(",", first)
    bumped = str(int(body[first:stop]) + 1)
    lines[idx] = head + "=>" + body[:first] + bumped + body[stop:] + ";" + cond
    path.write_text("\n".join(lines) + "\n")
    tables = load_tables(dest)
    report = regenerate_appendix_c(0, tables)
    assert not report.ok
    assert any("K-type mismatch" in d for c in report.cases for d in c.details)


def test_corrupt_condition_creates_duplicate_row_error(tmp_path):
    dest = _copy_tables(tmp_path)
    path = dest / "appendix_c.tbl"
    lines = path.read_text().splitlines()
    data = [i for i, l in enumerate(lines) if l.strip() and not l.strip().startswith("#")]
    # clone a data row with its condition widened to 'true': now two rows
    # cover the same parameter at its original b values
    src = lines[data[0]]
    head, _, _ = src.rpartition(";")
    lines.append(head + "; true")
    path.write_text("\n".join(lines) + "\n")
    tables = load_tables(dest)
    report = regenerate_appendix_c(0, tables)
    assert not report.ok


def test_deleted_lift_row_breaks_coverage(tmp_path):
    dest = _copy_tables(tmp_path)
    path = dest / "theta2.tbl"
    lines = [
        l
        for l in path.read_text().splitlines()
        if "pi((m,l)" not in l.replace(" ", "")
    ]
    path.write_text("\n".join(lines) + "\n")
    tables = load_tables(dest)
    pi = parse_o("pi_{1}((2,0;),1,{e1+e2,e1-e2},0,0,0,0)")
    assert lookup_lift(load_tables().theta2, pi) is not None
    assert lookup_lift(tables.theta2, pi) is None


def test_malformed_row_raises(tmp_path):
    dest = _copy_tables(tmp_path)
    path = dest / "theta1.tbl"
    path.write_text(path.read_text() + "\npi_{1}((m;),1,{},0,0,0,0)\n")
    with pytest.raises(TableError):
        load_tables(dest)


def test_appendix_b_values_partition():
    """Every row is active somewhere on the sample grid, and no two rows
    produce the same parameter at the same b."""
    from fractions import Fraction as Q

    from thetalift.theta import instantiate_lkt_row

    tables = load_tables()
    active = set()
    grid = [Scalar.of(x) for x in (0, 1, 2, 3, 4, 5, Q(1, 2))] + [GENERIC_B]
    for beta in grid:
        seen = appendix_rows_at(tables, beta)
        assert seen  # non-empty and duplicate-free by construction
        for row in tables.appendix_c:
            if instantiate_lkt_row(row, beta) is not None:
                active.add(row.line)
    assert len(active) == APPENDIX_ROWS
