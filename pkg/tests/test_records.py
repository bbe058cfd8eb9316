"""Input-record parsing, diagnostics, and the serialize fixpoint."""

from fractions import Fraction

import pytest

from gorenstein_kit.dataset import (
    GROUP_FIXTURES,
    RING_FIXTURES,
    fixture_path,
    load_group_fixture,
    load_ring_fixture,
)
from gorenstein_kit.records import (
    ParseError,
    parse_group_record,
    parse_rational,
    parse_ring_record,
    serialize_group_record,
    serialize_ring_record,
)

RING_TEXT = """\
# a comment
[ring]
name = demo
coefficients = Z[1/6]
generator = x 8
generator = y 12
relation = f 48
regular = yes
"""

GROUP_TEXT = """\
[group]
name = demo
block = 2 1

[generator]
row = -1

[character_table]
class_sizes = 1 1
irreducible = triv 1 1
irreducible = sign 1 -1
"""


def test_parse_ring_record():
    record = parse_ring_record(RING_TEXT, "demo.ring")
    assert record.name == "demo"
    assert record.generators == (("x", 8), ("y", 12))
    assert record.relations == (("f", 48),)
    assert record.regular_sequence_asserted
    p = record.to_presentation()
    assert p.coefficient_label == "Z[1/6]"


def test_parse_group_record():
    record = parse_group_record(GROUP_TEXT, "demo.group")
    assert record.blocks == ((2, 1),)
    assert record.generators == (((Fraction(-1),),),)
    group, table = record.build()
    assert group.order == 2
    assert table is not None and table.names == ("triv", "sign")


@pytest.mark.parametrize("name", RING_FIXTURES)
def test_ring_serialization_fixpoint(name):
    record = load_ring_fixture(name)
    text = serialize_ring_record(record)
    reparsed = parse_ring_record(text, name)
    assert reparsed == record
    assert serialize_ring_record(reparsed) == text


@pytest.mark.parametrize("name", GROUP_FIXTURES)
def test_group_serialization_fixpoint(name):
    record = load_group_fixture(name)
    text = serialize_group_record(record)
    reparsed = parse_group_record(text, name)
    assert reparsed == record
    assert serialize_group_record(reparsed) == text


def test_rational_parsing():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-5") == Fraction(-5)
    with pytest.raises(ParseError):
        parse_rational("1.5")
    with pytest.raises(ParseError):
        parse_rational("1/0")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("generator = x 2", "content before any section"),
        ("[ring]\nname = a\ngeneratorx 2", "expected 'key = value'"),
        ("[ring]\nname = a\ngenerator = x", "expected 'generator = SYMBOL DEGREE'"),
        ("[ring]\nname = a\ngenerator = x q", "bad degree"),
        ("[ring]\nname = a\ngenerator = x 2\ngenerator = x 4", "already used on line 3"),
        ("[ring]\nname = a\ngenerator = x 2\nrelation = f 1", "degree must be >= 2"),
        ("[ring]\ngenerator = x 2", "missing 'name'"),
        ("[ring]\nname = a", "at least one generator"),
        ("[ring]\nname = a\ngenerator = x 2\nregular = maybe", "'yes' or 'no'"),
        ("[ring]\nname = a\nwhat = ever", "unknown key"),
    ],
)
def test_ring_diagnostics(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_ring_record(text, "bad.ring")
    assert fragment in str(err.value)
    assert str(err.value).startswith("bad.ring")


def test_ring_diagnostic_carries_line_number():
    with pytest.raises(ParseError) as err:
        parse_ring_record("[ring]\nname = a\ngenerator = x zero", "bad.ring")
    assert "bad.ring:3" in str(err.value)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("[group]\nblock = 2 1", "missing 'name'"),
        ("[group]\nname = g", "at least one block"),
        ("[group]\nname = g\nblock = 2", "expected 'block = DEGREE DIMENSION'"),
        ("[group]\nname = g\nblock = 0 1", "must be >= 1"),
        ("[group]\nname = g\nblock = 2 1\n[generator]\nrow = 1 0", "has 2 entries, expected 1"),
        ("[group]\nname = g\nblock = 2 1\n[generator]\nrow = 1\nrow = 1", "has 2 rows, expected 1"),
        ("[generator]\nrow = 1", "starts with a [group] section"),
        ("[group]\nname = g\nblock = 2 1\n[mystery]\nrow = 1", "unknown section"),
        ("[group]\nname = g\nblock = 2 1\n[generator]\nrow = 1/0", "bad rational"),
    ],
)
def test_group_diagnostics(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_group_record(text, "bad.group")
    assert fragment in str(err.value)


def test_declared_class_sizes_must_match():
    text = GROUP_TEXT.replace("class_sizes = 1 1", "class_sizes = 2")
    record = parse_group_record(text, "bad.group")
    with pytest.raises(ValueError):
        record.build()


def test_fixture_path_resolution():
    assert fixture_path("ku").name == "ku.ring"
    assert fixture_path("sigma3_standard").name == "sigma3_standard.group"
    with pytest.raises(FileNotFoundError):
        fixture_path("nonexistent")
