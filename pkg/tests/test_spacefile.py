import json

import pytest

from specspace.catalog import BUILTIN_CATALOG, chain
from specspace.poset import FiniteSubset
from specspace.spaces import GOA, Dual, Finite, Sum, normalize
from specspace.spacefile import (
    SpaceDocument,
    SpaceFileError,
    parse_document,
    serialize_document,
)
from specspace.subsets import GoaSet, SumSet, SymbolicSubset


def test_round_trip_catalog_spaces():
    for entry in BUILTIN_CATALOG:
        e = normalize(entry.space)
        doc = SpaceDocument(e)
        text = serialize_document(doc)
        parsed = parse_document(text)
        assert parsed.space == e, entry.name
        assert serialize_document(parsed) == text


def test_round_trip_subsets():
    space = Sum((Finite(chain(2)), GOA))
    p = chain(2)
    doc = SpaceDocument(
        normalize(space),
        {
            "mix": SymbolicSubset(
                normalize(space),
                SumSet((FiniteSubset(p, 0b01), GoaSet(True, frozenset({1, 5}), True))),
            )
        },
    )
    text = serialize_document(doc)
    parsed = parse_document(text)
    assert parsed.subsets == doc.subsets
    assert serialize_document(parsed) == text


def test_parse_finite_space():
    doc = parse_document(
        '{"space": {"kind": "finite", "elements": ["a","b"], "leq": [["a","b"]]}}'
    )
    assert isinstance(doc.space, Finite)
    assert doc.space.poset.leq(0, 1)


def test_parse_takes_closure_of_leq():
    doc = parse_document(
        '{"space": {"kind": "finite", "elements": ["a","b","c"], '
        '"leq": [["a","b"],["b","c"]]}}'
    )
    assert doc.space.poset.leq(0, 2)


def test_parse_location_on_bad_json():
    with pytest.raises(SpaceFileError) as err:
        parse_document('{"space": \n  {"kind" }')
    assert "line 2" in str(err.value)


def test_unknown_fields_rejected():
    with pytest.raises(SpaceFileError) as err:
        parse_document('{"space": {"kind": "generic_over_antichain", "extra": 1}}')
    assert "extra" in str(err.value)
    with pytest.raises(SpaceFileError):
        parse_document('{"space": {"kind": "generic_over_antichain"}, "other": {}}')


def test_unknown_kind_rejected():
    with pytest.raises(SpaceFileError) as err:
        parse_document('{"space": {"kind": "profinite"}}')
    assert "profinite" in str(err.value)


def test_cycle_surfaces_as_parse_error():
    with pytest.raises(SpaceFileError) as err:
        parse_document(
            '{"space": {"kind": "finite", "elements": ["a","b"], '
            '"leq": [["a","b"],["b","a"]]}}'
        )
    assert "cycle" in str(err.value)


def test_subset_against_dual_space_uses_leaf_record():
    text = """
    {
      "space": {"kind": "dual", "space": {"kind": "generic_over_antichain"}},
      "subsets": {
        "s": {"closed": {"mode": "cofinite", "indices": [0]}, "generic": true}
      }
    }
    """
    doc = parse_document(text)
    assert normalize(doc.space) == Dual(GOA)
    assert doc.subsets["s"].node == GoaSet(True, frozenset({0}), True)
    assert doc.subsets["s"].space == Dual(GOA)


def test_subset_shape_must_match_space():
    with pytest.raises(SpaceFileError):
        parse_document(
            '{"space": {"kind": "generic_over_antichain"},'
            ' "subsets": {"s": {"members": ["a"]}}}'
        )
    with pytest.raises(SpaceFileError):
        parse_document(
            '{"space": {"kind": "finite", "elements": ["a"], "leq": []},'
            ' "subsets": {"s": {"members": ["z"]}}}'
        )


def test_subset_sum_arity_checked():
    text = json.dumps(
        {
            "space": {
                "kind": "sum",
                "summands": [
                    {"kind": "generic_over_antichain"},
                    {"kind": "generic_over_antichain"},
                ],
            },
            "subsets": {
                "s": {
                    "summands": [
                        {"closed": {"mode": "finite", "indices": []}, "generic": True}
                    ]
                }
            },
        }
    )
    with pytest.raises(SpaceFileError) as err:
        parse_document(text)
    assert "summands" in str(err.value)


def test_bad_mode_rejected():
    with pytest.raises(SpaceFileError):
        parse_document(
            '{"space": {"kind": "generic_over_antichain"},'
            ' "subsets": {"s": {"closed": {"mode": "open", "indices": []}, "generic": false}}}'
        )
