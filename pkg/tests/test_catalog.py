from pathlib import Path

import pytest

from lietor.catalog import (
    catalog_build,
    catalog_entry,
    catalog_list,
    derive_fact,
    parse_param,
    r2n2,
)
from lietor.errors import InputError
from lietor.extension import SolvableExtension
from lietor.io import parse_algebra
from lietor.lie import algebras_equal, jacobi_violations

DATA = Path(__file__).parent / "data"

FAMILY_PARAMS = {
    "abelian": [{"n": 1}, {"n": 4}],
    "q2n": [{"n": 3}, {"n": 4}, {"n": 5}],
    "r_q2n": [{"n": 3}, {"n": 4}],
    "r2n2": [{"n": 3}, {"n": 4}],
    "nbar": [{"n": 5}, {"n": 7}],
    "r_nbar": [{"n": 5}, {"n": 6}],
    "nbar_ext_h": [{"n": 6}],
    "nn1": [{"n": 4}, {"n": 6}],
    "r_nn1": [{"n": 4}, {"n": 6}],
    "s_n2": [{"n": 4}, {"n": 6}],
    "ancochea_family": [{"k": 2, "sizes": (3, 2)}, {"k": 3, "sizes": (2, 2, 3)}],
    "ancochea_ext": [{"k": 2, "sizes": (3, 2)}, {"k": 3, "sizes": (2, 2, 3)}],
    "gorbatsevich_r": [{"variant": 1}, {"variant": 2}],
}


def instances():
    for name in catalog_list():
        for params in FAMILY_PARAMS.get(name, [{}]):
            yield pytest.param(name, params, id=f"{name}-{params}" if params else name)


def algebra(obj):
    return obj.algebra if isinstance(obj, SolvableExtension) else obj


@pytest.mark.parametrize("name, params", list(instances()))
def test_entry_is_lie_algebra(name, params):
    assert jacobi_violations(algebra(catalog_build(name, **params))) == []


def fact_cases():
    for name in catalog_list():
        entry = catalog_entry(name)
        for params in FAMILY_PARAMS.get(name, [{}]):
            values = {**entry.defaults(), **params}
            for key, expected in entry.expected_for(values).items():
                yield pytest.param(name, params, key, expected, id=f"{name}-{params}-{key}")


@pytest.mark.parametrize("name, params, key, expected", list(fact_cases()))
def test_expected_facts(name, params, key, expected):
    obj = catalog_build(name, **params)
    assert derive_fact(key, obj, expected) == expected


def test_family_matches_literal_q6():
    literal = parse_algebra((DATA / "q6_literal.json").read_text()).to_algebra()
    assert algebras_equal(catalog_build("q2n", n=3), literal)


def test_printed_r2n2_range_breaks_jacobi():
    assert jacobi_violations(r2n2(3, printed=True))


def test_parameter_validation():
    with pytest.raises(InputError):
        catalog_build("q2n", n=2)
    with pytest.raises(InputError):
        catalog_build("no_such_algebra")
    with pytest.raises(InputError):
        catalog_build("heisenberg3", n=3)
    with pytest.raises(InputError):
        catalog_build("gorbatsevich_r", variant=3)
    entry = catalog_entry("ancochea_family")
    assert parse_param(entry, "sizes", "3,2,2") == (3, 2, 2)
    with pytest.raises(InputError):
        parse_param(catalog_entry("q2n"), "n", "three")


def test_catalog_list_sorted_and_complete():
    names = catalog_list()
    assert names == sorted(names)
    for required in ("heisenberg3", "solvable_r_h1", "gorbatsevich_n7", "gorbatsevich_r",
                     "example34", "q2n", "r2n2", "nbar", "nn1", "s_n2", "abelian", "s412",
                     "g4", "s6242", "ancochea_family", "example75", "borel_sl2", "borel_sl3",
                     "g5_36", "g5_37"):
        assert required in names
