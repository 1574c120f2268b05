"""Acceptance gate: the eight end-to-end verification criteria.

Each test drives one check from the built-in verification suite and
prints a single PASS/FAIL line with the check's summary."""

import pytest

from operslope import selftest

CRITERIA = [
    ("example-slopes", selftest.example_slopes),
    ("slope-agreement", selftest.slope_agreement),
    ("slope-denominators", selftest.slope_denominators),
    ("order-stability", selftest.order_stability),
    ("canonical-uniqueness", selftest.canonical_uniqueness),
    ("filtration-anchors", selftest.filtration_anchors),
    ("annihilation-bounds", selftest.annihilation_bounds),
    ("centrality-detector", selftest.centrality_detector),
]


@pytest.mark.parametrize("label,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(label, check, capsys):
    name, ok, detail = check(seed=0)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert name == label
    assert ok, detail
