"""Backend parity: the compiled kernels must match the pure fallback exactly."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepdual._kernels import _pure

_fast = pytest.importorskip("sepdual._kernels._fast",
                            reason="compiled kernel extension not built")


@st.composite
def kernel_case(draw):
    n = draw(st.integers(min_value=0, max_value=10))
    full = (1 << n) - 1
    masks = draw(st.lists(st.integers(min_value=0, max_value=full), max_size=8))
    a = draw(st.integers(min_value=0, max_value=full))
    b = (full ^ a) | draw(st.integers(min_value=0, max_value=full))
    return masks, a, b


@settings(max_examples=300, deadline=None)
@given(kernel_case())
def test_order2_parity(case):
    masks, a, b = case
    assert _pure.order2(masks, a, b) == _fast.order2(masks, a, b)


@settings(max_examples=300, deadline=None)
@given(kernel_case(), st.booleans())
def test_shift2_parity(case, ties):
    masks, a, b = case
    assert (_pure.shift2(masks, a, b, ties)
            == _fast.shift2(masks, a, b, ties))


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("partitions", (False, True))
def test_scan_parity(n, partitions):
    rng = random.Random(n)
    full = (1 << n) - 1
    masks = [rng.randint(0, full) for _ in range(n)]
    assert (_pure.scan_members(masks, n, partitions)
            == _fast.scan_members(masks, n, partitions))


def test_scan_sorted_and_complete():
    masks = [0b011, 0b110, 0b101]
    got = _pure.scan_members(masks, 3)
    assert got == sorted(got)
    assert len(got) == (3**3 - 1) // 2
    parts = _pure.scan_members(masks, 3, True)
    assert len(parts) == 2**3 // 2


def test_wide_mask_fallback():
    # masks beyond one machine word route through the pure implementation
    masks = [1 << 70, (1 << 80) - 1]
    a = (1 << 90) - 1
    b = 1 << 89
    full_b = ((1 << 90) - 1) ^ a | b
    assert _fast.order2(masks, a, full_b) == _pure.order2(masks, a, full_b)
    assert _fast.shift2(masks, a, full_b) == _pure.shift2(masks, a, full_b)


def test_order2_empty_masks():
    assert _pure.order2([], 5, 3) == 0
    assert _fast.order2([], 5, 3) == 0
