from src.algebra.root_system import CompactAlgebra
from src.cache.weyl_cache import WeylGroupCache

import pytest

from src.utils.errors import CapExceeded


def test_second_lookup_is_a_hit():
    cache = WeylGroupCache()
    a2 = CompactAlgebra.parse("A2")
    first = cache.get(a2, 1000)
    assert cache.get(a2, 1000) is first
    stats = cache.stats()
    assert stats['misses'] == 1
    assert stats['hits'] == 1
    assert stats['elements'] == 6


def test_cap_is_part_of_the_key():
    cache = WeylGroupCache()
    a1 = CompactAlgebra.parse("A1")
    cache.get(a1, 10)
    assert cache.peek(a1, 10) is not None
    assert cache.peek(a1, 20) is None


def test_cap_exceeded_is_not_cached():
    cache = WeylGroupCache()
    with pytest.raises(CapExceeded):
        cache.get(CompactAlgebra.parse("B3"), 10)
    assert cache.stats()['entries'] == 0


def test_eviction_keeps_size_bounded():
    cache = WeylGroupCache(max_entries=2)
    for label in ("A1", "A2", "B2"):
        cache.get(CompactAlgebra.parse(label), 1000)
    assert cache.stats()['entries'] == 2
    assert cache.peek(CompactAlgebra.parse("A1"), 1000) is None


def test_clear():
    cache = WeylGroupCache()
    cache.get(CompactAlgebra.parse("T1+A1"), 1000)
    cache.clear()
    assert cache.stats()['entries'] == 0
