"""
Weyl group cache
Keeps enumerated Weyl groups keyed by (algebra, cap) for reuse across pairs
"""

import time
import logging
from dataclasses import dataclass, field
from threading import Lock
from typing import Any, Dict, Optional, Tuple

from src.algebra.root_system import CompactAlgebra
from src.algebra.weyl_group import WeylGroup, weyl_group_for_algebra

logger = logging.getLogger(__name__)


@dataclass
class CacheEntry:
    """An enumerated group and its access bookkeeping"""
    group: WeylGroup
    hits: int = 0
    last_access: float = field(default_factory=time.time)
    created_at: float = field(default_factory=time.time)

    def touch(self):
        self.hits += 1
        self.last_access = time.time()


class WeylGroupCache:
    """
    Caches enumerated Weyl groups
    Thread-safe implementation for concurrent catalog workers
    """

    def __init__(self, max_entries: int = 16):
        """
        Initialize the cache

        Args:
            max_entries: Maximum number of groups kept in memory
        """
        self.entries: Dict[Tuple[CompactAlgebra, int], CacheEntry] = {}
        self.max_entries = max_entries
        self._lock = Lock()
        self.misses = 0

        logger.debug(f"Weyl group cache initialized with {max_entries} entries")

    def get(self, algebra: CompactAlgebra, cap: int) -> WeylGroup:
        """
        Return W(algebra), enumerating it on a miss

        Enumeration runs outside the lock; if two workers miss on the same
        key, the first insert wins.

        Raises:
            CapExceeded: if the group is larger than cap
        """
        key = (algebra, cap)
        with self._lock:
            entry = self.entries.get(key)
            if entry:
                entry.touch()
                return entry.group
            self.misses += 1

        group = weyl_group_for_algebra(algebra, cap)

        with self._lock:
            entry = self.entries.get(key)
            if entry:
                entry.touch()
                return entry.group
            if len(self.entries) >= self.max_entries:
                self._evict_oldest()
            self.entries[key] = CacheEntry(group=group)
            logger.info(f"Cached W({algebra}) with {group.order} elements")
            return group

    def peek(self, algebra: CompactAlgebra, cap: int) -> Optional[WeylGroup]:
        with self._lock:
            entry = self.entries.get((algebra, cap))
            return entry.group if entry else None

    def _evict_oldest(self):
        """Remove least recently used entries when hitting max limit"""
        ordered = sorted(self.entries.items(), key=lambda x: x[1].last_access)
        to_remove = max(1, len(ordered) // 10)
        for key, _ in ordered[:to_remove]:
            del self.entries[key]
        logger.debug(f"Evicted {to_remove} Weyl groups from cache")

    def stats(self) -> Dict[str, Any]:
        with self._lock:
            return {
                'entries': len(self.entries),
                'misses': self.misses,
                'hits': sum(e.hits for e in self.entries.values()),
                'elements': sum(e.group.order for e in self.entries.values()),
            }

    def clear(self):
        with self._lock:
            count = len(self.entries)
            self.entries.clear()
            logger.debug(f"Cleared {count} cached groups")
