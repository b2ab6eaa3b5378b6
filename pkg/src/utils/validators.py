"""
Input validation for Lie type labels, algebra labels and permutations
Supports: A-G simple types, 'T<n>' central tori, products joined by '+' or 'x'
"""

import re
import logging
from typing import List, Optional, Sequence, Tuple

from src.algorithms.lie_tables import RANK_BOUNDS

logger = logging.getLogger(__name__)


class TypeLabelValidator:
    """Validates simple-type labels such as 'A2', 'd4', 'E6'"""

    TYPE_PATTERN = r'^\s*([A-Ga-g])\s*(\d+)\s*$'
    TORUS_PATTERN = r'^\s*[Tt]\s*(\d+)\s*$'
    SEPARATORS = r'\s*[+x×]\s*'

    EXAMPLE_LABELS = ['A2', 'B3', 'C2', 'D4', 'E6', 'F4', 'G2']

    @classmethod
    def validate_type(cls, label: str) -> Tuple[bool, Optional[Tuple[str, int]], Optional[str]]:
        """
        Validate a simple-type label

        Args:
            label: text such as 'A2' (case-insensitive)

        Returns:
            Tuple of (is_valid, (family, rank), error_message)
        """
        if not label:
            return False, None, "No type label provided"

        match = re.match(cls.TYPE_PATTERN, label)
        if not match:
            return False, None, cls._generate_error_message(label)

        family = match.group(1).upper()
        rank = int(match.group(2))
        error = cls.rank_error(family, rank)
        if error:
            return False, None, error
        return True, (family, rank), None

    @classmethod
    def rank_error(cls, family: str, rank: int) -> Optional[str]:
        """Error text when rank is out of bounds for family, else None"""
        if family not in RANK_BOUNDS:
            return f"Unknown family '{family}'"
        low, high = RANK_BOUNDS[family]
        if rank < low or (high is not None and rank > high):
            bound = f"{low}" if high is None else (f"{low}" if low == high else f"{low}-{high}")
            cmp = "=" if low == high else ("≥" if high is None else "in")
            return f"Type {family}{rank} is out of bounds: rank must be {cmp} {bound}"
        return None

    @classmethod
    def split_algebra(cls, label: str) -> Tuple[bool, Optional[Tuple[int, List[Tuple[str, int]]]], Optional[str]]:
        """
        Validate an algebra label such as 'T1+A2+A1' or 'A1xA1'

        Returns:
            Tuple of (is_valid, (center_dim, [(family, rank), ...]), error_message)
        """
        if not label or not label.strip():
            return False, None, "No algebra label provided"

        center = 0
        factors = []
        for part in re.split(cls.SEPARATORS, label.strip()):
            torus = re.match(cls.TORUS_PATTERN, part)
            if torus:
                center += int(torus.group(1))
                continue
            ok, parsed, error = cls.validate_type(part)
            if not ok:
                return False, None, error
            factors.append(parsed)
        return True, (center, factors), None

    @classmethod
    def _generate_error_message(cls, label: str) -> str:
        return (f"Invalid type label '{label}'. Expected a family letter A-G followed by a rank, "
                f"e.g. {', '.join(cls.EXAMPLE_LABELS)}")


class PermutationValidator:
    """Validates diagram-automorphism candidates given as image lists"""

    @staticmethod
    def normalize(images: Sequence[int], size: int) -> Tuple[bool, Optional[Tuple[int, ...]], Optional[str]]:
        """
        Convert a 1-based image list into a 0-based permutation tuple

        Args:
            images: images[i] is the label node i+1 is sent to
            size: number of diagram nodes

        Returns:
            Tuple of (is_valid, zero_based_permutation, error_message)
        """
        if len(images) != size:
            return False, None, f"Permutation must list {size} images, got {len(images)}"
        if sorted(images) != list(range(1, size + 1)):
            return False, None, f"Images {list(images)} are not a permutation of 1..{size}"
        return True, tuple(i - 1 for i in images), None
