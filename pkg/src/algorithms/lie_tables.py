"""
Classical tables for simple Lie algebras
Rank bounds, primitive degrees, Dynkin edges and the diagram-fold table
"""

# Minimum and maximum rank per family (None = unbounded)
RANK_BOUNDS = {
    'A': (1, None),
    'B': (2, None),
    'C': (2, None),
    'D': (3, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}

# Primitive degrees g_j (odd). Each table entry must satisfy
# prod((g + 1) / 2) == |W| and sum((g - 1) / 2) == number of positive roots.
EXCEPTIONAL_DEGREES = {
    ('G', 2): (3, 11),
    ('F', 4): (3, 11, 15, 23),
    ('E', 6): (3, 9, 11, 15, 17, 23),
    ('E', 7): (3, 11, 15, 19, 23, 27, 35),
    ('E', 8): (3, 15, 23, 27, 35, 39, 47, 59),
}


def classical_degrees(family: str, rank: int) -> tuple:
    """Primitive degrees of the classical families"""
    if family == 'A':
        return tuple(2 * k + 1 for k in range(1, rank + 1))
    if family in ('B', 'C'):
        return tuple(4 * k - 1 for k in range(1, rank + 1))
    if family == 'D':
        return tuple(sorted([4 * k - 1 for k in range(1, rank)] + [2 * rank - 1]))
    raise KeyError(family)


# Bourbaki numbering of the E-series diagram (0-based): 1-3-4-5-6-7-8 with 2 on 4
E_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))

# Names accepted wherever a diagram automorphism is expected; the image
# lists are built per type in pairs.constructions.
NAMED_AUTOMORPHISMS = ('identity', 'flip', 'triality')

# Folded type of the fixed subalgebra, keyed by (family, automorphism order).
# A-series entries depend on rank parity; see constructions.folded_type.
FOLD_TABLE = {
    ('A', 2, 'even'): 'B',   # A_2n   -> B_n  (B_1 reported as A_1)
    ('A', 2, 'odd'): 'C',    # A_2n-1 -> C_n
    ('D', 2, None): 'B',     # D_n    -> B_n-1
    ('D', 3, None): 'G',     # D_4 triality -> G_2
    ('E', 2, None): 'F',     # E_6    -> F_4
}
