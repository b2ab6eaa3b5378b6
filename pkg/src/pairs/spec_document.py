"""
Pair-spec documents
JSON schema for pair recipes, validated with pydantic and converted to
constructions specs
"""

import json
import logging
from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import (
    AfterValidator, BaseModel, ConfigDict, Field, StrictInt, StrictStr, TypeAdapter, ValidationError
)

from src.algebra.root_system import CompactAlgebra, SimpleType
from src.pairs.constructions import (
    CircleSpec, FoldSpec, PairSpec, ProductBlock, ProductSpec, RegularSpec
)
from src.utils.errors import IsoformError, SpecDocumentError

logger = logging.getLogger(__name__)


def _check_rational(value: Union[int, str]) -> Union[int, str]:
    if isinstance(value, str):
        try:
            Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"'{value}' is not an exact rational such as '3/2'")
        if any(c in value for c in ".eE"):
            raise ValueError(f"'{value}' must be written as an integer or 'p/q'")
    return value


Rational = Annotated[Union[StrictInt, StrictStr], AfterValidator(_check_rational)]
AutomorphismField = Union[StrictStr, List[StrictInt]]


class _Strict(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)


class AlgebraDocument(_Strict):
    """Compact algebra written out as center plus factor labels"""
    center_dim: StrictInt = Field(0, ge=0)
    factors: List[StrictStr] = Field(default_factory=list)

    def to_algebra(self) -> CompactAlgebra:
        return CompactAlgebra(self.center_dim, tuple(SimpleType.parse(f) for f in self.factors))


AlgebraField = Union[StrictStr, AlgebraDocument]


def _algebra(value: AlgebraField) -> CompactAlgebra:
    if isinstance(value, AlgebraDocument):
        return value.to_algebra()
    return CompactAlgebra.parse(value)


def _automorphism(value: AutomorphismField) -> Union[str, Tuple[int, ...]]:
    return value if isinstance(value, str) else tuple(value)


class FoldDocument(_Strict):
    construction: Literal['fold']
    label: Optional[StrictStr] = None
    g_type: StrictStr
    diagram_automorphism: AutomorphismField = 'identity'

    def to_spec(self) -> FoldSpec:
        return FoldSpec(SimpleType.parse(self.g_type), _automorphism(self.diagram_automorphism))


class CircleDocument(_Strict):
    construction: Literal['circle']
    label: Optional[StrictStr] = None
    g: AlgebraField
    direction: List[Rational] = Field(min_length=1)
    coordinates: Literal['simple', 'trace_zero'] = 'simple'

    def to_spec(self) -> CircleSpec:
        direction = tuple(Fraction(v.strip()) if isinstance(v, str) else Fraction(v) for v in self.direction)
        return CircleSpec(_algebra(self.g), direction, self.coordinates)


class RegularDocument(_Strict):
    construction: Literal['regular']
    label: Optional[StrictStr] = None
    g: AlgebraField
    sub_roots: List[List[StrictInt]] = Field(default_factory=list)
    extra_center: Optional[StrictInt] = Field(None, ge=0)

    def to_spec(self) -> RegularSpec:
        return RegularSpec(_algebra(self.g), tuple(tuple(r) for r in self.sub_roots), self.extra_center)


class BlockDocument(_Strict):
    factor: StrictStr
    copies: StrictInt = Field(1, ge=1)
    return_automorphism: AutomorphismField = 'identity'


class ProductDocument(_Strict):
    construction: Literal['product']
    label: Optional[StrictStr] = None
    center_dim: StrictInt = Field(0, ge=0)
    blocks: List[BlockDocument] = Field(default_factory=list)

    def to_spec(self) -> ProductSpec:
        return ProductSpec(
            self.center_dim,
            tuple(ProductBlock(SimpleType.parse(b.factor), b.copies, _automorphism(b.return_automorphism))
                  for b in self.blocks),
        )


PairSpecDocument = Annotated[
    Union[FoldDocument, CircleDocument, RegularDocument, ProductDocument],
    Field(discriminator='construction'),
]

_adapter = TypeAdapter(PairSpecDocument)


def _line_column(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _locate(text: str, loc: Sequence[Union[str, int]]) -> Tuple[Optional[int], Optional[int]]:
    """
    Best-effort source position of a validation error path

    Follows the quoted keys of the path through the text in order; list
    indices are skipped.
    """
    offset, found = 0, None
    for key in loc:
        if not isinstance(key, str):
            continue
        hit = text.find(f'"{key}"', offset)
        if hit < 0:
            break
        found = offset = hit
    if found is None:
        return None, None
    return _line_column(text, found)


def load_pair_spec(text: str) -> Tuple[PairSpec, Optional[str]]:
    """
    Parse and validate a pair-spec document

    Args:
        text: UTF-8 JSON document

    Returns:
        Tuple of (recipe, optional label)

    Raises:
        SpecDocumentError: on malformed JSON, schema violations or invalid type labels
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecDocumentError(f"invalid JSON: {e.msg}", e.lineno, e.colno)

    try:
        document = _adapter.validate_python(data)
    except ValidationError as e:
        first = e.errors()[0]
        loc = tuple(p for p in first['loc'] if p not in ('fold', 'circle', 'regular', 'product'))
        where = ".".join(str(p) for p in loc) or "document"
        line, column = _locate(text, loc)
        raise SpecDocumentError(f"{where}: {first['msg']}", line, column)

    try:
        spec = document.to_spec()
    except IsoformError as e:
        raise SpecDocumentError(str(e))
    logger.debug(f"Loaded {document.construction} document {document.label or ''}".rstrip())
    return spec, document.label
