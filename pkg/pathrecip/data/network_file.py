"""JSON codec for network files and path matrices."""
import json
import logging
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from pathrecip.core.errors import NetworkFileError
from pathrecip.core.exact import ExactMatrix, format_rational, parse_rational
from pathrecip.data.network import Edge, PlanarNetwork
from pathrecip.models.schemas import EdgeDocument, MatrixDocument, NetworkDocument

logger = logging.getLogger(__name__)


def parse_network_file(text: str, name: Optional[str] = None, require_valid: bool = True) -> PlanarNetwork:
    """Parse and validate a network document; errors carry line or field context."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise NetworkFileError(f"malformed JSON: {e.msg}", f"line {e.lineno}, column {e.colno}")
    try:
        document = NetworkDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise NetworkFileError(first["msg"], location)
    return network_from_document(document, name, require_valid)


def load_network_file(path: Union[str, Path], require_valid: bool = True) -> PlanarNetwork:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise NetworkFileError(f"cannot read file: {e.strerror}", str(path))
    logger.info(f"Loading network from {path}")
    return parse_network_file(text, name=path.stem, require_valid=require_valid)


def network_from_document(
    document: NetworkDocument, name: Optional[str] = None, require_valid: bool = True
) -> PlanarNetwork:
    edges = []
    for index, edge in enumerate(document.edges):
        try:
            weight = parse_rational(edge.weight)
        except (ValueError, ZeroDivisionError) as e:
            raise NetworkFileError(str(e), f"edges.{index}.weight")
        edges.append(Edge(edge.from_, edge.to, weight))
    net = PlanarNetwork(
        tuple(document.vertices),
        tuple(edges),
        tuple(document.sources),
        tuple(document.sinks),
        name=document.name or name,
    )
    if require_valid:
        net.require_valid()
    return net


def network_to_document(net: PlanarNetwork) -> NetworkDocument:
    return NetworkDocument(
        name=net.name,
        vertices=list(net.vertices),
        edges=[EdgeDocument(from_=e.tail, to=e.head, weight=format_rational(e.weight)) for e in net.edges],
        sources=list(net.sources),
        sinks=list(net.sinks),
    )


def matrix_to_document(matrix: ExactMatrix) -> MatrixDocument:
    return MatrixDocument(rows=matrix.rows, cols=matrix.cols, entries=matrix.to_rows())


def matrix_from_document(document: MatrixDocument) -> ExactMatrix:
    if not document.entries:
        return ExactMatrix.zeros(document.rows, document.cols)
    return ExactMatrix.from_rows(document.entries)
