"""
Graph interchange formats: graph6 and a plain edge list.

graph6 strings are validated here so that errors carry a byte offset, then
packed and unpacked by networkx. Input is read as bytes; anything outside
ASCII survives decoding as a surrogate and fails the 63..126 range check.
The edge-list format is a vertex count on the first line followed by one
``u v`` pair per line.
"""

import logging
import sys
from pathlib import Path
from typing import Iterator, List, Optional, TextIO, Tuple

import networkx as nx

from .errors import GraphFormatError, InvalidParameterError
from .graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_EXTENSIONS = {".g6", ".graph6"}
EDGE_LIST_EXTENSIONS = {".txt", ".edges", ".el"}


def _byte_value(ch: str) -> int:
    code = ord(ch)
    return code - 0xDC00 if 0xDC80 <= code <= 0xDCFF else code


def _decode_size(data: str, base: int) -> Tuple[int, int]:
    """Return (n, index of the first adjacency byte) for the size field."""
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphFormatError("truncated size field", offset=base + len(data))
    n = 0
    for ch in data[start : start + width]:
        n = (n << 6) | (ord(ch) - 63)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string.

    Raises:
        GraphFormatError: Malformed header, out-of-range byte or truncated
            bit string, with the byte offset of the problem
    """
    base = 0
    data = text.rstrip("\r\n")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
        base = len(GRAPH6_HEADER)
    elif data.startswith(">>"):
        raise GraphFormatError("malformed header, expected >>graph6<<", offset=0)

    if not data:
        raise GraphFormatError("empty graph6 string", offset=base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(
                f"byte 0x{_byte_value(ch):02x} outside the range 63..126", offset=base + i
            )

    n, pos = _decode_size(data, base)
    if n < 1:
        raise GraphFormatError("graph6 graphs need at least one vertex here", offset=base)

    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    body = data[pos:]
    if len(body) < n_bytes:
        raise GraphFormatError(
            f"truncated bit string: need {n_bytes} bytes, found {len(body)}",
            offset=base + len(data),
        )
    if len(body) > n_bytes:
        raise GraphFormatError("trailing bytes after the bit string", offset=base + pos + n_bytes)

    return Graph.from_networkx(nx.from_graph6_bytes(data.encode("ascii")))


def encode_graph6(g: Graph) -> str:
    """Encode a graph as graph6 without header."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").rstrip("\n")


def parse_edge_list(text: str) -> Graph:
    """
    Decode the edge-list format.

    Blank lines and lines starting with ``#`` are ignored.

    Raises:
        GraphFormatError: Unparsable line, loop, or vertex out of range
    """
    rows = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise GraphFormatError("empty edge list", line=1)

    header_line, header = rows[0]
    try:
        n = int(header)
    except ValueError:
        raise GraphFormatError(f"expected a vertex count, got {header!r}", line=header_line)
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}", line=header_line)

    edges = []
    for number, line in rows[1:]:
        parts = line.split()
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(f"unparsable edge line {line!r}", line=number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge ({u}, {v}) for n={n}", line=number)
        if u == v:
            raise GraphFormatError(f"loop edge at vertex {u}", line=number)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def detect_format(name: str, first_line: Optional[str] = None) -> str:
    """'graph6' or 'edgelist' from a file extension, else by sniffing a line."""
    suffix = Path(name).suffix.lower()
    if suffix in GRAPH6_EXTENSIONS:
        return "graph6"
    if suffix in EDGE_LIST_EXTENSIONS:
        return "edgelist"
    if first_line is not None and first_line.strip().isdigit():
        return "edgelist"
    return "graph6"


def _decode(raw: bytes) -> str:
    return raw.decode("ascii", errors="surrogateescape")


def _read_stdin() -> str:
    buffer = getattr(sys.stdin, "buffer", None)
    return _decode(buffer.read()) if buffer is not None else sys.stdin.read()


def _read_text(text: str, name: str, fmt: str) -> Iterator[Tuple[str, Graph]]:
    if fmt == "auto":
        first = next((line for line in text.splitlines() if line.strip()), None)
        fmt = detect_format(name if name != "-" else "", first)
    logger.debug(f"Reading {name} as {fmt}")

    if fmt == "edgelist":
        yield f"{name}:1", parse_edge_list(text)
        return
    if fmt != "graph6":
        raise InvalidParameterError(f"unknown graph format {fmt!r}")

    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield f"{name}:{number}", parse_graph6(line.strip())
        except GraphFormatError as e:
            raise GraphFormatError(e.reason, offset=e.offset, line=number) from e


def read_graphs(source: str, fmt: str = "auto") -> Iterator[Tuple[str, Graph]]:
    """
    Read graphs from a path or ``-`` for stdin.

    Yields:
        (graph_id, Graph) pairs, graph ids being ``<source>:<line>``
    """
    if source == "-":
        yield from _read_text(_read_stdin(), "-", fmt)
        return
    path = Path(source)
    yield from _read_text(_decode(path.read_bytes()), str(path), fmt)


def write_graph6_stream(graphs: List[Graph], handle: TextIO) -> None:
    for g in graphs:
        handle.write(encode_graph6(g) + "\n")
