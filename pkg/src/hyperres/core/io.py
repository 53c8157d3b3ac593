"""Reading and writing the family file format.

Text form: first line ``k n``; every later non-empty line holds ``k``
1-based vertices; ``#`` starts a comment. JSON form:
``{"k": int, "n": int, "edges": [[int, ...], ...]}``.
"""

from __future__ import annotations

import json

from .family import MAX_N, FamilyError, KFamily, mask_of, vertices_of


class FamilyParseError(FamilyError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class HeaderError(FamilyParseError):
    pass


class ArityError(FamilyParseError):
    pass


class VertexRangeError(FamilyParseError):
    pass


class DuplicateEdgeError(FamilyParseError):
    pass


def parse_family(data: str | bytes) -> KFamily:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if data.lstrip().startswith("{"):
        return _parse_json(data)
    return _parse_text(data)


def _check_header(k, n, line) -> None:
    if not isinstance(k, int) or not isinstance(n, int) or isinstance(k, bool) or isinstance(n, bool):
        raise HeaderError("k and n must be integers", line)
    if not 1 <= n <= MAX_N:
        raise HeaderError(f"n={n} outside 1..{MAX_N}", line)
    if not 1 <= k <= n:
        raise HeaderError(f"k={k} outside 1..n", line)


def _edge_mask(vertices: list[int], k: int, n: int, line: int | None) -> int:
    if len(vertices) != k or len(set(vertices)) != k:
        raise ArityError(f"expected {k} distinct vertices, got {vertices}", line)
    for v in vertices:
        if not 1 <= v <= n:
            raise VertexRangeError(f"vertex {v} outside 1..{n}", line)
    return mask_of(vertices)


def _parse_text(text: str) -> KFamily:
    header = None
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            nums = [int(tok) for tok in body.split()]
        except ValueError:
            cls = HeaderError if header is None else ArityError
            raise cls(f"non-integer token in {body!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise HeaderError("header must be 'k n'", lineno)
            _check_header(nums[0], nums[1], lineno)
            header = (nums[0], nums[1])
            continue
        k, n = header
        m = _edge_mask(nums, k, n, lineno)
        if m in seen:
            raise DuplicateEdgeError(f"duplicate edge {vertices_of(m)}", lineno)
        seen.add(m)
        masks.append(m)
    if header is None:
        raise HeaderError("missing 'k n' header")
    return KFamily(header[0], header[1], tuple(masks))


def _parse_json(text: str) -> KFamily:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HeaderError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or "k" not in obj or "n" not in obj:
        raise HeaderError("JSON family needs 'k' and 'n' keys")
    k, n = obj["k"], obj["n"]
    _check_header(k, n, None)
    seen: set[int] = set()
    masks = []
    for idx, edge in enumerate(obj.get("edges", [])):
        if not isinstance(edge, list) or not all(isinstance(v, int) for v in edge):
            raise ArityError(f"edge #{idx} is not a list of integers")
        m = _edge_mask(edge, k, n, None)
        if m in seen:
            raise DuplicateEdgeError(f"duplicate edge {vertices_of(m)} (edge #{idx})")
        seen.add(m)
        masks.append(m)
    return KFamily(k, n, tuple(masks))


def format_family(F: KFamily, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{F.k} {F.n}")
    lines.extend(" ".join(map(str, e)) for e in F.edge_lists())
    return "\n".join(lines) + "\n"


def family_to_json(F: KFamily) -> dict:
    return {"k": F.k, "n": F.n, "edges": F.edge_lists()}


def read_family(path) -> KFamily:
    with open(path, "rb") as fh:
        return parse_family(fh.read())


def write_family(F: KFamily, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_family(F, comment))
