"""Graph ingestion (graph6, edge lists, family descriptors) and JSON report (de)serialization."""

from __future__ import annotations

import json
import re
from dataclasses import asdict
from pathlib import Path
from typing import Any

from .errors import InvalidFamilyParams, InvalidVertex, LoopRejected, ParseError
from .graph import Graph, build_from_edges, generate

SCHEMA_VERSION = 1
G6_HEADER = ">>graph6<<"

# --- graph6 -------------------------------------------------------------------


def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode N(n); returns (n, bytes consumed)."""
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte size field", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated 4-byte size field", offset=len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be ASCII", offset=0) from None
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside 63..126", offset=i)
    n, start = _g6_size(data)
    if n < 1:
        raise ParseError("graph6 order must be at least 1", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise ParseError(f"truncated: expected {nbytes} data bytes, got {len(body)}", offset=len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 payload", offset=start + nbytes)
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=len(data) - 1)
    bits >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return build_from_edges(n, edges)


def emit_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError("order too large for graph6")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(G.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i : i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (head + body).decode("ascii")


def read_graph6_corpus(text: str) -> list[Graph]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(f"corpus line {lineno}: {exc}", line=lineno) from exc
    return out


# --- edge lists -----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """First token is n, then one ``u v`` pair per line; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        try:
            nums = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", line=lineno) from None
        if n is None:
            n = nums[0]
            nums = nums[1:]
            if n < 1:
                raise ParseError("vertex count must be positive", line=lineno)
            if not nums:
                continue
        if len(nums) != 2:
            raise ParseError(f"expected a pair 'u v', got {raw.strip()!r}", line=lineno)
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range [0, {n})", line=lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count", line=1)
    return build_from_edges(n, edges)


def emit_edge_list(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()]) + "\n"


# --- family descriptors -----------------------------------------------------------

DESCRIPTORS = {
    "K": "complete",
    "P": "path",
    "C": "cycle",
    "Kst": "complete_bipartite",
    "Star": "star",
    "W": "wheel",
    "Broom": "broom",
}
_DESC_RE = re.compile(r"^(?P<fam>[A-Za-z]+):(?P<args>\d+(?:,\d+)*)$")


def parse_family(desc: str) -> Graph | None:
    """``"K:5"``, ``"Kst:3,3"`` etc.; returns None when ``desc`` is not a descriptor."""
    m = _DESC_RE.match(desc.strip())
    if not m or m["fam"] not in DESCRIPTORS:
        return None
    return generate(DESCRIPTORS[m["fam"]], *map(int, m["args"].split(",")))


def load_graph(spec: str) -> Graph:
    """Resolve a family descriptor, a graph6/edge-list file, or an inline graph6 string."""
    try:
        g = parse_family(spec)
    except (InvalidFamilyParams, InvalidVertex, LoopRejected) as exc:
        raise ParseError(f"bad family descriptor {spec!r}: {exc}") from exc
    if g is not None:
        return g
    p = Path(spec)
    if p.is_file():
        text = p.read_text()
        first = next((ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        if p.suffix == ".g6" or not first.split()[0].lstrip("-").isdigit():
            return parse_graph6(first)
        return parse_edge_list(text)
    return parse_graph6(spec)


# --- JSON reports -------------------------------------------------------------------


def _jsonable(obj: Any) -> Any:
    from .labelings import RomanLabeling, VertexSet

    if isinstance(obj, VertexSet):
        return obj.to_list()
    if isinstance(obj, RomanLabeling):
        return list(obj.labels)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def bounds_report_to_dict(r) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "direct-bounds",
        "instance": _jsonable(r.instance),
        "results": [asdict(e) for e in r.entries],
        "exact": r.exact,
        "consistency": {"all_consistent": r.all_consistent, "violations": list(r.violations)},
    }


def bounds_report_from_dict(d: dict[str, Any]):
    from .analysis import BoundEntry, BoundsReport

    _check_schema(d, "direct-bounds")
    return BoundsReport(
        d["instance"],
        tuple(BoundEntry(**e) for e in d["results"]),
        d["exact"],
        d["consistency"]["all_consistent"],
        tuple(d["consistency"]["violations"]),
    )


def classification_to_dict(c, instance: dict[str, Any], sandwich=None) -> dict[str, Any]:
    result = {"case": c.case, "value": c.value, "certificates": dict(c.certificates), "fallback": c.fallback}
    consistency: dict[str, Any] = {"all_consistent": True, "violations": []}
    if sandwich is not None:
        result["sandwich"] = {
            "lower": sandwich.lower,
            "upper": sandwich.upper,
            "exact": sandwich.exact,
            "in_bracket": sandwich.in_bracket,
            "in_trichotomy": sandwich.in_trichotomy,
            "prediction_matches": sandwich.prediction_matches,
        }
        if not sandwich.ok:
            consistency = {"all_consistent": False, "violations": ["rooted sandwich/trichotomy check failed"]}
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "rooted-classify",
        "instance": instance,
        "results": [result],
        "consistency": consistency,
    }


def classification_from_dict(d: dict[str, Any]):
    from .analysis import RootedClassification

    _check_schema(d, "rooted-classify")
    r = d["results"][0]
    return RootedClassification(r["case"], r["value"], r["certificates"], r["fallback"])


def invariants_to_dict(results: dict[str, Any], instance: dict[str, Any]) -> dict[str, Any]:
    rows = []
    for name, r in results.items():
        if isinstance(r, str):
            rows.append({"invariant": name, "value": None, "note": r})
        else:
            rows.append(
                {
                    "invariant": r.invariant,
                    "value": r.value,
                    "witness": _jsonable(r.witness),
                    "nodes_explored": r.nodes_explored,
                    "method": r.method,
                    "certificate": _jsonable(r.certificate),
                }
            )
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "invariants",
        "instance": instance,
        "results": rows,
        "consistency": {"all_consistent": True, "violations": []},
    }


def _check_schema(d: dict[str, Any], kind: str) -> None:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {d.get('schema_version')!r}")
    if d.get("kind") != kind:
        raise ParseError(f"expected a {kind} report, got {d.get('kind')!r}")


def dumps(d: dict[str, Any]) -> str:
    return json.dumps(d, indent=2, sort_keys=False)
