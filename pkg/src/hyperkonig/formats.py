"""Instance text format and certificate JSON.

Instance format, one item per line, ``#`` starts a comment::

    hg 3          # header: vertex count
    e 0 1         # an edge, 0-based vertex ids
    e 1 2
    label 0 a     # optional vertex label

Edge indices in certificates refer to the canonical edge order, i.e. the
order :func:`emit_instance` writes.
"""

from __future__ import annotations

import json
from typing import Any

from .core import (
    Bipartition,
    CoverSolution,
    ExactTransversal,
    Hypergraph,
    HypergraphError,
    KonigCertificate,
    Matching,
    Verdict,
    verify_bipartition,
    verify_cover_solution,
    verify_exact_transversal,
    verify_konig_certificate,
    verify_matching,
)
from .solvers import DEFAULT_BUDGET, covering_number, max_matching


class InstanceFormatError(ValueError):
    pass


def parse_instance(text: str) -> Hypergraph:
    n = None
    edges: list[tuple[int, ...]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if n is None:
            if head != "hg" or len(rest) != 1 or not rest[0].isdigit():
                raise InstanceFormatError(f"malformed header at line {lineno}: expected 'hg <n>'")
            n = int(rest[0])
            continue
        if head == "e":
            if not rest:
                raise InstanceFormatError(f"empty edge at line {lineno}")
            try:
                edge = tuple(int(tok) for tok in rest)
            except ValueError:
                raise InstanceFormatError(f"non-integer vertex id at line {lineno}") from None
            for v in edge:
                if not 0 <= v < n:
                    raise InstanceFormatError(f"vertex {v} out of range at line {lineno}")
            edges.append(edge)
        elif head == "label":
            if len(rest) < 2 or not rest[0].isdigit() or int(rest[0]) >= n:
                raise InstanceFormatError(f"malformed label at line {lineno}")
            labels[int(rest[0])] = " ".join(rest[1:])
        elif head == "hg":
            raise InstanceFormatError(f"duplicate header at line {lineno}")
        else:
            raise InstanceFormatError(f"unknown record {head!r} at line {lineno}")
    if n is None:
        raise InstanceFormatError("missing 'hg <n>' header")
    label_list = None
    if labels:
        label_list = [labels.get(v, str(v)) for v in range(n)]
    try:
        return Hypergraph(n, tuple(edges), label_list)
    except HypergraphError as exc:
        raise InstanceFormatError(str(exc)) from None


def emit_instance(H: Hypergraph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"hg {H.vertex_count}")
    lines.extend("e " + " ".join(map(str, e)) for e in H.edges)
    if H.labels is not None:
        lines.extend(f"label {v} {s}" for v, s in enumerate(H.labels))
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


# ---------------------------------------------------------------- certificates

KINDS = ("konig", "weak_konig", "bipartition", "exact_transversal", "matching", "cover")


def _header(H: Hypergraph, kind: str) -> dict[str, Any]:
    return {"kind": kind, "vertex_count": H.vertex_count, "edge_count": H.edge_count}


def konig_to_json(H: Hypergraph, cert: KonigCertificate) -> dict[str, Any]:
    return {**_header(H, "konig"), "matching": list(cert.matching.indices), "cover": list(cert.cover)}


def weak_konig_to_json(H: Hypergraph, matching: Matching, cover: CoverSolution) -> dict[str, Any]:
    return {
        **_header(H, "weak_konig"),
        "matching": list(matching.indices),
        "cover": list(cover.cover),
        "nu": cover.nu,
    }


def bipartition_to_json(H: Hypergraph, b: Bipartition) -> dict[str, Any]:
    return {**_header(H, "bipartition"), "side": list(b.side)}


def transversal_to_json(H: Hypergraph, t: ExactTransversal) -> dict[str, Any]:
    return {**_header(H, "exact_transversal"), "choice": list(t.choice)}


def matching_to_json(H: Hypergraph, matching: Matching) -> dict[str, Any]:
    return {**_header(H, "matching"), "matching": list(matching.indices), "size": len(matching)}


def cover_to_json(H: Hypergraph, cover: CoverSolution) -> dict[str, Any]:
    return {**_header(H, "cover"), "cover": list(cover.cover), "nu": cover.nu}


def dumps(obj: Any) -> str:
    """Stable JSON text ending in exactly one newline."""
    return json.dumps(obj, sort_keys=True) + "\n"


def _int_list(doc: dict, key: str) -> list[int]:
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise InstanceFormatError(f"certificate field {key!r} must be an array of integers")
    return value


def verify_certificate(H: Hypergraph, doc: dict, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Check a certificate document against ``H``.

    König, weak-König, bipartition and transversal certificates are checked
    from the witness alone (a weak-König certificate is a matching and a
    cover of equal size, which proves both optimal).  ``matching`` and
    ``cover`` certificates also have their claimed optimum re-solved.
    Malformed documents raise :class:`InstanceFormatError`.
    """
    if not isinstance(doc, dict):
        raise InstanceFormatError("certificate must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise InstanceFormatError(f"unknown certificate kind {kind!r}")
    if doc.get("vertex_count") != H.vertex_count or doc.get("edge_count") != H.edge_count:
        return Verdict(False, "instance_mismatch")

    def distinct(values: list[int]) -> bool:
        return len(set(values)) == len(values)

    if kind == "konig":
        matching, cover = _int_list(doc, "matching"), _int_list(doc, "cover")
        if not distinct(matching) or not distinct(cover):
            return Verdict(False, "duplicate_entry")
        return verify_konig_certificate(H, KonigCertificate(Matching(tuple(matching)), tuple(cover)))
    if kind == "weak_konig":
        matching, cover = _int_list(doc, "matching"), _int_list(doc, "cover")
        if not distinct(matching) or not distinct(cover):
            return Verdict(False, "duplicate_entry")
        v = verify_matching(H, matching)
        if not v:
            return v
        v = verify_cover_solution(H, CoverSolution(tuple(cover), doc.get("nu")))
        if not v:
            return v
        if len(matching) != len(cover):
            return Verdict(False, "matching_smaller_than_cover")
        return Verdict(True)
    if kind == "bipartition":
        side = _int_list(doc, "side")
        if not distinct(side):
            return Verdict(False, "duplicate_entry")
        return verify_bipartition(H, side)
    if kind == "exact_transversal":
        choice = _int_list(doc, "choice")
        if not distinct(choice):
            return Verdict(False, "duplicate_entry")
        return verify_exact_transversal(H, choice)
    if kind == "matching":
        matching = _int_list(doc, "matching")
        v = verify_matching(H, matching)
        if not v:
            return v
        if doc.get("size") != len(matching):
            return Verdict(False, "size_mismatch")
        if max_matching(H, budget)[0] != len(matching):
            return Verdict(False, "not_maximum")
        return Verdict(True)
    cover = _int_list(doc, "cover")
    if not distinct(cover):
        return Verdict(False, "duplicate_entry")
    v = verify_cover_solution(H, CoverSolution(tuple(cover), doc.get("nu")))
    if not v:
        return v
    if covering_number(H, budget)[0].nu != len(cover):
        return Verdict(False, "not_minimum")
    return Verdict(True)
