"""Deterministic table emitters (CSV and JSON) in canonical partition order."""

from __future__ import annotations

import csv
import io
import json

from .operators import E_closed_matrix, OperatorMatrix, nabla_closed_matrix, taut_restriction
from .partitions import partitions_of
from .product import StructureTable
from .qscalar import rational_text, scalar_text, scalar_to_json

KINDS = ("structure", "structure-q", "operator-E", "operator-nabla", "taut-restrictions")


def _csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=True) + "\n"


def _label(lam) -> str:
    return ",".join(map(str, lam))


def structure_rows(n: int, equivariant: bool = False) -> tuple:
    table = StructureTable(n, equivariant=equivariant)
    header = ["n", "lambda1", "lambda2", "mu", "c"] + (["c_q"] if equivariant else [])
    rows = []
    for l1, l2, mu, c in table.rows():
        row = [str(n), _label(l1), _label(l2), _label(mu), rational_text(c)]
        if equivariant:
            row.append(scalar_text(table.get_q(l1, l2, mu)))
        rows.append(row)
    return header, rows, table


def structure_table_text(n: int, fmt: str, equivariant: bool = False) -> str:
    header, rows, table = structure_rows(n, equivariant)
    if fmt == "csv":
        return _csv([header] + rows)
    entries = []
    for l1, l2, mu, c in table.rows():
        entry = {"lambda1": list(l1), "lambda2": list(l2), "mu": list(mu), "c": rational_text(c)}
        if equivariant:
            entry["c_q"] = scalar_to_json(table.get_q(l1, l2, mu))
        entries.append(entry)
    return _json({"n": n, "order": [list(l) for l in table.order], "entries": entries})


def matrix_text(m: OperatorMatrix, fmt: str) -> str:
    if fmt == "json":
        return _json(m.to_json())
    header = ["row\\col"] + [_label(l) for l in m.order]
    rows = [[_label(l)] + [scalar_text(x) for x in row] for l, row in zip(m.order, m.entries)]
    return _csv([header] + rows)


def taut_text(n: int, k: int, fmt: str) -> str:
    data = [taut_restriction(lam, k) for lam in partitions_of(n)]
    if fmt == "json":
        return _json(
            {
                "n": n,
                "k": k,
                "rows": [
                    {
                        "partition": list(r.partition),
                        "value_qt": scalar_to_json(r.value_qt),
                        "value_q": scalar_to_json(r.value_q),
                    }
                    for r in data
                ],
            }
        )
    rows = [["partition", "value_qt", "value_q"]]
    rows += [[_label(r.partition), scalar_text(r.value_qt), scalar_text(r.value_q)] for r in data]
    return _csv(rows)


def render_table(kind: str, n: int, k: int = 1, fmt: str = "csv") -> str:
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if kind == "structure":
        return structure_table_text(n, fmt)
    if kind == "structure-q":
        return structure_table_text(n, fmt, equivariant=True)
    if kind == "operator-E":
        return matrix_text(E_closed_matrix(n, k), fmt)
    if kind == "operator-nabla":
        return matrix_text(nabla_closed_matrix(n, k), fmt)
    if kind == "taut-restrictions":
        return taut_text(n, k, fmt)
    raise ValueError(f"unknown table {kind!r}; choose from {', '.join(KINDS)}")
