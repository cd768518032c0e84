from __future__ import annotations

import json
from typing import Any, Iterable, Mapping, Protocol

__all__: tuple[str, ...] = (
    "TabularData",
    "Factored",
    "format_factored",
    "order_fields",
    "report_json",
    "render_report",
)


class Factored(Protocol):
    def pairs(self) -> list[tuple[int, int]]: ...

    def __int__(self) -> int: ...


class TabularData:
    def __init__(self):
        self._widths: list[int] = []
        self._columns: list[str] = []
        self._rows: list[list[str]] = []

    def set_columns(self, columns: list[str]):
        self._columns = columns
        self._widths = [len(c) + 2 for c in columns]

    def add_row(self, row: Iterable[Any]) -> None:
        rows = [str(r) for r in row]
        self._rows.append(rows)
        for index, element in enumerate(rows):
            width = len(element) + 2
            if width > self._widths[index]:
                self._widths[index] = width

    def add_rows(self, rows: Iterable[Iterable[Any]]) -> None:
        for row in rows:
            self.add_row(row)

    def render(self) -> str:
        """Renders a table in rST format.

        Example:

        +-----------------+-------+
        | Quantity        | Value |
        +-----------------+-------+
        |     classes     |   120 |
        |      degree     |   120 |
        +-----------------+-------+
        """

        sep = "+".join("-" * w for w in self._widths)
        sep = f"+{sep}+"

        to_draw = [sep]

        def get_entry(d):
            elem = "|".join(f"{e:>{self._widths[i]-1}} " for i, e in enumerate(d))
            return f"|{elem}|"

        to_draw.append(get_entry(self._columns))
        to_draw.append(sep)

        for row in self._rows:
            to_draw.append(get_entry(row))

        to_draw.append(sep)
        return "\n".join(to_draw)

    def render_tsv(self) -> str:
        """Renders the same rows tab separated, header first."""
        lines = ["\t".join(self._columns)]
        lines.extend("\t".join(row) for row in self._rows)
        return "\n".join(lines)


def format_factored(value: Factored) -> str:
    """`2^22 · 3^44 · 5` style rendering; `1` for the empty factorisation."""
    parts = [f"{p}^{e}" if e > 1 else f"{p}" for p, e in value.pairs()]
    return " · ".join(parts) or "1"


def order_fields(value: Factored) -> dict[str, Any]:
    """The two exact renderings every order gets in a report."""
    return {
        "order_factored": [[p, e] for p, e in value.pairs()],
        "order_decimal": str(int(value)),
    }


def report_json(computation: str, params: Mapping[str, Any], results: Mapping[str, Any]) -> str:
    """Serialise a report.

    Keys are sorted and every value is a plain JSON type,
    so parsing the output and dumping it again gives the same bytes.
    """
    payload = {"computation": computation, "params": dict(params), "results": dict(results)}
    return json.dumps(payload, indent=2, sort_keys=True)


def _flatten(prefix: str, value: Any) -> Iterable[tuple[str, str]]:
    if isinstance(value, Mapping):
        if "order_decimal" in value and "order_factored" in value:
            factored = " · ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in value["order_factored"]) or "1"
            yield prefix or "order", f"{factored} = {value['order_decimal']}"
            rest = {k: v for k, v in value.items() if k not in ("order_decimal", "order_factored")}
        else:
            rest = value
        for key in sorted(rest):
            yield from _flatten(f"{prefix}.{key}" if prefix else str(key), rest[key])
    elif isinstance(value, (list, tuple)) and value and all(isinstance(v, Mapping) for v in value):
        for index, item in enumerate(value):
            yield from _flatten(f"{prefix}[{index}]", item)
    else:
        yield prefix, str(value)


def render_report(computation: str, params: Mapping[str, Any], results: Mapping[str, Any], fmt: str) -> str:
    """Render a report as `json`, an rST `text` table or `tsv`."""
    if fmt == "json":
        return report_json(computation, params, results)

    table = TabularData()
    table.set_columns(["Quantity", "Value"])
    for key in sorted(params):
        table.add_row([f"param.{key}", params[key]])
    table.add_rows(_flatten("", results))
    if fmt == "tsv":
        return table.render_tsv()
    return f"{computation}\n{table.render()}"
