"""Ordinary least squares on index/property pairs, plus dataset loading.

The model is always a single-predictor line y = intercept + slope * x
where x is a graph descriptor (the first Zagreb index or its leap
analogue) and y is a measured molecular property.  Nothing here needs
more machinery than centered sums, so the fit is done directly; no
third-party dependency.

Datasets are CSV files with the fixed header

    name,graph,boiling_point,entropy

where the graph cell is either an inline edge list ``n;u-v,u-v,...`` or a
reference ``@relative/path`` to an edge-list file next to the CSV.
Property cells may be left empty when a value is not available.  Lines
starting with '#' are comments and may carry provenance notes.
"""

from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass

from importlib import resources

from .graph import Graph, read_edge_list
from .indices import first_leap_zagreb, first_zagreb

PROPERTIES = ("boiling_point", "entropy")
DESCRIPTORS = ("M1", "LM1")

_HEADER = ["name", "graph", "boiling_point", "entropy"]


@dataclass(frozen=True)
class RegressionResult:
    slope: float
    intercept: float
    pearson_r: float
    n_points: int
    se_slope: float
    se_intercept: float

    def predict(self, x: float) -> float:
        return self.intercept + self.slope * x


def fit(xs, ys) -> RegressionResult:
    """Least-squares line through (xs, ys) with standard errors.

    Needs at least three points (the error variance divides by n - 2) and
    non-constant x values.  When the y values are all equal the line is
    flat and Pearson's r is reported as 0.0 (the usual formula is 0/0).
    """
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    n = len(xs)
    if n != len(ys):
        raise ValueError(f"length mismatch: {n} x values, {len(ys)} y values")
    if n < 3:
        raise ValueError("need at least three points")
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((x - mean_x) ** 2 for x in xs)
    syy = sum((y - mean_y) ** 2 for y in ys)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    if sxx == 0.0:
        raise ValueError("x values are constant")
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    r = 0.0 if syy == 0.0 else sxy / math.sqrt(sxx * syy)
    sse = max(syy - slope * sxy, 0.0)  # clip rounding fuzz near a perfect fit
    sigma2 = sse / (n - 2)
    se_slope = math.sqrt(sigma2 / sxx)
    se_intercept = math.sqrt(sigma2 * (1.0 / n + mean_x ** 2 / sxx))
    return RegressionResult(slope=slope, intercept=intercept, pearson_r=r,
                            n_points=n, se_slope=se_slope, se_intercept=se_intercept)


@dataclass(frozen=True)
class CompoundRecord:
    """One molecule: its graph, measured properties, computed descriptors."""

    name: str
    graph: Graph
    properties: dict
    descriptors: dict


def _descriptors(g: Graph) -> dict:
    return {"M1": first_zagreb(g), "LM1": first_leap_zagreb(g)}


def _parse_inline_graph(cell: str) -> Graph:
    head, sep, tail = cell.partition(";")
    if not sep:
        raise ValueError("inline graph must look like 'n;u-v,u-v,...'")
    n = int(head)
    pairs = []
    if tail:
        for token in tail.split(","):
            u, dash, v = token.partition("-")
            if not dash:
                raise ValueError(f"bad edge token {token!r}")
            pairs.append((int(u), int(v)))
    return Graph(n, pairs)


def parse_dataset(text: str, base_dir: "str | None" = None) -> "list[CompoundRecord]":
    """Parse dataset CSV text.  base_dir resolves '@' graph references;
    passing None makes such references an error."""
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty dataset") from None
    if header != _HEADER:
        raise ValueError(f"bad header {header!r}, expected {_HEADER!r}")
    records = []
    seen = set()
    for idx, row in enumerate(reader, start=1):
        if not row:
            continue
        try:
            rec = _parse_row(row, base_dir)
        except ValueError as exc:
            raise ValueError(f"row {idx}: {exc}") from None
        if rec.name in seen:
            raise ValueError(f"row {idx}: duplicate compound name {rec.name!r}")
        seen.add(rec.name)
        records.append(rec)
    return records


def _parse_row(row, base_dir) -> CompoundRecord:
    if len(row) != len(_HEADER):
        raise ValueError(f"expected {len(_HEADER)} cells, got {len(row)}")
    name = row[0].strip()
    if not name:
        raise ValueError("empty compound name")
    cell = row[1].strip()
    if cell.startswith("@"):
        if base_dir is None:
            raise ValueError("'@' graph references are not allowed here")
        g = read_edge_list(os.path.join(base_dir, cell[1:]))
    else:
        try:
            g = _parse_inline_graph(cell)
        except ValueError as exc:
            raise ValueError(f"{name}: {exc}") from None
    if not g.is_connected():
        raise ValueError(f"{name}: graph is not connected")
    props = {}
    for prop, raw in zip(PROPERTIES, row[2:]):
        raw = raw.strip()
        if not raw:
            continue
        try:
            props[prop] = float(raw)
        except ValueError:
            raise ValueError(f"{name}: bad {prop} value {raw!r}") from None
    return CompoundRecord(name=name, graph=g, properties=props,
                          descriptors=_descriptors(g))


def load_dataset(path: str) -> "list[CompoundRecord]":
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_dataset(text, base_dir=os.path.dirname(os.path.abspath(path)))


def available_datasets() -> "list[str]":
    """Names of CSV datasets bundled with the package (may be empty)."""
    root = resources.files(__package__) / "data"
    if not root.is_dir():
        return []
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".csv"))


def load_bundled(name: str) -> "list[CompoundRecord]":
    path = resources.files(__package__) / "data" / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled dataset named {name!r}; "
                                f"have {available_datasets()}")
    return parse_dataset(path.read_text(encoding="utf-8"), base_dir=None)


def reproduce_models(records) -> dict:
    """Fit every descriptor/property combination with enough data.

    Returns {(descriptor, property): RegressionResult or None}; None means
    fewer than three compounds carried that property (or the descriptor
    was constant across them).
    """
    out = {}
    for desc in DESCRIPTORS:
        for prop in PROPERTIES:
            pairs = [(rec.descriptors[desc], rec.properties[prop])
                     for rec in records if prop in rec.properties]
            if len(pairs) < 3:
                out[(desc, prop)] = None
                continue
            xs = [p[0] for p in pairs]
            if min(xs) == max(xs):
                out[(desc, prop)] = None
                continue
            out[(desc, prop)] = fit(xs, [p[1] for p in pairs])
    return out


def result_table(models: dict) -> str:
    """Compact deterministic text table of fitted models."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["descriptor", "property", "n", "slope", "intercept",
                     "pearson_r", "se_slope", "se_intercept"])
    for desc in DESCRIPTORS:
        for prop in PROPERTIES:
            res = models.get((desc, prop))
            if res is None:
                writer.writerow([desc, prop, 0, "", "", "", "", ""])
                continue
            writer.writerow([desc, prop, res.n_points,
                             format(res.slope, ".12g"), format(res.intercept, ".12g"),
                             format(res.pearson_r, ".12g"), format(res.se_slope, ".12g"),
                             format(res.se_intercept, ".12g")])
    return buf.getvalue()
