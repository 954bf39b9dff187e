"""The full coefficient table over all non-empty subsets of ``[M]``."""

import csv
import io
from importlib import resources
from itertools import combinations

from .naruse import nn_coefficients


def canonical_subsets(max_elem):
    """Non-empty subsets of ``[max_elem]``, by size and then lexicographically."""
    return [c for k in range(1, max_elem + 1) for c in combinations(range(1, max_elem + 1), k)]


def appendix_rows(max_elem, cap=None):
    return [(I, nn_coefficients(I, cap).values) for I in canonical_subsets(max_elem)]


def format_set(I):
    return "{" + ",".join(map(str, I)) + "}"


def appendix_csv(max_elem, cap=None):
    """CSV with columns ``I, s, C_0..C_{M-1}``; absent indices are blank."""
    width = max(max_elem, 1)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["I", "s"] + [f"C_{i}" for i in range(width)])
    for I, C in appendix_rows(max_elem, cap):
        w.writerow([format_set(I), len(C) - 1] + list(C) + [""] * (width - len(C)))
    return buf.getvalue()


def golden_appendix_csv():
    """The checked-in golden copy of the table for ``max_elem = 7``."""
    return resources.files("nnlab").joinpath("data/coefficients_max7.csv").read_text()


def parse_appendix_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    out = {}
    for row in rows[1:]:
        I = tuple(int(x) for x in row[0].strip("{}").split(","))
        out[I] = (int(row[1]), tuple(int(c) for c in row[2:] if c != ""))
    return out
