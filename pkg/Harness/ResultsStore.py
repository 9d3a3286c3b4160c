import math

import numpy as np
import pandas as pd

from Harness.RunMetrics import RunMetrics, CSV_COLUMNS, INTEGER_COLUMNS, VALIDATION_FIELDS, VALIDATION_PREFIX

# Axes whose values are whole numbers
INTEGER_AXES = ("ueCount", "gpuCount")


class ResultsStore:
    """
    CSV persistence of the run metrics: one header row and one row per scenario (or sweep point), with the columns in
    a fixed order so that two runs with the same seed produce byte-identical files.

    Usage:

        store = ResultsStore()
        store.add(metrics)
        store.emitCsv("results/arrival_sweep.csv")
        ResultsStore.loadCsv("results/arrival_sweep.csv")
    """

    def __init__(self, rows=None):
        self.rows = list(rows or [])

    def add(self, metrics):
        self.rows.append(metrics)
        return self

    def extend(self, metrics):
        self.rows.extend(metrics)
        return self

    def __len__(self):
        return len(self.rows)

    def emitCsv(self, path):
        return emitCsv(self.rows, path)

    @classmethod
    def loadCsv(cls, path):
        return cls(loadCsv(path))


def toFrame(rows):
    rows = [row.asRow() if isinstance(row, RunMetrics) else dict(row) for row in rows]
    validationColumns = [
        VALIDATION_PREFIX + name for name in VALIDATION_FIELDS if any(VALIDATION_PREFIX + name in row for row in rows)
    ]
    columns = list(CSV_COLUMNS) + validationColumns
    return pd.DataFrame(rows, columns=columns, dtype=object)


def emitCsv(rows, path):
    """
    Writes the rows (RunMetrics or flat dicts) to `path`, a file name or an open text stream.

    Raises:
        ValueError: no rows.
        OSError: the path cannot be written.
    """
    if not rows:
        raise ValueError("There are no results to write")
    frame = toFrame(rows)
    frame.to_csv(path, index=False, lineterminator="\n")
    return frame


def loadCsv(path):
    """
    Reads a file written by emitCsv back into RunMetrics. Empty cells become None.
    """
    frame = pd.read_csv(path, float_precision="round_trip")
    metrics = []
    for record in frame.to_dict("records"):
        row = {key: _plain(value) for key, value in record.items()}
        for name in INTEGER_COLUMNS:
            if row.get(name) is not None:
                row[name] = int(row[name])
        if row.get("axis") in INTEGER_AXES and row.get("axisValue") is not None:
            row["axisValue"] = int(row["axisValue"])
        if row.get(VALIDATION_PREFIX + "jobs") is not None:
            row[VALIDATION_PREFIX + "jobs"] = int(row[VALIDATION_PREFIX + "jobs"])
        metrics.append(RunMetrics.fromRow(row))
    return metrics


def _plain(value):
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and math.isnan(value):
        return None
    return value
