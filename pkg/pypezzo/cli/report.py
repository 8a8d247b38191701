import csv
import sys
from pathlib import Path
import ujson
import pypezzo
from pypezzo.cli.config import runConfig
from pypezzo.utils.helpers import stableHash


def meta(config: runConfig):
    """
    The block every report carries so a result can be traced back to what produced it.
    """
    return {
        "tool": "pypezzo",
        "version": pypezzo.__version__,
        "seed": config.seed,
        "config_hash": stableHash(config.hashable()),
    }


def dumps(data: dict):
    return ujson.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def jsonPath(out):
    path = Path(out)
    return path if path.suffix == ".json" else path.with_suffix(".json")


def csvPath(out, suffix: str = None):
    path = Path(out)
    stem = path.stem if path.suffix in (".json", ".csv") else path.name
    if suffix:
        stem = "{}_{}".format(stem, suffix)
    return path.with_name(stem + ".csv")


def writeJson(out, data: dict):
    """
    Write a report as sorted, indented JSON. Without an output path the report goes to stdout.

    :param out: Output path or None
    :param data: The report
    :return: The path written, or None for stdout
    """
    if out is None:
        sys.stdout.write(dumps(data) + "\n")
        return None
    target = jsonPath(out)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8") as handle:
        handle.write(dumps(data) + "\n")
    return target


def writeCsv(out, header: list, rows: list, suffix: str = None):
    """
    Write rows (dicts) as RFC 4180 CSV with a header row. Nothing is written without an output path.

    :param out: Output path or None
    :param header: Column names, in order
    :param rows: One dict per row, missing columns are left empty
    :param suffix: Appended to the file stem, used when one command writes several tables
    """
    if out is None:
        return None
    target = csvPath(out, suffix)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=header, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
    return target
