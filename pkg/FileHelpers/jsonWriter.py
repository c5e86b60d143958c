"""
Description
================

Serialization of fields, matrices and codes and the JSON writer for bundles and reports.

Field elements are written by power index: 0 for zero and ``e + 1`` for ``g^e`` where g is the
field's stored generator. The generator and modulus are written next to every field so a reader
can rebuild the exact same tables.
"""
import json

import numpy as np

from Algebra.finiteField import FieldSpec
from Algebra.gfMatrix import GFMatrix
from Codes.linearCode import LinearCode


def __default__(_value):
    if isinstance(_value, np.integer):
        return int(_value)
    if isinstance(_value, np.floating):
        return float(_value)
    if isinstance(_value, np.ndarray):
        return _value.tolist()
    if isinstance(_value, tuple):
        return list(_value)
    raise TypeError(f"Object of type {type(_value).__name__} is not JSON serializable")


def writeJSON(_filename: str, _data: dict) -> bool:
    """
    :Description:

    Writes the data as indented JSON with sorted keys. Identical data gives identical bytes.

    :param _filename: The filename to write. Adds .json if missing.
    :param _data: the data to write

    :return: True if write was successful. False if not.
    """
    if _filename is None or _data is None:
        raise AttributeError("Both _filename AND _data must be defined")

    if not _filename.endswith(".json"):
        _filename += ".json"

    try:
        text = json.dumps(_data, indent=2, sort_keys=True, default=__default__)
    except TypeError as e:
        print(f"Unable to serialize '{_filename}' due to {e}")
        return False

    try:
        with open(_filename, "w", newline="\n") as fileOut:
            fileOut.write(text)
            fileOut.write("\n")
    except IOError as e:
        print(f"Unable to write '{_filename}' to file due to {e}")
        return False

    return True


def writeMatrixRows(_filename: str, _matrix: GFMatrix) -> bool:
    """
    :Description:

    Plain text row format for external tools: a header line ``# rows cols q`` then one line per
    row with the entries as integers (base-p digits of the element, constant term least
    significant), separated by single spaces.

    :param _filename: the file to write
    :param _matrix: the matrix

    :return: True if write was successful. False if not.
    """
    lines = [f"# {_matrix.rows} {_matrix.cols} {_matrix.field.q}"]
    lines.extend(" ".join(str(int(entry)) for entry in row) for row in _matrix.entries)

    try:
        with open(_filename, "w", newline="\n") as fileOut:
            fileOut.write("\n".join(lines))
            fileOut.write("\n")
    except IOError as e:
        print(f"Unable to write '{_filename}' to file due to {e}")
        return False

    return True


def fieldToJSON(_field: FieldSpec) -> dict:
    return {"p": _field.p, "m": _field.m, "modulus": list(_field.modulus), "generator": _field.generator}


def matrixToJSON(_matrix: GFMatrix) -> dict:
    return {"rows": _matrix.rows, "cols": _matrix.cols,
            "entries": _matrix.field.toPowerIndex(_matrix.entries).tolist()}


def codeToJSON(_code: LinearCode) -> dict:
    """Length, dimension and the canonical (reduced row echelon) generator."""
    return {"n": _code.n, "k": _code.k, "generator": matrixToJSON(_code.generator)}
