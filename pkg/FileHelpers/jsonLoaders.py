import json

import numpy as np

from Algebra.finiteField import FieldSpec
from Algebra.gfMatrix import GFMatrix
from Codes.linearCode import LinearCode
from exceptions import ConfigError, VerificationError
from FileHelpers import fileHelper

# Sections a bundle written by the construct command always has
BUNDLE_KEYS = ["config_hash", "config", "base_field", "outer_field", "T", "polynomial", "sieve",
               "inner_indices", "bases", "outer", "L1", "L2", "L2_parity_check", "rate"]


def loadBundle(_filename: str) -> dict:
    """
    :Description:

    Loads a bundle written by the construct command.

    :param _filename: the bundle path

    :return: the bundle as a dictionary

    :raises ConfigError: if the file can not be found
    :raises VerificationError: if the file is empty, not JSON or is missing a section
    """
    print(f"Attempting to load {_filename}...")
    path = fileHelper.findFile(_filename, directoriesToCheck=["./", "./output/", "./bundles/"])
    if not path:
        print("...Error")
        raise ConfigError(f"Unable to locate bundle '{_filename}'")

    try:
        with open(path, "r") as jsonDataFile:
            text = jsonDataFile.read()
    except IOError as e:
        raise ConfigError(f"Unable to read bundle '{path}' due to {e}")

    if not text.strip():
        raise VerificationError(f"Bundle '{path}' is empty")

    try:
        bundle = json.loads(text)
    except json.JSONDecodeError as e:
        raise VerificationError(f"Bundle '{path}' is corrupt: {e}")

    if not isinstance(bundle, dict):
        raise VerificationError(f"Bundle '{path}' MUST contain a JSON object")

    missingKeys = [key for key in BUNDLE_KEYS if key not in bundle]
    if missingKeys:
        raise VerificationError(f"Bundle '{path}' is missing {', '.join(missingKeys)}")

    print(f"...Loaded successfully from {path}")
    return bundle


def fieldFromJSON(_data: dict) -> FieldSpec:
    try:
        return FieldSpec(int(_data["p"]), int(_data["m"]), tuple(_data["modulus"]), int(_data["generator"]))
    except (KeyError, TypeError, ValueError) as e:
        raise VerificationError(f"Malformed field description {_data}: {e}")


def matrixFromJSON(_field: FieldSpec, _data: dict) -> GFMatrix:
    """Rebuilds a matrix from power indices; the shape is checked against the stored row/column counts."""
    try:
        rows, cols = int(_data["rows"]), int(_data["cols"])
        entries = np.asarray(_data["entries"], dtype=np.int64).reshape(rows, cols)
        return GFMatrix(_field, _field.fromPowerIndex(entries))
    except (KeyError, TypeError, ValueError) as e:
        raise VerificationError(f"Malformed matrix: {e}")


def codeFromJSON(_field: FieldSpec, _data: dict) -> LinearCode:
    try:
        generator = matrixFromJSON(_field, _data["generator"])
        n, k = int(_data["n"]), int(_data["k"])
    except (KeyError, TypeError) as e:
        raise VerificationError(f"Malformed code: {e}")

    if generator.cols != n:
        raise VerificationError(f"Stored generator has {generator.cols} columns, the code length is {n}")
    code = LinearCode(generator)
    if code.k != k:
        raise VerificationError(f"Stored generator has rank {code.k}, the code dimension is {k}")
    return code
