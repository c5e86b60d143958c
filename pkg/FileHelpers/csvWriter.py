import csv
from typing import Callable

import pandas as pd


def __writeText__(_filename: str, _write: Callable) -> bool:
    try:
        with open(_filename, "w", newline="\n") as fileOut:
            _write(fileOut)
    except IOError as e:
        print(f"Unable to write '{_filename}' to file due to {e}")
        return False
    return True


def csvWriter(_filename: str, _data: (pd.DataFrame, list), configHash: str = None) -> bool:
    """
    :Description:

    Writes a result table to a csv file. Dataframes go through ``to_csv`` with floats at full precision, so a
    rerun with the same config produces the same bytes. Lists are written row by row with the csv module.

    If ``configHash`` is given and the frame has no ``config_hash`` column, one is appended.

    :param _filename: The filename to write. Adds .csv if missing.
    :param _data: the data to write. Must be either a dataframe or list
    :param configHash: the hash of the config that produced the data

    :return: True if write was successful. False if not.
    """
    if _filename is None or _data is None:
        raise AttributeError("Both _filename AND _data must be defined")

    if not _filename.endswith(".csv"):
        _filename += ".csv"

    if isinstance(_data, list):
        return __writeText__(_filename, lambda fileOut: csv.writer(fileOut).writerows(_data))

    if isinstance(_data, pd.DataFrame):
        if configHash is not None and "config_hash" not in _data.columns:
            _data = _data.assign(config_hash=configHash)
        return __writeText__(_filename,
                             lambda fileOut: _data.to_csv(path_or_buf=fileOut, index=False, float_format="%.17g"))

    print(f"Unsupported data type. Type is: {type(_data)}")
    return False
