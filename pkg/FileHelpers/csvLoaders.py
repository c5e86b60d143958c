import pandas as pd

from FileHelpers import fileHelper

# Columns every simulation result file carries
RESULT_COLUMNS = ['N_o', 'rate', 'j', 'W', 'trials', 'failures', 'estimate', 'wilson_lo', 'wilson_hi',
                  'union_bound', 'exponent_target', 'config_hash', 'seed', 'trial_offset']

EXPONENT_COLUMNS = ['r', 'E_r', 'capacity', 'R_CSS']


def loadCSV(_filename: str, directoriesToCheck: list[str] = None):
    """
    :Description:

    This function validates that a CSV file with the name '_filename' exists
    If it does, it loads it in to a Pandas dataframe to be returned. In the event of an error,
    an empty pandas dataframe is returned

    :param directoriesToCheck: See fileHelper.findFile
    :param _filename: the csv filename to load

    :return: the dataframe from the csv or an empty dataframe if loaded failed
    """
    print(f"Attempting to load {_filename}...")

    _filename = fileHelper.findFile(_filename, directoriesToCheck)
    if not _filename:
        print("...Error")
        return pd.DataFrame()

    try:
        loadedData = pd.read_csv(_filename)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        print(f"...Error: {e}")
        return pd.DataFrame()

    print(f"...Loaded successfully from {_filename}")
    return loadedData


def __loadWithColumns__(_filename: str, _columns: list[str], _what: str) -> pd.DataFrame:
    loadedDF = loadCSV(_filename, directoriesToCheck=["./", "./output/"])

    if loadedDF.empty:
        print(f"Loading {_what} failed.")
        return loadedDF

    print(f"Processing {_what}...", end='')
    missingCols: list[str] = [el for el in _columns if el not in loadedDF.columns.to_list()]

    if missingCols:
        print("Failed.")
        print(f"Unrecognised format for {_what}. Missing: {', '.join(missingCols)}")
        return pd.DataFrame()

    print("Done.")
    return loadedDF


def loadResults(_filename: str) -> pd.DataFrame:
    """
    :Description:

    Loads a simulation result file and checks it has every result column. Several campaigns over the
    same config (different trial offsets) can be concatenated and summed afterwards.

    :param _filename: the results csv

    :return: the results or an empty dataframe
    """
    resultsDF = __loadWithColumns__(_filename, RESULT_COLUMNS, "simulation results")
    if resultsDF.empty:
        return resultsDF
    return resultsDF.astype({'N_o': "int", 'j': "int", 'trials': "int", 'failures': "int",
                             'config_hash': "string", 'W': "string"}, copy=False)


def loadExponentSweep(_filename: str) -> pd.DataFrame:
    return __loadWithColumns__(_filename, EXPONENT_COLUMNS, "exponent sweep")
