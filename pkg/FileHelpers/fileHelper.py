import os
# The directories to check if the user does not set what directories to check
DEFAULT_DIRECTORIES = ["./", "./output/", "./bundles/", "./config/"]


def findFile(_filename: str, directoriesToCheck: list[str] = None):
    """
    :Description:

    This function attempts to automatically locate the file in a few different places:
    the path as given, then ./, ./output/, ./bundles/, ./config/

    :param directoriesToCheck: The directories to search
    :param _filename: the file name to search for

    :return: the file name with the found directory prepended, False if it was not found
    """
    if directoriesToCheck is None:
        directoriesToCheck = DEFAULT_DIRECTORIES

    if os.path.isabs(_filename):
        return _filename if os.path.exists(_filename) else False

    for directory in directoriesToCheck:
        print(f"\tChecking \'{directory}\'...", end="")
        if os.path.exists(os.path.join(directory, _filename)):
            print("Found.")
            return os.path.join(directory, _filename)
        print("Not Found.")

    return False


def ensureDirectory(_directory: str) -> str:
    """Creates the output directory if needed and returns it with a trailing separator."""
    os.makedirs(_directory, exist_ok=True)
    return os.path.join(_directory, "")
