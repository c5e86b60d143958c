import os
import sys

import config
from exceptions import BudgetExceededError, ConfigError, VerificationError
from UI.ui import buildParser, dispatch, overridesFromArgs

EXIT_PASS = 0
EXIT_VERIFICATION = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3


def main(argv: list[str] = None) -> int:
    """
    :Description:

    Parses the command line, loads and validates the config and runs the command.

    :param argv: the arguments without the program name. Defaults to ``sys.argv[1:]``

    :return: the exit code: 0 pass, 1 verification failure, 2 config error, 3 budget exceeded
    """
    args = buildParser().parse_args(argv)

    try:
        # verify reads everything it needs from the bundle
        loadedConfig = {} if args.command == "verify" else config.loadConfig(args.config)
        runConfig = config.createRunConfig(loadedConfig, overridesFromArgs(args))
        print(f"Running {runConfig.command} with config {config.configHash(runConfig)[:12]}")
        if not dispatch(runConfig.command)(runConfig):
            print(f"{runConfig.command.capitalize()} failed.")
            return EXIT_VERIFICATION
    except VerificationError as e:
        print(f"Verification failed: {e}")
        return EXIT_VERIFICATION
    except ConfigError as e:
        print(f"Config error: {e}")
        return EXIT_CONFIG
    except BudgetExceededError as e:
        print(f"Budget exceeded: {e}")
        return EXIT_BUDGET

    return EXIT_PASS


if __name__ == "__main__":
    # when the program is compiled, it will execute in a tmp folder, which is unhelpful when reading data in
    #  so to work around that, we are checking to see if we are running in that mode, then updating the current working
    #  directory to be where the app is downloaded.

    if getattr(sys, 'frozen', False):
        os.chdir(os.path.dirname(sys.executable))
    sys.exit(main())
