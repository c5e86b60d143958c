import argparse
from typing import Callable

from UI.construct import cmdConstruct
from UI.exponent import cmdExponent
from UI.simulate import cmdSimulate
from UI.verify import cmdVerify

COMMANDS: dict[str, Callable] = {
    "construct": cmdConstruct,
    "verify": cmdVerify,
    "exponent": cmdExponent,
    "simulate": cmdSimulate,
}


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="main.py",
                                     description="Construct, verify and simulate concatenated conjugate code pairs")
    parser.add_argument("command", choices=list(COMMANDS.keys()))
    parser.add_argument("bundle", nargs="?", default=None, help="bundle.json to verify or simulate")
    parser.add_argument("--config", default=None, help="config file. Defaults to the single file in ./config/")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--trial-offset", dest="trial_offset", type=int, default=None,
                        help="index of the first trial, for splitting a campaign into pieces")
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--epsilon", type=float, default=None)
    parser.add_argument("--bits", action="store_true", default=None, help="report exponents in bits")
    parser.add_argument("--fix-scramble", dest="fix_scramble", action="store_true", default=None,
                        help="send the coset representative without a random scramble")
    parser.add_argument("--workers", type=int, default=None, help="threads used by the sieve and the trials")
    return parser


def overridesFromArgs(_args: argparse.Namespace) -> dict:
    """Flags that were actually given, as config keys."""
    overrides = {key: value for key, value in vars(_args).items() if key != "config" and value is not None}
    return overrides


def dispatch(_command: str) -> Callable:
    return COMMANDS[_command]
