import hashlib
import json
import os
from dataclasses import dataclass, asdict

from exceptions import ConfigError, BudgetExceededError

# The largest field (base or outer) that the lookup tables are built for
FIELD_SIZE_LIMIT = 2 ** 16
DEFAULT_BUDGET = 2 ** 24
BUDGET_ENV_VAR = "CONJ_BUDGET"

CONFIG_DIRECTORY = "./config/"

# keys of RunConfig that do not change what gets built, so they stay out of the hash
UNHASHED_KEYS = ["command", "out", "bundle", "workers"]


def getBudget() -> int:
    """
    Returns the enumeration budget, read from ``CONJ_BUDGET`` if set.
    Any exhaustive enumeration (codewords, coset leaders, ensemble members) larger than this raises
    ``BudgetExceededError``.
    """
    rawBudget = os.environ.get(BUDGET_ENV_VAR)
    if rawBudget is None or rawBudget == "":
        return DEFAULT_BUDGET
    try:
        budget = int(rawBudget)
    except ValueError:
        raise ConfigError(f"{BUDGET_ENV_VAR} MUST be an integer. Got '{rawBudget}'")
    if budget < 1:
        raise ConfigError(f"{BUDGET_ENV_VAR} MUST be positive. Got {budget}")
    return budget


def checkBudget(_count: int, _what: str):
    budget = getBudget()
    if _count > budget:
        raise BudgetExceededError(f"{_what} needs {_count} enumerations but the budget is {budget}. "
                                  f"Set {BUDGET_ENV_VAR} to raise it.")


def locateConfigFiles(_directory: str = CONFIG_DIRECTORY):
    """
    This function reads the config files from the config directory.
    It filters out any non files and any files that don't end in .json
    Returns the number of found files and a list of the files
    """
    if not os.path.isdir(_directory):
        return 0, []

    configFileName = sorted(f"{_directory}{f}" for f in os.listdir(_directory) if
                            os.path.isfile(f"{_directory}{f}") and f.endswith(".json"))
    return len(configFileName), configFileName


def readConfig(_configFileName: str) -> dict:
    """
    This function reads the config from the disk and converts it to a python dictionary.
    PARAMS:
        _configFileName - The file name to load
    """
    try:
        with open(_configFileName, "r") as jsonDataFile:
            configFile = json.load(jsonDataFile)
    except (IOError, json.JSONDecodeError) as e:
        raise ConfigError(f"Unable to read config '{_configFileName}' due to {e}")

    if not isinstance(configFile, dict):
        raise ConfigError(f"Config '{_configFileName}' MUST contain a JSON object")

    return configFile


def loadConfig(_configFileName: str = None) -> dict:
    """
    Loads the named config file. If no name is given the config directory is searched and the single
    file in it is loaded. No file or several files is a config error, pass the path explicitly then.
    """
    if _configFileName:
        return readConfig(_configFileName)

    configFileCount, configFiles = locateConfigFiles()
    if configFileCount == 1:
        return readConfig(configFiles[0])
    if configFileCount == 0:
        print(f"No config files exist in {CONFIG_DIRECTORY}. Using built in defaults.")
        return {}

    raise ConfigError(f"Multiple config files found ({', '.join(configFiles)}). Pass one with --config")


@dataclass(frozen=True)
class RunConfig:
    command: str = "construct"
    # inner field GF(p^m) and ensemble
    p: int = 2
    m: int = 1
    n: int = 7
    k1: int = 5
    k2: int = 5
    epsilon: float = 0.05
    # outer pair over GF(q^k), k = k1 + k2 - n
    outer_kind: str = "rs"
    N: int = 7
    K1: int = 5
    K2: int = 5
    hamming_redundancy: int = 3
    # channels, one probability per element of GF(q)
    W1: tuple = (0.99, 0.01)
    W2: tuple = (0.99, 0.01)
    # simulation
    trials: int = 10000
    seed: int = 0
    trial_offset: int = 0
    fix_scramble: bool = False
    # exponent sweeps (start, stop, step)
    r_grid: tuple = (0.0, 1.0, 0.05)
    bits: bool = False
    out: str = "./output/"
    bundle: str = ""
    # threads used by the sieve
    workers: int = 1

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def k(self) -> int:
        return self.k1 + self.k2 - self.n

    def toDict(self) -> dict:
        result = asdict(self)
        for key in ["W1", "W2", "r_grid"]:
            result[key] = list(result[key])
        return result


def __validate__(_cfg: RunConfig):
    # avoids an import cycle with Algebra.finiteField which reads the limits above
    from Algebra.finiteField import isPrime

    if not isPrime(_cfg.p):
        raise ConfigError(f"p MUST be prime. Got {_cfg.p}")
    if _cfg.m < 1:
        raise ConfigError(f"m MUST be at least 1. Got {_cfg.m}")
    if _cfg.q > FIELD_SIZE_LIMIT:
        raise ConfigError(f"GF({_cfg.q}) is larger than the supported limit of {FIELD_SIZE_LIMIT}")
    if _cfg.n < 1:
        raise ConfigError(f"n MUST be at least 1. Got {_cfg.n}")
    if not 0 <= _cfg.n - _cfg.k2 <= _cfg.k1 <= _cfg.n:
        raise ConfigError(f"Inner dimensions MUST satisfy 0 <= n - k2 <= k1 <= n. "
                          f"Got n={_cfg.n}, k1={_cfg.k1}, k2={_cfg.k2}")
    if not _cfg.epsilon > 0:
        raise ConfigError(f"epsilon MUST be positive. Got {_cfg.epsilon}")

    for name in ["W1", "W2"]:
        channel = getattr(_cfg, name)
        if len(channel) != _cfg.q:
            raise ConfigError(f"{name} MUST have {_cfg.q} entries. Got {len(channel)}")
        if any(value < 0 for value in channel) or abs(sum(channel) - 1) > 1e-9:
            raise ConfigError(f"{name} MUST be a probability distribution. Got {list(channel)}")

    if _cfg.trials < 1:
        raise ConfigError(f"trials MUST be at least 1. Got {_cfg.trials}")
    if not 0 <= _cfg.seed < 2 ** 64:
        raise ConfigError(f"seed MUST fit in 64 bits. Got {_cfg.seed}")
    if _cfg.workers < 1:
        raise ConfigError(f"workers MUST be at least 1. Got {_cfg.workers}")
    if _cfg.trial_offset < 0:
        raise ConfigError(f"trial_offset MUST be non negative. Got {_cfg.trial_offset}")

    start, stop, step = _cfg.r_grid
    if not (0 <= start <= stop <= 1 and step > 0):
        raise ConfigError(f"r_grid MUST be (start, stop, step) inside [0, 1] with a positive step. Got {_cfg.r_grid}")

    if _cfg.command == "exponent":
        return

    # everything below only matters when a concatenated pair gets built
    if _cfg.k < 1:
        raise ConfigError(f"k1 + k2 - n MUST be at least 1 to carry information. Got {_cfg.k}")

    outerSize = _cfg.q ** _cfg.k
    if outerSize > FIELD_SIZE_LIMIT:
        raise ConfigError(f"Outer field GF({outerSize}) is larger than the supported limit of {FIELD_SIZE_LIMIT}")

    if _cfg.outer_kind not in ["rs", "hamming"]:
        raise ConfigError(f"outer_kind MUST be 'rs' or 'hamming'. Got '{_cfg.outer_kind}'")
    if _cfg.outer_kind == "rs" and _cfg.N > outerSize - 1:
        raise ConfigError(f"A Reed-Solomon outer code over GF({outerSize}) has length at most {outerSize - 1}. "
                          f"Got N={_cfg.N}")
    if not 0 <= _cfg.N - _cfg.K2 <= _cfg.K1 <= _cfg.N:
        raise ConfigError(f"Outer dimensions MUST satisfy 0 <= N - K2 <= K1 <= N. "
                          f"Got N={_cfg.N}, K1={_cfg.K1}, K2={_cfg.K2}")
    if _cfg.N > _cfg.q ** _cfg.n - 1:
        raise ConfigError(f"The ensemble only has {_cfg.q ** _cfg.n - 1} members, N={_cfg.N} is too long")


def __flatten__(_loaded: dict) -> dict:
    """Lifts the nested ``outer`` and ``channels`` sections of a config file to flat keys."""
    flat = {key: value for key, value in _loaded.items() if key not in ["outer", "channels"]}

    outer = _loaded.get("outer", {})
    if not isinstance(outer, dict):
        raise ConfigError(f"'outer' MUST be an object. Got {outer}")
    renamed = {"kind": "outer_kind", "r": "hamming_redundancy"}
    for key, value in outer.items():
        flat[renamed.get(key, key)] = value

    channels = _loaded.get("channels", {})
    if not isinstance(channels, dict):
        raise ConfigError(f"'channels' MUST be an object. Got {channels}")
    flat.update(channels)
    return flat


def createRunConfig(_loaded: dict, overrides: dict = None) -> RunConfig:
    """
    :Description:

    Builds a validated ``RunConfig`` from a loaded config dictionary. Values in ``overrides`` (usually
    the command line flags that were actually given) take precedence over the file.

    For a Hamming outer pair the length and dimensions follow from the outer field and
    ``hamming_redundancy``; any N/K1/K2 in the file are replaced.

    :param _loaded: the dictionary from ``readConfig`` (may be empty)
    :param overrides: values to force

    :return: the validated run configuration
    """
    merged = __flatten__(_loaded)
    if overrides:
        merged.update({key: value for key, value in overrides.items() if value is not None})

    knownKeys = set(RunConfig.__dataclass_fields__.keys())
    unknownKeys = set(merged.keys()) - knownKeys - {"config_hash"}
    if unknownKeys:
        raise ConfigError(f"Unknown config keys: {', '.join(sorted(unknownKeys))}")
    merged.pop("config_hash", None)

    for key in ["W1", "W2", "r_grid"]:
        if key in merged:
            try:
                merged[key] = tuple(float(value) for value in merged[key])
            except (TypeError, ValueError):
                raise ConfigError(f"{key} MUST be a list of numbers. Got {merged[key]}")
    if "r_grid" in merged and len(merged["r_grid"]) != 3:
        raise ConfigError(f"r_grid MUST be (start, stop, step). Got {merged['r_grid']}")

    try:
        cfg = RunConfig(**merged)
    except TypeError as e:
        raise ConfigError(f"Malformed config: {e}")

    if cfg.outer_kind == "hamming" and cfg.k >= 1:
        outerSize = cfg.q ** cfg.k
        redundancy = cfg.hamming_redundancy
        if redundancy < 2:
            raise ConfigError(f"hamming_redundancy MUST be at least 2. Got {redundancy}")
        length = (outerSize ** redundancy - 1) // (outerSize - 1)
        merged.update({"N": length, "K1": length - redundancy, "K2": length - redundancy})
        cfg = RunConfig(**merged)

    __validate__(cfg)
    return cfg


def configHash(_cfg: RunConfig) -> str:
    """SHA-256 over the canonical JSON of everything that determines the build and the trials."""
    hashed = {key: value for key, value in _cfg.toDict().items() if key not in UNHASHED_KEYS}
    canonical = json.dumps(hashed, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
