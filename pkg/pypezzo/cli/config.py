from dataclasses import asdict, dataclass, field, fields
import ujson
from pypezzo.utils.errors import configError

settings = {
    "suites": ("oracle", "katz", "dual", "multiplicative", "prime-square"),
    "pairs": ((3, 5), (3, 7), (5, 7)),
    "poissonGrid": (40, 60),
    "budgetB": 2**20,
    # fields that change how a run executes but not what it computes
    "unhashed": ("out", "workers", "cache_dir", "config", "verbose", "quiet"),
}


@dataclass
class runConfig:
    """
    Everything one command needs. Built from defaults, then a JSON config file, then command line flags.

    :ivar command: count, sieve, charsum, poisson, budget or fit
    :ivar form: Path to a form file, None for the Klein quartic x1^3 x2 + x2^3 x3 + x3^3 x1
    :ivar B: Box radius
    :ivar B_grid: List of box radii, used instead of B when given
    :ivar seed: Seed for every sampled suite
    """

    command: str
    form: str = None
    B: int = None
    B_grid: list = None
    eps: float = 0.0
    C: float = 1.0
    primes1: list = None
    primes2: list = None
    force: bool = False
    tol: float = 1e-10
    truncation: int = None
    workers: int = None
    seed: int = 0
    cache_dir: str = None
    out: str = None
    config: str = None
    suites: list = field(default_factory=lambda: list(settings["suites"]))
    pairs: list = field(default_factory=lambda: [list(p) for p in settings["pairs"]])
    trivial: bool = False
    samples: int = None
    verbose: bool = False
    quiet: bool = False

    def validate(self):
        if self.command not in ("count", "sieve", "charsum", "poisson", "budget", "fit"):
            raise configError("command", "unknown command {!r}".format(self.command))
        if self.tol is None or self.tol <= 0:
            raise configError("tol", "tolerances must be positive")
        if self.B is not None and self.B < 0:
            raise configError("B", "box radius must be non-negative")
        if self.B_grid is not None:
            if not self.B_grid or any(B < 0 for B in self.B_grid):
                raise configError("B-grid", "needs at least one non-negative radius")
        if self.eps < 0 or self.eps >= 0.5:
            raise configError("eps", "must lie in [0, 0.5)")
        if self.C <= 0:
            raise configError("C", "must be positive")
        if self.truncation is not None and self.truncation < 0:
            raise configError("truncation", "must be non-negative")
        if self.workers is not None and self.workers < 1:
            raise configError("workers", "must be at least 1")
        if self.samples is not None and self.samples < 1:
            raise configError("samples", "must be at least 1")
        unknown = set(self.suites) - set(settings["suites"])
        if unknown:
            raise configError(
                "suites", "unknown suite(s) {}, pick from {}".format(sorted(unknown), settings["suites"])
            )
        for pair in self.pairs:
            if len(pair) != 2:
                raise configError("pairs", "each entry must be a (q, q') pair, got {}".format(pair))
        return self

    @property
    def grid(self):
        """
        The B values to run, B_grid when present, else [B].
        """
        if self.B_grid:
            return list(self.B_grid)
        return [] if self.B is None else [self.B]

    def toJson(self):
        return asdict(self)

    def hashable(self):
        return {k: v for k, v in asdict(self).items() if k not in settings["unhashed"]}


def _normalizeKeys(data: dict):
    names = {f.name for f in fields(runConfig)}
    normalized = {}
    for key, value in data.items():
        name = key.replace("-", "_")
        if name not in names:
            raise configError(key, "is not a configuration field")
        normalized[name] = value
    return normalized


def loadConfigFile(path):
    """
    Read a JSON config file. Keys are field names, dashes and underscores are interchangeable.

    :param path: Path to the file
    :return dict: The normalized values
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = ujson.loads(handle.read())
        except ValueError:
            raise configError("config", "{} is not valid JSON".format(path))
    if not isinstance(data, dict):
        raise configError("config", "{} must hold a JSON object".format(path))
    return _normalizeKeys(data)


def buildConfig(command: str, flags: dict):
    """
    Merge defaults, the optional config file named in flags["config"] and the flags themselves.
    Flags set to None count as absent.

    :param command: The subcommand
    :param flags: Parsed command line values keyed by field name
    :return runConfig: The validated configuration
    """
    values = {}
    path = flags.get("config")
    if path:
        values.update(loadConfigFile(path))
        values["config"] = path
    values.update({k: v for k, v in _normalizeKeys(flags).items() if v is not None})
    values["command"] = command
    return runConfig(**values).validate()
