"""Verification run configuration."""

from dataclasses import asdict, dataclass

from ..errors import VerifierError

SUITE_ORDER = (
    "series",
    "characters",
    "rmatrix-phi",
    "rmatrix-psi",
    "special-points",
    "interchange",
    "pi",
    "virasoro",
    "virasoro-twisted",
)
SUITE_NAMES = ("all",) + SUITE_ORDER


class ConfigError(VerifierError, ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    """Truncation windows and execution options for one verification run.

    degree: Heisenberg degree cap for the Virasoro relation sources.
    sectors: sector window; |j| <= sectors for vertex operator suites and
        highest weights, 0 <= j <= sectors for the Virasoro relation.
    modes: mode window; |n|, |m| <= modes, coefficient window |a|, |b| <= modes.
    order: truncation order of the structure series.
    guard: guard band for stabilization scans and annihilation checks.
    product_degree: source degree cap for two-variable relations.
    twisted_degree2: doubled principal degree cap for twisted sources.
    pi_degree: degree through which the involution is constructed.
    """
    suite: str = "all"
    degree: int = 4
    sectors: int = 2
    modes: int = 3
    order: int = 16
    guard: int = 4
    product_degree: int = 2
    twisted_degree2: int = 6
    pi_degree: int = 2
    param_mode: str = "symbolic"
    seed: int = None
    jobs: int = 1
    output: str = None
    timings: bool = False

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise ConfigError(f"unknown suite {self.suite!r}")
        for name in ("degree", "sectors", "modes", "order", "guard", "product_degree",
                     "twisted_degree2", "pi_degree", "jobs"):
            v = getattr(self, name)
            if not isinstance(v, int) or v <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {v!r}")
        if self.param_mode not in ("symbolic", "sampled"):
            raise ConfigError(f"unknown parameter mode {self.param_mode!r}")
        if self.param_mode == "sampled" and self.seed is None:
            raise ConfigError("sampled mode requires a seed")

    @property
    def suites(self):
        return SUITE_ORDER if self.suite == "all" else (self.suite,)

    def describe(self):
        d = asdict(self)
        for k in ("output", "jobs", "timings"):
            d.pop(k)
        return d
