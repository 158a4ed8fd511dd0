"""Base ConfigSweep class."""
from pydantic import Field
from pydantic import validator
from symdiet.utils.parseable import Parseable
from typing_extensions import Literal


class ConfigSweep(Parseable):
    r"""The configurable attributes of the exhaustive sweeps over compositions.

    Attributes
    ----------

    n_jobs: int (optional).
        The number of parallel workers. The default value is 1. A negative value
        counts back from the number of CPUs, ``-1`` uses every CPU. Zero is invalid.

    backend: enum (optional).
        The joblib backend running the workers. The valid literals are

        - ``loky`` (default): worker processes.
        - ``threading``: worker threads.

    verbose: int (optional).
        The joblib verbosity level. The default value is 0.

    Example
    -------

    >>> config = ConfigSweep()
    >>> config.n_jobs = -1
    >>> config.backend = 'threading'
    """

    n_jobs: int = 1
    backend: Literal["loky", "threading"] = "loky"
    verbose: int = Field(default=0, ge=0)

    class Config:
        extra = "forbid"
        frozen = False
        validate_assignment = True

    @validator("n_jobs")
    def n_jobs_is_not_zero(cls, v):
        if v == 0:
            raise ValueError("n_jobs cannot be zero.")
        return v
