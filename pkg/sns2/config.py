import dataclasses
import pathlib
import typing

from envparse import env

DEFAULT_WITNESS_BUDGET: typing.Final[int] = 10_000
DEFAULT_JOBS: typing.Final[int] = 1


@dataclasses.dataclass(frozen=True, slots=True)
class Settings:
    jobs: int | None = None
    witness_budget: int = DEFAULT_WITNESS_BUDGET
    seed: int = 0
    log_level: str = "WARNING"

    @classmethod
    def from_env(
        cls,
        *,
        is_read: bool = False,
        path_to_envfile: str | pathlib.Path | None = None,
    ) -> typing.Self:
        """Read `SNS2_*` variables. `jobs` stays `None` unless `SNS2_JOBS` is set,
        so that the variable can override the `--jobs` flag and nothing else does."""
        if not is_read and path_to_envfile is not None:
            env.read_envfile(path_to_envfile)
        jobs = env.int("SNS2_JOBS", default=0)
        return cls(
            jobs=jobs if jobs > 0 else None,
            witness_budget=env.int("SNS2_WITNESS_BUDGET", default=DEFAULT_WITNESS_BUDGET),
            seed=env.int("SNS2_SEED", default=0),
            log_level=env.str("SNS2_LOG_LEVEL", default=env.str("LOGGER_LEVEL", default="WARNING")).upper(),
        )

    def resolve_jobs(self, flag: int | None) -> int:
        if self.jobs is not None:
            return self.jobs
        return max(flag or DEFAULT_JOBS, 1)


__all__ = ("DEFAULT_JOBS", "DEFAULT_WITNESS_BUDGET", "Settings")
