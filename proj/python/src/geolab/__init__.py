"""Exact chart-local checks for contact, Jacobi and cosymplectic structures."""

try:
    from ._geolab import (
        DEFAULT_SAMPLES,
        DEFAULT_SEED,
        CheckRecord,
        EngineError,
        Report,
        Scene,
        SceneError,
        __version__,
        check,
        check_names,
        format,
        parse,
        run,
        structure_kinds,
    )
except ImportError:  # in-tree runs: extension module next to the build dir
    from _geolab import (
        DEFAULT_SAMPLES,
        DEFAULT_SEED,
        CheckRecord,
        EngineError,
        Report,
        Scene,
        SceneError,
        __version__,
        check,
        check_names,
        format,
        parse,
        run,
        structure_kinds,
    )

__all__ = [
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "CheckRecord",
    "EngineError",
    "Report",
    "Scene",
    "SceneError",
    "__version__",
    "check",
    "check_file",
    "check_names",
    "format",
    "parse",
    "run",
    "structure_kinds",
]


def check_file(path, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES, timings=False):
    """Run the checks of a scene file and return the Report."""
    with open(path, encoding="utf-8") as fh:
        return check(fh.read(), seed=seed, samples=samples, timings=timings)
