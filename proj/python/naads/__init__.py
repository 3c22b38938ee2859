"""Python bindings for the naads checkers."""

from ._naads import (
    BudgetError,
    DomainError,
    Family,
    LookupError,
    PreconditionError,
    UsageError,
    corpus,
    expectations,
    family_from_json,
    hull_sample,
    list_corpus,
    omega,
    orbit,
    orbit_csv,
    render_report,
    return_raster_csv,
    run_task,
    tasks,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "Family",
    "LookupError",
    "PreconditionError",
    "UsageError",
    "corpus",
    "expectations",
    "family_from_json",
    "hull_sample",
    "list_corpus",
    "omega",
    "orbit",
    "orbit_csv",
    "render_report",
    "return_raster_csv",
    "run_task",
    "tasks",
]
