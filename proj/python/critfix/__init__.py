"""Python bindings for the critfix library."""

from ._critfix import (
    DomainError,
    abstract_class_count,
    admissible_partitions,
    catalog_certified,
    catalog_names,
    hurwitz_orbits,
    monodromy,
    nonpolynomial_partitions,
    planar_class_count,
    run_cli,
)

__all__ = [
    "DomainError",
    "abstract_class_count",
    "admissible_partitions",
    "catalog_certified",
    "catalog_names",
    "hurwitz_orbits",
    "monodromy",
    "nonpolynomial_partitions",
    "planar_class_count",
    "run_cli",
]
