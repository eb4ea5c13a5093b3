from ._core import (
    GroupElement,
    classify,
    cohomology,
    compose,
    criterion_count,
    deviation,
    dimension,
    export_json,
    identity_element,
    inverse,
    jacobi_violations,
    labels,
    random_group_element,
    run_criterion,
    spectrum,
    vector_rep,
)

__all__ = [
    "GroupElement",
    "classify",
    "cohomology",
    "compose",
    "criterion_count",
    "deviation",
    "dimension",
    "export_json",
    "identity_element",
    "inverse",
    "jacobi_violations",
    "labels",
    "random_group_element",
    "run_criterion",
    "spectrum",
    "vector_rep",
]
