"""Exact computer algebra for cohomological operators on complexes of free
modules over a quotient by an exact zero divisor.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (  # noqa: F401
    Bundle,
    Complex,
    Elem,
    JobParseError,
    Map,
    Ring,
    __version__,
    annihilator,
    check_exact_pair,
    example_job_text,
    ext_class_nonzero,
    homotopic,
    lift,
    minimal_resolution,
    operators,
    project,
    quotient,
    reproduce_example,
    run_job,
)
