"""Exact gap vectors and cone face dimensions of parametrized real projective varieties.

The heavy lifting lives in the compiled extension ``gapvec._core``; this
package adds a dict-returning convenience wrapper around the JSON report.
"""

import json as _json

from ._core import (
    GenericityFailure,
    InternalInconsistency,
    InvalidVariety,
    Parametrization,
    ParseError,
    build_from_spec,
    conjecture_values,
    delpezzo,
    dim_R2,
    epsilon,
    from_file,
    gap_report_json,
    segre,
    toric_from_file,
    toric_scroll_s12,
    veronese,
    veronese_p2_closed_form,
)

__all__ = [
    "GenericityFailure",
    "InternalInconsistency",
    "InvalidVariety",
    "Parametrization",
    "ParseError",
    "build_from_spec",
    "conjecture_values",
    "delpezzo",
    "dim_R2",
    "epsilon",
    "from_file",
    "gap_report",
    "gap_report_json",
    "segre",
    "toric_from_file",
    "toric_scroll_s12",
    "veronese",
    "veronese_p2_closed_form",
]


def gap_report(variety, mode="fp", seed=0, trials=3, margin=25, nested=False, jobs=1):
    """Gap report as a dict.

    ``variety`` is a Parametrization or a spec string such as
    ``"veronese:n=2,d=3"``; spec strings are built with the same seed that
    feeds the samplers.
    """
    if not isinstance(variety, Parametrization):
        variety = build_from_spec(str(variety), seed)
    text = gap_report_json(
        variety, mode=mode, seed=seed, trials=trials, margin=margin, nested=nested, jobs=jobs
    )
    return _json.loads(text)
