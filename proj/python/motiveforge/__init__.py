"""Exact arithmetic of weighted Fermat Calabi-Yau threefolds.

Thin re-export of the compiled extension: admissible-pair enumeration,
Fermat motive tables, mirror groups, monomial classes, reflexive-polytope
Hodge numbers, and exact local zeta data over finite fields.
"""

try:
    from ._core import (
        batyrev_hodge,
        count_points,
        enumerate_admissible,
        gross_koblitz,
        invariant_motives,
        is_admissible,
        local_factors,
        mirror_factor,
        mirror_group,
        monomial_classes,
        motives,
        projector_check,
        vafa_summary,
    )
except ImportError:  # in-tree builds keep the extension beside the package
    from _core import (
        batyrev_hodge,
        count_points,
        enumerate_admissible,
        gross_koblitz,
        invariant_motives,
        is_admissible,
        local_factors,
        mirror_factor,
        mirror_group,
        monomial_classes,
        motives,
        projector_check,
        vafa_summary,
    )

__all__ = [
    "batyrev_hodge",
    "count_points",
    "enumerate_admissible",
    "gross_koblitz",
    "invariant_motives",
    "is_admissible",
    "local_factors",
    "mirror_factor",
    "mirror_group",
    "monomial_classes",
    "motives",
    "projector_check",
    "vafa_summary",
]
