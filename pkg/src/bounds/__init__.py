"""
Bound verdicts, singularity diagnostics and the example corpus.
"""

from src.bounds.corpus import (
    CorpusInstance,
    corpus,
    get_family,
    list_families,
    recompute_facts,
    register_family,
)
from src.bounds.nodal import NodalDiagnosis, nodal_diagnostic, reducibility
from src.bounds.verdicts import (
    corollary2_verdict,
    theorem1_verdict,
    theorem1star_verdict,
    theorem3_verdict,
    theorem8_verdict,
    theorem18_verdict,
)

__all__ = [
    "CorpusInstance",
    "corpus",
    "get_family",
    "list_families",
    "recompute_facts",
    "register_family",
    "NodalDiagnosis",
    "nodal_diagnostic",
    "reducibility",
    "corollary2_verdict",
    "theorem1_verdict",
    "theorem1star_verdict",
    "theorem3_verdict",
    "theorem8_verdict",
    "theorem18_verdict",
]
