from .friendship import (
    DecompositionError,
    SociableReport,
    decompose,
    decomposition,
    friends_of,
    friends_via_cliques,
    is_friendship,
    is_universal,
    sociable_report,
    star_center,
    verify_friendship,
)
from .lemma_lab import lemma_lab_complement, lemma_lab_path
from .saturation import build_M, m_size, saturation_bound_check, verify_saturated
from .shadow import shadow_bound, shadow_check

__all__ = [
    "DecompositionError",
    "SociableReport",
    "build_M",
    "decompose",
    "decomposition",
    "friends_of",
    "friends_via_cliques",
    "is_friendship",
    "is_universal",
    "lemma_lab_complement",
    "lemma_lab_path",
    "m_size",
    "saturation_bound_check",
    "shadow_bound",
    "shadow_check",
    "sociable_report",
    "star_center",
    "verify_friendship",
    "verify_saturated",
]
