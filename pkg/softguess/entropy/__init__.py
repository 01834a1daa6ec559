"""
Entropy module - Renyi, smooth Renyi and conditional entropies in bits.
"""

from .renyi import (
    EntropyOrder, renyi, smooth_renyi, shannon, source_stats,
    arimoto_renyi_conditional, renner_wolf_conditional_zero
)
from .allocation import kuzuoka_allocation, kuzuoka_conditional_smooth
from .chain import chain_rule_sides, conditional_chain_rule_sides

__all__ = [
    "EntropyOrder",
    "renyi",
    "smooth_renyi",
    "shannon",
    "source_stats",
    "arimoto_renyi_conditional",
    "renner_wolf_conditional_zero",
    "kuzuoka_allocation",
    "kuzuoka_conditional_smooth",
    "chain_rule_sides",
    "conditional_chain_rule_sides",
]
