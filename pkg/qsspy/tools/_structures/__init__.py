from ._adversary import MAX_PLAYERS, AdversaryStructure, is_self_dual, player_subsets, threshold_structure
from ._msp import MSP, msp_accepts, msp_structure, ranks

__all__ = [
    "MAX_PLAYERS",
    "AdversaryStructure",
    "player_subsets",
    "threshold_structure",
    "is_self_dual",
    "MSP",
    "msp_accepts",
    "msp_structure",
    "ranks",
]
