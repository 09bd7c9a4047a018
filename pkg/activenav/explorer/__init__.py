"""Active exploration: where to explore, multi-step excursions and knowledge updates.
"""

# app
from ._modules import (
    direct_knowledge, explore_decision, explore_policy, explore_state_step, explore_value, gather,
    store, update_knowledge,
)
from ._rollout import run_exploration
from ._trace import GATE, STEP, ExplorationAction, ExplorationRound, ExplorationTrace
from ._types import DirectionKnowledge, ExplorationState, Mode


__all__ = [
    'Mode', 'ExplorationState', 'DirectionKnowledge',
    'ExplorationAction', 'ExplorationRound', 'ExplorationTrace', 'GATE', 'STEP',
    'gather', 'store', 'explore_state_step', 'explore_policy', 'explore_decision',
    'update_knowledge', 'direct_knowledge', 'explore_value', 'run_exploration',
]
