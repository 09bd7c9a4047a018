"""Instruction encoder, recurrent navigation state and the navigation policy.
"""

# app
from ._drivers import Driver, GreedyDriver, ReplayDriver, SampleDriver, TeacherDriver
from ._policy import (
    as_values, distribution, encode_instruction, initial_state, nav_policy, nav_step, nav_value,
    score, select_action,
)
from ._types import GREEDY, SAMPLE, ActionDistribution, InstructionEncoding, NavigatorState


__all__ = [
    'InstructionEncoding', 'NavigatorState', 'ActionDistribution', 'GREEDY', 'SAMPLE',
    'encode_instruction', 'initial_state', 'nav_step', 'nav_policy', 'nav_value', 'select_action',
    'distribution', 'score', 'as_values',
    'Driver', 'GreedyDriver', 'SampleDriver', 'TeacherDriver', 'ReplayDriver',
]
