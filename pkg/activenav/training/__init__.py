"""Rewards, imitation and actor-critic losses, rollouts and curriculum training.
"""

# app
from ._config import REWARD_BASELINES, TrainConfig
from ._losses import il_explore_loss, il_nav_loss, rl_explore_loss, rl_nav_loss
from ._rewards import TERMINAL_REWARD, assign_rewards, discounted_returns, exploration_reward, nav_reward
from ._rollout import replay_episode, rollout_episode
from ._trace import EpisodeTrace, NavStep, dump_traces, load_traces
from ._train import LOG_COLUMNS, TrainResult, episode_loss, greedy_rollouts, init_params, train, write_log


__all__ = [
    'TrainConfig', 'REWARD_BASELINES', 'EpisodeTrace', 'NavStep', 'TrainResult',
    'nav_reward', 'discounted_returns', 'exploration_reward', 'assign_rewards', 'TERMINAL_REWARD',
    'il_nav_loss', 'il_explore_loss', 'rl_nav_loss', 'rl_explore_loss',
    'rollout_episode', 'replay_episode', 'episode_loss', 'greedy_rollouts', 'init_params',
    'train', 'write_log', 'LOG_COLUMNS', 'dump_traces', 'load_traces',
]
