"""Procedural graph worlds, panoramic observations, tasks and teacher supervision.
"""

# app
from ._dataset import SPLITS, DataConfig, Split, build_dataset, build_split, load_split, save_split
from ._generate import generate_world
from ._io import (
    env_from_dict, env_to_dict, load_environment, load_tasks, save_environment, save_tasks,
)
from ._observe import observe
from ._paths import route, shortest_path, teacher_action
from ._tasks import sample_task, synth_instruction
from ._types import (
    Environment, InstructionTokens, PanoramicObservation, Task, ViewFeature, Viewpoint, WorldConfig,
)


__all__ = [
    'Environment', 'Viewpoint', 'ViewFeature', 'PanoramicObservation',
    'Task', 'InstructionTokens', 'WorldConfig', 'DataConfig', 'Split', 'SPLITS',
    'generate_world', 'shortest_path', 'route', 'teacher_action', 'observe',
    'sample_task', 'synth_instruction', 'build_split', 'build_dataset',
    'env_to_dict', 'env_from_dict', 'save_environment', 'load_environment',
    'save_tasks', 'load_tasks', 'save_split', 'load_split',
]
