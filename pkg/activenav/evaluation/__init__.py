"""Navigation metrics, exploration statistics and the ablation harness.
"""

# app
from ._experiment import (
    RESULT_COLUMNS, VARIANTS, EvalConfig, ExperimentConfig, Variant, evaluate, run_experiment, summarize,
)
from ._io import exploration_records, write_report, write_rows
from ._metrics import (
    EPISODE_COLUMNS, METRIC_COLUMNS, OR_SCOPES, MetricsReport, compute_metrics, episode_metrics,
    exploration_stats,
)


__all__ = [
    'MetricsReport', 'compute_metrics', 'episode_metrics', 'exploration_stats',
    'METRIC_COLUMNS', 'EPISODE_COLUMNS', 'OR_SCOPES',
    'EvalConfig', 'ExperimentConfig', 'Variant', 'VARIANTS', 'RESULT_COLUMNS',
    'evaluate', 'run_experiment', 'summarize',
    'exploration_records', 'write_report', 'write_rows',
]
