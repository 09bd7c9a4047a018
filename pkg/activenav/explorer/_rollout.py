# built-in
from typing import Dict, List, Optional, Set, Tuple

# app
from .._constants import LOG as ROOT_LOG, STOP
from ..memory import EXPLORE, MemoryGraph
from ..navigator import Driver, GreedyDriver, distribution, score
from ..numcore import Tape, Value, linear
from ..world import PanoramicObservation, teacher_action
from ._modules import (
    direct_knowledge, explore_decision, explore_policy, explore_state_step, explore_value, gather,
    store, update_knowledge,
)
from ._trace import GATE, STEP, ExplorationAction, ExplorationRound, ExplorationTrace
from ._types import DirectionKnowledge, ExplorationState, Mode


LOG = ROOT_LOG.getChild(__name__)


def _nav_argmax(h_nv: Value, candidates: List[Value], tape: Tape) -> int:
    query = linear(tape.param('W_nv'), h_nv)
    return distribution(score(candidates, query, tape), range(len(candidates))).argmax()


def _teacher(memory: MemoryGraph, goal: Optional[int]) -> Optional[int]:
    if goal is None:
        return None
    return teacher_action(memory.env, memory.logical_position, goal)


class _Exploration:
    """State shared by the rounds of one navigation step."""

    def __init__(
        self, h_nv: Value, V: PanoramicObservation, memory: MemoryGraph, tape: Tape,
        t: int, smax: int, driver: Driver, goal: Optional[int], lookahead: bool, direct: bool,
    ):
        self.h_nv = h_nv
        self.V = V
        self.memory = memory
        self.tape = tape
        self.t = t
        self.smax = smax
        self.driver = driver
        self.goal = goal
        self.lookahead = lookahead
        self.direct = direct
        self.origin = memory.logical_position
        self.candidates = [tape.constant(view.embedding) for view in V.candidates]
        self.mask: Set[int] = set()
        self.knowledge: Dict[int, DirectionKnowledge] = {}

    def gate(self) -> ExplorationAction:
        dist = explore_decision(self.h_nv, self.candidates, self.mask, self.tape, self.V.neighbor_ids)
        teacher = _teacher(self.memory, self.goal)
        if teacher is not None and teacher in self.mask:
            teacher = STOP
        action = self.driver.decide(dist, teacher)
        value = explore_value(self.h_nv, self.tape)
        return ExplorationAction(
            kind=GATE, t=self.t, k=action, s=0, position=self.origin,
            action=action, target=None if action == STOP else self.V.candidates[action].neighbor_id,
            teacher=teacher, log_prob=dist.log_prob(action).item(), value=value.item(),
            graph=(dist, value),
        )

    def explore(self, k: int, gate: Optional[ExplorationAction]) -> ExplorationRound:
        tape = self.tape
        before = _nav_argmax(self.h_nv, self.candidates, tape)
        self.mask.add(k)
        actions = [gate] if gate is not None else []
        visited = [self.V.candidates[k].neighbor_id]
        self.memory.resolve_move(visited[0], EXPLORE)

        v_k = self.candidates[k]
        if self.direct:
            updated, gathered = direct_knowledge(v_k, self.memory.observation(), self.h_nv, tape)
            steps = 1
        else:
            hidden = self.h_nv.shape[0]
            state = ExplorationState(
                h_ep=self.h_nv, c_ep=tape.zeros(hidden), h_kw=tape.zeros(hidden), c_kw=tape.zeros(hidden),
                s=0, direction=k, mask=frozenset(self.mask), position=self.origin,
            )
            state = self._steps(state, k, actions, visited)
            updated = update_knowledge(v_k, state.h_kw, tape)
            gathered = state.h_kw
            steps = state.s

        self.candidates[k] = updated
        self.knowledge[k] = DirectionKnowledge(
            original=self.V.candidates[k].embedding, updated=updated, gathered=gathered,
        )
        self.memory.return_to(self.origin, EXPLORE)
        after = _nav_argmax(self.h_nv, self.candidates, tape)
        LOG.debug('t=%d explored direction %d for %d steps, argmax %d -> %d', self.t, k, steps, before, after)
        return ExplorationRound(
            direction=k, steps=steps, visited=tuple(visited), before=before, after=after, actions=actions,
        )

    def _steps(self, state: ExplorationState, k: int, actions: List[ExplorationAction], visited: List[int]):
        tape = self.tape
        Y_prev = self.V
        a_emb = self.V.candidates[k].embedding
        while True:
            state = explore_state_step(state, Y_prev, a_emb, self.h_nv, tape)
            Y = self.memory.observation()
            h_kw, c_kw = store(gather(Y, state.h_ep, tape), (state.h_kw, state.c_kw), tape)
            state = ExplorationState(
                h_ep=state.h_ep, c_ep=state.c_ep, h_kw=h_kw, c_kw=c_kw, s=state.s,
                direction=k, mask=state.mask, position=self.memory.logical_position,
            )
            executed = state.s < self.smax
            if not executed and not self.lookahead:
                return state

            dist = explore_policy(state, Y, tape)
            teacher = _teacher(self.memory, self.goal)
            action = self.driver.decide(dist, teacher) if executed else teacher
            value = explore_value(state.h_ep, tape)
            actions.append(ExplorationAction(
                kind=STEP, t=self.t, k=k, s=state.s, position=state.position,
                action=action, target=None if action == STOP else Y.candidates[action].neighbor_id,
                teacher=teacher, log_prob=dist.log_prob(action).item(), value=value.item(),
                executed=executed, graph=(dist, value),
            ))
            if not executed or action == STOP:
                return state

            target = Y.candidates[action].neighbor_id
            self.memory.resolve_move(target, EXPLORE)
            visited.append(target)
            Y_prev = Y
            a_emb = Y.candidates[action].embedding


def run_exploration(
    h_nv: Value, V: PanoramicObservation, memory: MemoryGraph, mode: Mode, smax: int, tape: Tape, *,
    t: int = 0, driver: Driver = None, goal: Optional[int] = None, explore_all: bool = False,
    direct: bool = False,
) -> Tuple[List[Value], ExplorationTrace]:
    """Explore around the current viewpoint and return the updated candidate embeddings.

    The naive mode explores every direction once, in candidate order. The
    decision and full modes ask the gate where to go next until it picks STOP
    or nothing is left; only the full mode walks further than one step.
    """
    mode = Mode(mode)
    if smax < 1:
        raise ValueError('smax must be at least 1')
    if mode.single_step:
        smax = 1
    if direct and smax != 1:
        raise ValueError('direct knowledge updates need smax = 1')
    if driver is None:
        driver = GreedyDriver()

    lookahead = mode is Mode.FULL and driver.name == 'teacher'
    run = _Exploration(h_nv, V, memory, tape, t, smax, driver, goal, lookahead, direct)
    pre_argmax = _nav_argmax(h_nv, run.candidates, tape)
    trace = ExplorationTrace(pre_argmax=pre_argmax, post_argmax=pre_argmax)
    if not mode.explores:
        return run.candidates, trace

    explore_all = explore_all or mode is Mode.NAIVE
    for _ in range(len(V.candidates) + 1):
        if explore_all:
            remaining = [k for k in range(len(V.candidates)) if k not in run.mask]
            if not remaining:
                break
            trace.rounds.append(run.explore(remaining[0], gate=None))
            continue
        gate = run.gate()
        if gate.action == STOP:
            trace.stop = gate
            break
        trace.rounds.append(run.explore(gate.action, gate))

    trace.post_argmax = _nav_argmax(h_nv, run.candidates, tape)
    trace.knowledge = run.knowledge
    return run.candidates, trace
