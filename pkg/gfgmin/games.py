"""GFGness oracle: the letter game against the determinized automaton.

The adversary picks letters, the protagonist resolves the nondeterminism of
the automaton, and the determinized automaton tracks whether the word is in
the language. The game is a max-parity game with three priorities, solved
with McNaughton-Zielonka recursion.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, Mapping, Optional, Set, Tuple

import networkx as nx

from .automaton import TNCW, require_total
from .language import LassoWord, breakpoint_determinize

log = logging.getLogger(__name__)

PROTAGONIST = 0
ADVERSARY = 1

Region = Set[Hashable]
Moves = Dict[Hashable, Hashable]


def _attractor(game: nx.DiGraph, nodes: Region, target: Region, player: int) -> Tuple[Region, Moves]:
    """Nodes of `nodes` from which `player` forces a visit to `target`, with the forcing moves."""
    attr = set(target)
    moves: Moves = {}
    remaining: Dict[Hashable, int] = {}
    queue = deque(attr)
    while queue:
        v = queue.popleft()
        for u in game.predecessors(v):
            if u not in nodes or u in attr:
                continue
            if game.nodes[u]["player"] == player:
                attr.add(u)
                moves[u] = v
                queue.append(u)
            else:
                if u not in remaining:
                    remaining[u] = sum(1 for w in game.successors(u) if w in nodes)
                remaining[u] -= 1
                if remaining[u] == 0:
                    attr.add(u)
                    queue.append(u)
    return attr, moves


def _solve(game: nx.DiGraph, nodes: Region) -> Tuple[Tuple[Region, Region], Tuple[Moves, Moves]]:
    if not nodes:
        return (set(), set()), ({}, {})
    top = max(game.nodes[v]["priority"] for v in nodes)
    player = top % 2
    opponent = 1 - player
    target = {v for v in nodes if game.nodes[v]["priority"] == top}
    attr, attr_moves = _attractor(game, nodes, target, player)
    (win, moves) = _solve(game, nodes - attr)

    if not win[opponent]:
        regions: list = [set(), set()]
        strategies: list = [{}, {}]
        regions[player] = set(nodes)
        strategies[player] = {**moves[player], **attr_moves}
        for v in target:
            if game.nodes[v]["player"] == player:
                strategies[player][v] = min(w for w in game.successors(v) if w in nodes)
        return (regions[0], regions[1]), (strategies[0], strategies[1])

    lost, lost_moves = _attractor(game, nodes, win[opponent], opponent)
    (win2, moves2) = _solve(game, nodes - lost)
    regions = [set(), set()]
    strategies = [{}, {}]
    regions[opponent] = win2[opponent] | lost
    strategies[opponent] = {
        **{v: m for v, m in moves[opponent].items() if v in win[opponent]},
        **lost_moves,
        **moves2[opponent],
    }
    regions[player] = win2[player]
    strategies[player] = moves2[player]
    return (regions[0], regions[1]), (strategies[0], strategies[1])


def solve_parity_game(game: nx.DiGraph) -> Tuple[Tuple[Region, Region], Tuple[Moves, Moves]]:
    """Winning regions and positional strategies of a max-parity game.

    Nodes carry ``player`` (0 wins on even top priority) and ``priority``
    attributes; every node needs a successor.
    """
    return _solve(game, set(game.nodes))


@dataclass(eq=False)
class Strategy:
    """Positional protagonist strategy on the arena of an automaton and its determinization.

    ``moves`` maps (state, macro-state, symbol) to the chosen successor state.
    """
    automaton: TNCW
    determinized: TNCW
    moves: Mapping[Tuple[int, int, int], int] = field(default_factory=dict)

    def choose(self, p: int, d: int, symbol: int) -> int:
        choice = self.moves.get((p, d, symbol))
        if choice is None:
            choice = self.automaton.successors(p, symbol)[0][0]
        return choice

    def induced_run_accepts(self, w: LassoWord) -> bool:
        """Run the automaton on w following the strategy and report whether the run accepts."""
        a, det = self.automaton, self.determinized
        p, d = a.initial, det.initial
        for s in w.prefix:
            p, d = self.choose(p, d, s), det.successors(d, s)[0][0]
        seen: Dict[Tuple[int, int, int], int] = {}
        flags = []
        pos = 0
        while (p, d, pos) not in seen:
            seen[(p, d, pos)] = len(flags)
            s = w.period[pos]
            nxt = self.choose(p, d, s)
            flags.append(dict(a.successors(p, s))[nxt])
            p, d = nxt, det.successors(d, s)[0][0]
            pos = (pos + 1) % len(w.period)
        return not any(flags[seen[(p, d, pos)]:])


def letter_game(a: TNCW, det: TNCW) -> nx.DiGraph:
    """Arena reachable from (initial, initial).

    Adversary nodes are ("adv", p, d, c) where c is the priority of the edge
    that entered them; protagonist nodes are ("pro", p, d, σ). An edge in α
    of the determinized automaton has priority 2, else an α-edge of `a` has
    priority 1, else 0.
    """
    game = nx.DiGraph()
    start = ("adv", a.initial, det.initial, 0)
    game.add_node(start, player=ADVERSARY, priority=0)
    queue = deque([start])
    while queue:
        node = queue.popleft()
        _, p, d, _ = node
        for s in a.letters:
            choice = ("pro", p, d, s)
            if choice not in game:
                game.add_node(choice, player=PROTAGONIST, priority=0)
                (d_next, d_alpha), = det.successors(d, s)
                for p_next, p_alpha in a.successors(p, s):
                    priority = 2 if d_alpha else (1 if p_alpha else 0)
                    nxt = ("adv", p_next, d_next, priority)
                    if nxt not in game:
                        game.add_node(nxt, player=ADVERSARY, priority=priority)
                        queue.append(nxt)
                    game.add_edge(choice, nxt)
            game.add_edge(node, choice)
    return game


def gfg_check(a: TNCW) -> Tuple[bool, Optional[Strategy]]:
    """Decide whether `a` is good-for-games; on success also return a winning strategy."""
    require_total(a)
    det = breakpoint_determinize(a)
    game = letter_game(a, det)
    (win, _), (moves, _) = solve_parity_game(game)
    start = ("adv", a.initial, det.initial, 0)
    log.debug("Letter game with %d nodes, protagonist wins %d", game.number_of_nodes(), len(win))
    if start not in win:
        return False, None
    table = {
        (p, d, s): target[1]
        for (kind, p, d, s), target in moves.items()
        if kind == "pro" and (kind, p, d, s) in win
    }
    return True, Strategy(a, det, table)
