"""Sets of dice, pairwise win probabilities, and realization search.

Probabilities are exact ``fractions.Fraction`` values throughout.  Two dice
with k faces each are compared by counting the c out of k * k face pairs won
by the first die; it beats the second when c > k * k / 2, strictly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .digraph import StrictDigraph
from .errors import BudgetError, InvalidDiceError, ParseError, TooSmallError

WINNER_TO_LOSER = "winner-to-loser"
LOSER_TO_WINNER = "loser-to-winner"

SEARCH_BUDGET = 10_000_000


@dataclass(frozen=True)
class DiceSet:
    """Dice with pairwise disjoint faces, each die the same number of sides.

    Faces are positive integers; each die's faces are stored sorted.
    """

    dice: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.dice:
            raise InvalidDiceError("need at least one die")
        sides = len(self.dice[0])
        if sides == 0:
            raise InvalidDiceError("dice must have at least one face")
        seen: set[int] = set()
        for i, die in enumerate(self.dice):
            if len(die) != sides:
                raise InvalidDiceError(
                    f"die {i} has {len(die)} faces, expected {sides}"
                )
            for face in die:
                if face < 1:
                    raise InvalidDiceError(f"face values must be positive, got {face}")
                if face in seen:
                    raise InvalidDiceError(f"face {face} appears on two dice")
                seen.add(face)
        object.__setattr__(
            self, "dice", tuple(tuple(sorted(die)) for die in self.dice)
        )

    @property
    def count(self) -> int:
        return len(self.dice)

    @property
    def sides(self) -> int:
        return len(self.dice[0])


def parse_dice(text: str) -> DiceSet:
    """One die per line, faces as whitespace-separated positive integers."""
    dice: list[tuple[int, ...]] = []
    seen: dict[int, int] = {}
    sides = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        faces = []
        for token in line.split():
            try:
                face = int(token)
            except ValueError:
                raise ParseError(lineno, f"expected an integer face, got {token!r}")
            if face < 1:
                raise ParseError(lineno, f"face values must be positive, got {face}")
            if face in seen:
                raise ParseError(
                    lineno, f"face {face} already used on line {seen[face]}"
                )
            seen[face] = lineno
            faces.append(face)
        if sides is None:
            sides = len(faces)
        elif len(faces) != sides:
            raise ParseError(
                lineno, f"expected {sides} faces per die, got {len(faces)}"
            )
        dice.append(tuple(faces))
    if not dice:
        raise ParseError(1, "no dice found")
    return DiceSet(tuple(dice))


def serialize_dice(d: DiceSet) -> str:
    return "".join(" ".join(str(f) for f in die) + "\n" for die in d.dice)


def _win_count(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(1 for x in a for y in b if x > y)


def win_probability(a: tuple[int, ...], b: tuple[int, ...]) -> Fraction:
    """Probability that a roll of ``a`` strictly exceeds a roll of ``b``."""
    if not a or not b:
        raise InvalidDiceError("dice must have at least one face")
    if len(a) != len(b):
        raise InvalidDiceError(
            f"dice must have the same number of faces, got {len(a)} and {len(b)}"
        )
    if set(a) & set(b):
        raise InvalidDiceError("dice must not share face values")
    return Fraction(_win_count(a, b), len(a) * len(b))


@dataclass(frozen=True)
class WinMatrix:
    """Pairwise win counts; entry (i, j) is how many of the sides * sides
    face pairs die i wins against die j."""

    counts: tuple[tuple[int, ...], ...]
    sides: int

    def probability(self, i: int, j: int) -> Fraction:
        return Fraction(self.counts[i][j], self.sides * self.sides)


def win_matrix(d: DiceSet) -> WinMatrix:
    counts = tuple(
        tuple(
            0 if i == j else _win_count(d.dice[i], d.dice[j])
            for j in range(d.count)
        )
        for i in range(d.count)
    )
    return WinMatrix(counts, d.sides)


def beats_digraph(d: DiceSet, direction: str = WINNER_TO_LOSER) -> StrictDigraph:
    """Digraph on die indices with an edge for every decided pair.

    A pair is decided when one die wins more than half the face pairs; a
    dead-even pair (possible for an even number of sides) contributes no
    edge.  ``direction`` controls whether edges run winner-to-loser or
    loser-to-winner.
    """
    if direction not in (WINNER_TO_LOSER, LOSER_TO_WINNER):
        raise InvalidDiceError(f"unknown edge direction {direction!r}")
    m = win_matrix(d)
    half = d.sides * d.sides
    edges = set()
    for i in range(d.count):
        for j in range(i + 1, d.count):
            if 2 * m.counts[i][j] > half:
                winner, loser = i, j
            elif 2 * m.counts[j][i] > half:
                winner, loser = j, i
            else:
                continue
            if direction == WINNER_TO_LOSER:
                edges.add((winner, loser))
            else:
                edges.add((loser, winner))
    return StrictDigraph(d.count, frozenset(edges))


def is_balanced(d: DiceSet) -> tuple[bool, Fraction | None]:
    """Whether every pair is decided at the same probability p > 1/2.

    Returns (True, p) for balanced sets and (False, None) otherwise.  A set
    where every pair is dead even is balanced with p = 1/2.
    """
    if d.count < 2:
        raise InvalidDiceError("balance needs at least two dice")
    m = win_matrix(d)
    total = d.sides * d.sides
    tops = {
        max(m.counts[i][j], total - m.counts[i][j])
        for i in range(d.count)
        for j in range(i + 1, d.count)
    }
    if len(tops) != 1:
        return False, None
    return True, Fraction(tops.pop(), total)


def realizes(d: DiceSet, h: StrictDigraph, direction: str = WINNER_TO_LOSER) -> bool:
    """Whether every edge of ``h`` is an edge of the beats digraph of ``d``."""
    if h.n != d.count:
        raise InvalidDiceError(
            f"target has {h.n} vertices but the set has {d.count} dice"
        )
    return h.edges <= beats_digraph(d, direction).edges


def realization_search_space(n: int, k: int) -> int:
    """Number of ways to deal faces 1..n*k into n dice of k faces each."""
    return math.factorial(n * k) // math.factorial(k) ** n


def _has_directed_cycle(g: StrictDigraph) -> bool:
    degree = [0] * g.n
    for _, v in g.edges:
        degree[v] += 1
    queue = [v for v in range(g.n) if degree[v] == 0]
    seen = 0
    adj = g.out_adj()
    while queue:
        u = queue.pop()
        seen += 1
        for v in adj[u]:
            degree[v] -= 1
            if degree[v] == 0:
                queue.append(v)
    return seen < g.n


def search_balanced_realization(
    h: StrictDigraph, k: int, direction: str = WINNER_TO_LOSER
) -> DiceSet | None:
    """Search for a balanced non-transitive dice set realizing ``h``.

    Faces 1..n*k are dealt exhaustively; a deal is accepted when the set is
    balanced at some p > 1/2, its beats digraph contains every edge of
    ``h``, and the beats relation has a directed cycle.  Deals are
    enumerated by assigning values in increasing order to the lowest-index
    die with spare capacity, so the first hit is deterministic.  Returns
    None when no deal on these face counts works.
    """
    if h.n < 3:
        raise TooSmallError(f"need at least 3 dice, got {h.n}")
    if k < 1:
        raise InvalidDiceError(f"dice must have at least one face, got {k}")
    space = realization_search_space(h.n, k)
    if space > SEARCH_BUDGET:
        raise BudgetError(
            f"search space {space} exceeds the budget of {SEARCH_BUDGET}"
        )
    n = h.n
    dice: list[list[int]] = [[] for _ in range(n)]

    def deal(value: int) -> DiceSet | None:
        if value > n * k:
            candidate = DiceSet(tuple(tuple(die) for die in dice))
            balanced, p = is_balanced(candidate)
            if not balanced or 2 * p.numerator <= p.denominator:
                return None
            beats = beats_digraph(candidate, direction)
            if not h.edges <= beats.edges:
                return None
            # cycle existence is invariant under edge reversal, so the
            # direction flag does not matter here
            if not _has_directed_cycle(beats):
                return None
            return candidate
        for i in range(n):
            if len(dice[i]) == k:
                continue
            dice[i].append(value)
            found = deal(value + 1)
            if found is not None:
                return found
            dice[i].pop()
        return None

    return deal(1)
