"""Two-sided matching market with network-restricted acquaintance.

Agents sit on the nodes of a graph and are split into equal sets of women
and men. Each agent holds a strict ranking over the entire opposite side;
a score in [1, 10] is a fixed decreasing function of rank position and does
not depend on any network. A ``SocialCircle`` limits who can actually be
proposed to: only pairs within graph distance ``dep`` recognize each other,
so deferred acceptance may leave agents unmatched even in a balanced market.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .topology import UNREACHABLE, DistanceMatrix


@dataclass(frozen=True)
class Market:
    """Balanced bipartition of agents 0..n-1 with strict mutual rankings.

    ``rank[a]`` lists the full opposite side in a's preference order, best
    first. Construction validates that women and men partition the id space
    evenly and that every rank list is a permutation of the opposite side.
    """

    women: tuple[int, ...]
    men: tuple[int, ...]
    rank: dict[int, tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "women", tuple(sorted(self.women)))
        object.__setattr__(self, "men", tuple(sorted(self.men)))
        object.__setattr__(self, "rank", {a: tuple(v) for a, v in self.rank.items()})
        if len(self.women) != len(self.men):
            raise ValueError("women and men must be equally many")
        n = len(self.women) + len(self.men)
        if sorted(self.women + self.men) != list(range(n)):
            raise ValueError("women and men must partition ids 0..n-1")
        for a in self.women:
            if sorted(self.rank.get(a, ())) != list(self.men):
                raise ValueError(f"rank list of woman {a} is not a permutation of the men")
        for a in self.men:
            if sorted(self.rank.get(a, ())) != list(self.women):
                raise ValueError(f"rank list of man {a} is not a permutation of the women")

    @property
    def n(self) -> int:
        return len(self.women) + len(self.men)

    @property
    def half(self) -> int:
        return len(self.women)

    @cached_property
    def woman_set(self) -> frozenset[int]:
        return frozenset(self.women)

    @cached_property
    def man_set(self) -> frozenset[int]:
        return frozenset(self.men)

    @cached_property
    def _positions(self) -> dict[int, dict[int, int]]:
        return {a: {b: r for r, b in enumerate(ranked)} for a, ranked in self.rank.items()}

    def position(self, agent: int, candidate: int) -> int:
        """0-based rank of ``candidate`` in ``agent``'s list (0 = favorite)."""
        return self._positions[agent][candidate]

    def prefers(self, agent: int, favored: int, other: int) -> bool:
        """True when ``agent`` ranks ``favored`` strictly ahead of ``other``."""
        return self.position(agent, favored) < self.position(agent, other)

    def score(self, agent: int, candidate: int) -> float:
        """Score agent assigns candidate: 10 for the favorite down to 1 for
        the last of h candidates, linear in rank position."""
        h = self.half
        if h == 1:
            return 10.0
        r = self.position(agent, candidate)
        return 1.0 + 9.0 * (h - 1 - r) / (h - 1)


def build_market(n: int, rng: random.Random) -> Market:
    """Draw a random market: genders by a uniform balanced partition, every
    rank list an independent uniform permutation of the opposite side.

    Args:
        n: total number of agents; must be even and at least 2.
        rng: seeded random source.
    """
    if n < 2 or n % 2:
        raise ValueError(f"agent count must be even and >= 2, got {n}")
    women = sorted(rng.sample(range(n), n // 2))
    woman_set = set(women)
    men = [a for a in range(n) if a not in woman_set]
    rank: dict[int, tuple[int, ...]] = {}
    for a in range(n):
        opposite = list(men) if a in woman_set else list(women)
        rng.shuffle(opposite)
        rank[a] = tuple(opposite)
    return Market(tuple(women), tuple(men), rank)


@dataclass(frozen=True, eq=False)
class SocialCircle:
    """Mutual-recognition predicate: pairs within ``dep`` hops know each other."""

    dm: DistanceMatrix
    dep: int

    def __post_init__(self):
        if self.dep < 1:
            raise ValueError(f"recognition depth must be >= 1, got {self.dep}")

    def contains(self, a: int, b: int) -> bool:
        d = int(self.dm.dist[a, b])
        return d != UNREACHABLE and d <= self.dep


@dataclass(frozen=True)
class Matching:
    """Partial one-to-one assignment of women to men, stored as sorted
    (woman, man) pairs."""

    pairs: tuple[tuple[int, int], ...]

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, int]]) -> "Matching":
        normalized = tuple(sorted(tuple(p) for p in pairs))
        women = [w for w, _ in normalized]
        men = [m for _, m in normalized]
        if len(set(women)) != len(women) or len(set(men)) != len(men):
            raise ValueError("matching must pair each agent at most once")
        return Matching(normalized)

    @cached_property
    def by_woman(self) -> dict[int, int]:
        return {w: m for w, m in self.pairs}

    @cached_property
    def by_man(self) -> dict[int, int]:
        return {m: w for w, m in self.pairs}

    def partner_of(self, agent: int) -> Optional[int]:
        """Partner on either side, or None when unmatched on both."""
        if agent in self.by_woman:
            return self.by_woman[agent]
        return self.by_man.get(agent)

    def unmatched_women(self, market: Market) -> list[int]:
        return [w for w in market.women if w not in self.by_woman]

    def unmatched_men(self, market: Market) -> list[int]:
        return [m for m in market.men if m not in self.by_man]


def _candidate_lists(market: Market, circle: Optional[SocialCircle]) -> dict[int, list[int]]:
    if circle is None:
        return {j: list(market.rank[j]) for j in market.men}
    return {j: [i for i in market.rank[j] if circle.contains(j, i)] for j in market.men}


def _deferred_acceptance(market: Market, candidates: dict[int, list[int]],
                         proposal_order: Optional[Sequence[int]]) -> Matching:
    order = list(market.men) if proposal_order is None else list(proposal_order)
    if sorted(order) != list(market.men):
        raise ValueError("proposal_order must be a permutation of the men")
    next_choice = {j: 0 for j in market.men}
    engaged: dict[int, int] = {}
    free = deque(order)
    while free:
        j = free.popleft()
        prefs = candidates[j]
        while next_choice[j] < len(prefs):
            i = prefs[next_choice[j]]
            next_choice[j] += 1
            current = engaged.get(i)
            if current is None:
                engaged[i] = j
                break
            if market.prefers(i, j, current):
                engaged[i] = j
                free.append(current)
                break
        # a man who exhausted every woman he knows stays unmatched
    return Matching.from_pairs(engaged.items())


def restricted_deferred_acceptance(market: Market, circle: SocialCircle,
                                   proposal_order: Optional[Sequence[int]] = None) -> Matching:
    """Man-proposing deferred acceptance over circle-restricted lists.

    Men propose down their rank lists filtered to women they recognize; a
    free woman accepts any proposer she recognizes, an engaged woman trades
    up exactly when she ranks the proposer strictly ahead of her fiance.
    The outcome does not depend on ``proposal_order`` (exposed for testing).
    """
    return _deferred_acceptance(market, _candidate_lists(market, circle), proposal_order)


def classical_gs(market: Market, proposal_order: Optional[Sequence[int]] = None) -> Matching:
    """Man-proposing deferred acceptance with complete lists; matches everyone."""
    return _deferred_acceptance(market, _candidate_lists(market, None), proposal_order)


def agent_utility(market: Market, matching: Matching, agent: int) -> float:
    """Matched agents earn their score for their partner; unmatched earn 0."""
    if agent in market.woman_set:
        partner = matching.by_woman.get(agent)
    elif agent in market.man_set:
        partner = matching.by_man.get(agent)
    else:
        raise ValueError(f"unknown agent id {agent}")
    if partner is None:
        return 0.0
    return market.score(agent, partner)


def pair_utility(market: Market, matching: Matching, woman: int, man: int) -> float:
    """Mean of the two partners' scores for each other; pair must be matched."""
    if matching.by_woman.get(woman) != man:
        raise ValueError(f"({woman}, {man}) is not a matched pair")
    return (market.score(woman, man) + market.score(man, woman)) / 2.0


def average_utility(market: Market, matching: Matching) -> float:
    """Sum of pair utilities divided by the number of potential pairs n/2.

    Unmatched agents contribute zero, so sparse matchings are penalized:
    the divisor stays n/2 regardless of how many pairs actually formed.
    """
    total = sum(pair_utility(market, matching, w, m) for w, m in matching.pairs)
    return total / market.half


def find_blocking_pair(market: Market, circle: SocialCircle,
                       matching: Matching) -> Optional[tuple[int, int]]:
    """First in-circle (woman, man) pair in which both strictly gain by
    pairing up, scanning women in id order and their lists best-first.
    Returns None when the matching is stable."""
    h = market.half
    man_position = {}
    for j in market.men:
        partner = matching.by_man.get(j)
        man_position[j] = h if partner is None else market.position(j, partner)
    for i in market.women:
        partner = matching.by_woman.get(i)
        cutoff = h if partner is None else market.position(i, partner)
        for j in market.rank[i][:cutoff]:
            if circle.contains(i, j) and market.position(j, i) < man_position[j]:
                return (i, j)
    return None


def is_stable(market: Market, circle: SocialCircle, matching: Matching) -> bool:
    """True when no in-circle pair would rather be with each other."""
    return find_blocking_pair(market, circle, matching) is None


def market_to_dict(market: Market) -> dict:
    """JSON-ready form of a market: genders plus rank lists."""
    return {
        "women": list(market.women),
        "men": list(market.men),
        "rank": {str(a): list(ranked) for a, ranked in market.rank.items()},
    }


def market_from_dict(data: dict) -> Market:
    """Rebuild a market serialized by ``market_to_dict``."""
    rank = {int(a): tuple(ranked) for a, ranked in data["rank"].items()}
    return Market(tuple(data["women"]), tuple(data["men"]), rank)


def matching_to_dict(market: Market, circle: SocialCircle, matching: Matching) -> dict:
    """JSON-ready form of a matching with per-pair distance and utility."""
    pairs = [
        {
            "woman": w,
            "man": m,
            "distance": int(circle.dm.dist[w, m]),
            "pair_utility": pair_utility(market, matching, w, m),
        }
        for w, m in matching.pairs
    ]
    return {
        "pairs": pairs,
        "unmatched_women": matching.unmatched_women(market),
        "unmatched_men": matching.unmatched_men(market),
        "average_utility": average_utility(market, matching),
    }
