"""
Legal words of a connected monomial algebra.

A word is legal when it contains no forbidden word as a factor. Legality is
decided by a forbidden-factor automaton: the trie of forbidden words with
failure links (the Aho-Corasick construction), made total over the alphabet,
with every state at or past a complete forbidden word collapsed into a single
absorbing DEAD state.

The automaton drives:
- is_legal(): membership test
- enumerate_by_length(): L_n in lexicographic generator order, with a budget cap
- count_by_length() / count_by_degree(): dynamic programs over automaton states
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from config import get_pipeline_config
from core.logging_config import get_logger
from core.models import MonomialPresentation, Word, spell_word

logger = get_logger(__name__)

ROOT = 0
DEAD = -1


class BudgetExceededError(ValueError):
    """Raised when an enumeration would produce more words than the configured cap."""

    def __init__(self, budget: int, length: int):
        self.budget = budget
        self.length = length
        super().__init__(
            f"enumeration budget exceeded: more than {budget} legal words of length {length}"
        )


class UnknownLetterError(ValueError):
    """Raised when a word uses a letter outside the presentation's alphabet."""


@dataclass(frozen=True)
class DegreeSeries:
    """
    Integer coefficients indexed by degree 0..N.

    Holds dim_k A_d (legal words of degree d) or path counts of degree d.
    """

    coefficients: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    def difference(self, other: "DegreeSeries") -> "DegreeSeries":
        """Coefficientwise self - other over the common degree range."""
        size = min(len(self), len(other))
        return DegreeSeries(tuple(self[d] - other[d] for d in range(size)))


@dataclass(frozen=True)
class FactorAutomaton:
    """
    Deterministic automaton recognising words that avoid every forbidden factor.

    Attributes:
        alphabet: Letters in generator declaration order
        degrees: Degree of each letter, aligned with alphabet
        prefixes: The prefix of a forbidden word that each live state stands for
                  (state 0 is the empty word)
        transitions: transitions[state][letter_index] -> live state or DEAD
    """

    alphabet: tuple[str, ...]
    degrees: tuple[int, ...]
    prefixes: tuple[Word, ...]
    transitions: tuple[tuple[int, ...], ...]

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return {letter: index for index, letter in enumerate(self.alphabet)}

    def index_of(self, letter: str) -> int:
        try:
            return self.letter_index[letter]
        except KeyError:
            raise UnknownLetterError(f"unknown letter {letter!r}") from None

    def step(self, state: int, letter: str) -> int:
        if state == DEAD:
            return DEAD
        return self.transitions[state][self.index_of(letter)]

    def run(self, word: Iterable[str], state: int = ROOT) -> int:
        for letter in word:
            state = self.step(state, letter)
            if state == DEAD:
                return DEAD
        return state


def build_automaton(presentation: MonomialPresentation) -> FactorAutomaton:
    """
    Build the forbidden-factor automaton of a presentation.

    Unreduced forbidden sets are fine: a forbidden word that contains another
    as a factor simply leads into DEAD earlier.

    Args:
        presentation: Validated monomial presentation

    Returns:
        FactorAutomaton with at most 1 + sum(|w| for w in forbidden) live states
    """
    letters = presentation.letters
    width = len(letters)

    # Trie of forbidden words
    goto: list[dict[str, int]] = [{}]
    terminal = [False]
    prefix: list[Word] = [()]
    for word in presentation.forbidden:
        node = ROOT
        for letter in word:
            child = goto[node].get(letter)
            if child is None:
                child = len(goto)
                goto[node][letter] = child
                goto.append({})
                terminal.append(False)
                prefix.append(prefix[node] + (letter,))
            node = child
        terminal[node] = True

    size = len(goto)
    fail = [ROOT] * size
    dead = [False] * size
    delta = [[ROOT] * width for _ in range(size)]

    # Breadth-first: failure targets are shallower, so their data is final
    queue: deque[int] = deque()
    order = [ROOT]
    for i, letter in enumerate(letters):
        child = goto[ROOT].get(letter)
        if child is not None:
            delta[ROOT][i] = child
            queue.append(child)

    while queue:
        state = queue.popleft()
        order.append(state)
        dead[state] = terminal[state] or dead[fail[state]]
        for i, letter in enumerate(letters):
            child = goto[state].get(letter)
            if child is None:
                delta[state][i] = delta[fail[state]][i]
            else:
                fail[child] = delta[fail[state]][i]
                delta[state][i] = child
                queue.append(child)

    live = [state for state in order if not dead[state]]
    renumber = {state: index for index, state in enumerate(live)}
    transitions = tuple(
        tuple(
            DEAD if dead[delta[state][i]] else renumber[delta[state][i]]
            for i in range(width)
        )
        for state in live
    )

    automaton = FactorAutomaton(
        alphabet=letters,
        degrees=tuple(generator.degree for generator in presentation.generators),
        prefixes=tuple(prefix[state] for state in live),
        transitions=transitions,
    )
    logger.debug(
        f"Built factor automaton: {automaton.num_states} live states over "
        f"{width} letters from {len(presentation.forbidden)} forbidden words"
    )
    return automaton


def is_legal(automaton: FactorAutomaton, word: Iterable[str]) -> bool:
    """True iff no forbidden factor occurs in the word."""
    return automaton.run(word) != DEAD


def naive_is_legal(forbidden: Iterable[Word], word: Word) -> bool:
    """Brute-force factor scan; the reference oracle for is_legal."""
    word = tuple(word)
    for bad in forbidden:
        size = len(bad)
        for start in range(len(word) - size + 1):
            if word[start:start + size] == bad:
                return False
    return True


def iter_by_length(automaton: FactorAutomaton, n: int) -> Iterator[Word]:
    """Yield legal words of length n in lexicographic generator order."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")

    stack: list[tuple[int, Word]] = [(ROOT, ())]
    while stack:
        state, word = stack.pop()
        if len(word) == n:
            yield word
            continue
        row = automaton.transitions[state]
        # Reverse push so the first letter is expanded first
        for i in range(len(automaton.alphabet) - 1, -1, -1):
            nxt = row[i]
            if nxt != DEAD:
                stack.append((nxt, word + (automaton.alphabet[i],)))


def enumerate_by_length(
    automaton: FactorAutomaton,
    n: int,
    budget: Optional[int] = None,
) -> list[Word]:
    """
    List L_n, the legal words of length n.

    Args:
        automaton: Factor automaton of the presentation
        n: Word length (>= 0)
        budget: Maximum number of words (defaults to enumeration.budget)

    Returns:
        Legal words in lexicographic order of the generator ordering

    Raises:
        BudgetExceededError: If |L_n| exceeds the budget
    """
    if budget is None:
        budget = get_pipeline_config().enumeration.budget

    words = []
    for word in iter_by_length(automaton, n):
        words.append(word)
        if len(words) > budget:
            raise BudgetExceededError(budget, n)

    logger.debug(f"Enumerated {len(words)} legal words of length {n}")
    return words


def count_by_length(automaton: FactorAutomaton, n: int) -> int:
    """|L_n| by dynamic programming over automaton states (no budget)."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")

    counts = [0] * automaton.num_states
    counts[ROOT] = 1
    for _ in range(n):
        following = [0] * automaton.num_states
        for state, count in enumerate(counts):
            if not count:
                continue
            for nxt in automaton.transitions[state]:
                if nxt != DEAD:
                    following[nxt] += count
        counts = following
    return sum(counts)


def count_by_degree(automaton: FactorAutomaton, max_degree: int) -> DegreeSeries:
    """
    Count legal words by degree: coefficient d is dim_k A_d.

    Dynamic program over (degree, state); a letter of degree k moves mass from
    degree d to d + k.

    Args:
        automaton: Factor automaton of the presentation
        max_degree: Truncation degree N (>= 0)

    Returns:
        DegreeSeries with coefficients for degrees 0..N
    """
    if max_degree < 0:
        raise ValueError(f"max degree must be non-negative, got {max_degree}")

    table = [[0] * automaton.num_states for _ in range(max_degree + 1)]
    table[0][ROOT] = 1
    for degree in range(max_degree + 1):
        row = table[degree]
        for state, count in enumerate(row):
            if not count:
                continue
            for i, nxt in enumerate(automaton.transitions[state]):
                target = degree + automaton.degrees[i]
                if nxt != DEAD and target <= max_degree:
                    table[target][nxt] += count

    return DegreeSeries(tuple(sum(row) for row in table))
