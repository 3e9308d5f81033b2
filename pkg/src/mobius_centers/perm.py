"""
Permutations of {1..n} in one-line notation.

Conventions, fixed once and used everywhere downstream:

- ``compose(u, v)`` is the function composition ``(u o v)(x) = u(v(x))``.
- ``s_i`` is the transposition swapping the *values* i and i+1.  Hence left
  multiplication by ``s_i`` swaps values in the one-line word and right
  multiplication swaps positions i and i+1.
- ``length(w)`` is the inversion count of the one-line word.

>>> compose(generator(3, 1), generator(3, 2)).image
(2, 3, 1)
>>> reduced_word(longest_element(3))
(1, 2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _lex_images

__all__ = [
    "MAX_N",
    "Word",
    "Permutation",
    "identity",
    "generator",
    "longest_element",
    "compose",
    "inverse",
    "left_descent",
    "evaluate",
    "reduced_word",
    "conjugate_by_w0",
    "swap_values",
    "swap_positions",
    "PermTable",
    "symmetric_group",
]

# Hard cap: n! storage beyond 12 is out of desk scale.
MAX_N = 12

# A word is a sequence of generator indices, each in 1..n-1.  No reducedness
# is required; evaluate() accepts any letters.
Word = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``image[p-1] = w(p)``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        n = len(image)
        if not 1 <= n <= MAX_N:
            raise ValueError(f"number of strands must be in 1..{MAX_N}, got {n}")
        if sorted(image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {image}")

    @property
    def n(self) -> int:
        return len(self.image)

    @cached_property
    def length(self) -> int:
        """Inversion count of the one-line word.

        >>> Permutation((2, 3, 1)).length
        2
        """
        image = self.image
        n = len(image)
        return sum(
            1 for x in range(n) for y in range(x + 1, n) if image[x] > image[y]
        )

    def __call__(self, p: int) -> int:
        return self.image[p - 1]

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def generator(n: int, i: int) -> Permutation:
    """The adjacent transposition ``s_i`` exchanging i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index must be in 1..{n - 1}, got {i}")
    image = list(range(1, n + 1))
    image[i - 1], image[i] = image[i], image[i - 1]
    return Permutation(tuple(image))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation [n, n-1, ..., 1], of length n(n-1)/2."""
    return Permutation(tuple(range(n, 0, -1)))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Function composition ``(u o v)(x) = u(v(x))``."""
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    ui = u.image
    return Permutation(tuple(ui[x - 1] for x in v.image))


def inverse(w: Permutation) -> Permutation:
    image = [0] * w.n
    for p, q in enumerate(w.image, start=1):
        image[q - 1] = p
    return Permutation(tuple(image))


def swap_values(w: Permutation, i: int) -> Permutation:
    """``s_i o w``: the one-line word with values i and i+1 exchanged."""
    return Permutation(
        tuple(i + 1 if q == i else i if q == i + 1 else q for q in w.image)
    )


def swap_positions(w: Permutation, i: int) -> Permutation:
    """``w o s_i``: the one-line word with positions i and i+1 exchanged."""
    image = list(w.image)
    image[i - 1], image[i] = image[i], image[i - 1]
    return Permutation(tuple(image))


def left_descent(w: Permutation, i: int) -> bool:
    """True iff ``length(s_i o w) < length(w)``.

    Equivalent to the value i appearing after the value i+1 in the one-line
    word, which is what is checked here.
    """
    if not 1 <= i <= w.n - 1:
        raise ValueError(f"generator index must be in 1..{w.n - 1}, got {i}")
    return w.image.index(i) > w.image.index(i + 1)


def evaluate(word: Word, n: int) -> Permutation:
    """The product ``s_{i_1} o ... o s_{i_k}`` of the letters of ``word``."""
    w = identity(n)
    for i in reversed(word):
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter out of range 1..{n - 1}: {i}")
        w = swap_values(w, i)
    return w


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> Word:
    """The lexicographically smallest reduced word for ``w``.

    Greedy: the set of possible first letters of a reduced word is exactly
    the left descent set, so repeatedly stripping the smallest descent is
    lexicographically minimal.

    >>> reduced_word(Permutation((3, 2, 1)))
    (1, 2, 1)
    """
    letters = []
    n = w.n
    while True:
        for i in range(1, n):
            if left_descent(w, i):
                letters.append(i)
                w = swap_values(w, i)
                break
        else:
            return tuple(letters)


def conjugate_by_w0(w: Permutation) -> Permutation:
    """``w0 o w o w0``; an involution that preserves length and sends
    ``s_i`` to ``s_{n-i}``."""
    n = w.n
    return Permutation(tuple(n + 1 - w.image[n - x] for x in range(1, n + 1)))


@dataclass(frozen=True)
class PermTable:
    """All of S_n indexed by lexicographic rank of the one-line word.

    ``lmul[i-1][k]`` is the index of ``s_i o perms[k]`` and ``rmul[i-1][k]``
    the index of ``perms[k] o s_i``.  Every exhaustive computation downstream
    (spans, commutants, class closures) runs on these integer tables.
    """

    n: int
    perms: tuple[Permutation, ...]
    index: dict[tuple[int, ...], int]
    lengths: tuple[int, ...]
    lmul: tuple[tuple[int, ...], ...]
    rmul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    w0: int

    def rank(self, w: Permutation) -> int:
        return self.index[w.image]

    @property
    def order(self) -> int:
        return len(self.perms)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> PermTable:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"number of strands must be in 1..{MAX_N}, got {n}")
    perms = tuple(Permutation(img) for img in _lex_images(range(1, n + 1)))
    index = {w.image: k for k, w in enumerate(perms)}
    lengths = tuple(w.length for w in perms)
    lmul = tuple(
        tuple(index[swap_values(w, i).image] for w in perms) for i in range(1, n)
    )
    rmul = tuple(
        tuple(index[swap_positions(w, i).image] for w in perms) for i in range(1, n)
    )
    inv = tuple(index[inverse(w).image] for w in perms)
    return PermTable(
        n=n,
        perms=perms,
        index=index,
        lengths=lengths,
        lmul=lmul,
        rmul=rmul,
        inv=inv,
        w0=index[longest_element(n).image],
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
