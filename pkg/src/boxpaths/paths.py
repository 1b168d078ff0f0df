"""Skew Dyck paths, k-box paths and their ascent compositions.

A skew Dyck path is a word over U (up), D (down) and L (down-left) that
avoids the factors UL and LU, has #U = #D + #L, and never dips below the
x-axis.  A k-box path of size n is a skew Dyck path of semilength
(k+2)n - 1 with exactly n UD^kL-factors; every such path has the shape

    U^a1 D^k L D  U^a2 D^k L D  ...  U^a(n-1) D^k L D  U^an D^k L

with positive ascents a_i summing to (k+2)n - 1 whose prefix sums satisfy
a_1 + ... + a_i >= (k+2)i for i < n.  The tuple (a_1, ..., a_n) is the
canonical composition form used throughout the package.

k = 0 is supported by convention: the 0-box paths of size n are the Dyck
paths of semilength n - 1 (rewrite every D as ULD and append UL to see the
shape above with virtual ascents b_i + 1, ..., 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class Step(str, Enum):
    UP = "U"
    DOWN = "D"
    LEFT = "L"


_ALPHABET = frozenset("UDL")


class ParseError(ValueError):
    """Input text is not a word over {U, D, L}; carries the bad index."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} at index {index}")
        self.index = index


class InvalidPathError(ValueError):
    """The word is structurally invalid for the requested operation."""


@dataclass(frozen=True)
class PathWord:
    """A word over {U, D, L}; carries no validity promise beyond its alphabet."""

    word: str

    def __post_init__(self) -> None:
        for i, ch in enumerate(self.word):
            if ch not in _ALPHABET:
                raise ParseError(f"unexpected character {ch!r}", i)

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(ch) for ch in self.word)

    @property
    def semilength(self) -> int:
        return self.word.count("U")

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word


def parse_path(text: str) -> PathWord:
    """Parse a path word, rejecting any character outside {U, D, L}."""
    return PathWord(text.strip())


@dataclass(frozen=True)
class PathStats:
    """One-pass statistics of a valid skew Dyck path."""

    semilength: int
    returns: int
    ascents: int
    long_ascents: int
    _word: str = field(repr=False)

    def factor_count(self, k: int) -> int:
        """Number of UD^kL-factors (occurrences cannot overlap)."""
        if k < 0:
            raise ValueError("k must be >= 0")
        return self._word.count("U" + "D" * k + "L")


@dataclass(frozen=True)
class PathClass:
    """Result of classify(): family membership plus a failure diagnostic."""

    skew_dyck: bool
    reason: str | None
    dyck: bool
    semilength: int | None
    k: int | None = None
    box_size: int | None = None
    tailed: bool = False
    augmented_size: int | None = None

    def family(self) -> str:
        if not self.skew_dyck:
            return "Invalid"
        if self.box_size is not None:
            tag = "TailedKBox" if self.tailed else "KBox"
            return f"{tag}({self.k}, {self.box_size})"
        if self.augmented_size is not None:
            return f"AugmentedKDyck({self.k}, {self.augmented_size})"
        return "Dyck" if self.dyck else "SkewDyck"


def _scan_skew(word: str) -> tuple[bool, str | None]:
    height = 0
    for i, ch in enumerate(word):
        if ch == "U":
            if i > 0 and word[i - 1] == "L":
                return False, f"forbidden factor LU at index {i - 1}"
            height += 1
        else:
            if ch == "L" and i > 0 and word[i - 1] == "U":
                return False, f"forbidden factor UL at index {i - 1}"
            height -= 1
            if height < 0:
                return False, f"path dips below the x-axis at index {i}"
    if height != 0:
        return False, f"path ends at height {height}, not 0"
    return True, None


def classify(path: PathWord, k: int | None = None) -> PathClass:
    """Classify a word within the skew Dyck hierarchy, for parameter k if given."""
    word = path.word
    ok, reason = _scan_skew(word)
    if not ok:
        return PathClass(False, reason, False, None, k=k)
    dyck = "L" not in word
    semilength = path.semilength
    cls = PathClass(True, None, dyck, semilength, k=k)
    if k is None:
        return cls
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        if dyck:
            return PathClass(True, None, True, semilength, k=0,
                             box_size=semilength + 1, tailed=True)
        return cls
    n = path.word.count("U" + "D" * k + "L")
    if n >= 1 and semilength == (k + 2) * n - 1:
        tail = "U" * (k + 1) + "D" * k + "L"
        return PathClass(True, None, dyck, semilength, k=k, box_size=n,
                         tailed=word.endswith(tail))
    if k >= 2:
        m = _augmented_block_count(word, k)
        if m is not None:
            return PathClass(True, None, dyck, semilength, k=k,
                             augmented_size=m)
    return cls


def _augmented_block_count(word: str, k: int) -> int | None:
    """Number of U^a D^(k-1) L D blocks if the word is exactly such blocks."""
    block_down = "D" * (k - 1) + "L" + "D"
    i, m = 0, 0
    while i < len(word):
        a = 0
        while i < len(word) and word[i] == "U":
            i += 1
            a += 1
        if a == 0 or word[i : i + k + 1] != block_down:
            return None
        i += k + 1
        m += 1
    return m


def stats(path: PathWord) -> PathStats:
    """Semilength, returns, ascents and long ascents of a skew Dyck path."""
    ok, reason = _scan_skew(path.word)
    if not ok:
        raise InvalidPathError(f"not a skew Dyck path: {reason}")
    height = 0
    returns = 0
    ascents = 0
    long_ascents = 0
    run = 0
    for ch in path.word:
        if ch == "U":
            height += 1
            run += 1
        else:
            if run:
                ascents += 1
                if run >= 2:
                    long_ascents += 1
                run = 0
            height -= 1
            if height == 0:
                returns += 1
    return PathStats(path.semilength, returns, ascents, long_ascents,
                     _word=path.word)


@dataclass(frozen=True)
class Composition:
    """Ascent tuple (a_1, ..., a_n) of a k-box path, k >= 1."""

    k: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("composition form needs k >= 1")
        n = len(self.parts)
        if n == 0:
            raise ValueError("composition must have at least one part")
        for i, a in enumerate(self.parts):
            if a < 1:
                raise ValueError(f"part at index {i} is {a}, must be positive")
        total = (self.k + 2) * n - 1
        if sum(self.parts) != total:
            raise ValueError(
                f"parts sum to {sum(self.parts)}, expected {total}")
        s = 0
        for i, a in enumerate(self.parts[:-1]):
            s += a
            if s < (self.k + 2) * (i + 1):
                raise ValueError(
                    f"prefix sum {s} at index {i} is below {(self.k + 2) * (i + 1)}")

    @property
    def size(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.parts)


def parse_composition(text: str, k: int) -> Composition:
    """Parse comma-separated ascents like "3,3,2" for the given k."""
    items = text.strip().split(",")
    try:
        parts = tuple(int(s) for s in items)
    except ValueError as exc:
        raise ValueError(f"composition entries must be integers: {exc}") from exc
    return Composition(k, parts)


def box_ascents(path: PathWord, k: int) -> tuple[int, ...]:
    """Ascent tuple of a k-box path; for k = 0 the virtual tuple (b_i + 1, ..., 1).

    The k = 0 case reads a Dyck path U^b1 D ... U^bm D as the virtual box
    path obtained by rewriting D -> ULD and appending UL.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        cls = classify(path, 0)
        if cls.box_size is None:
            raise InvalidPathError(
                f"not a Dyck path: {cls.reason or 'contains L steps'}")
        runs: list[int] = []
        a = 0
        for ch in path.word:
            if ch == "U":
                a += 1
            else:
                runs.append(a + 1)
                a = 0
        runs.append(1)
        return tuple(runs)
    word = path.word
    block_down = "D" * k + "L"
    parts: list[int] = []
    i = 0
    while i < len(word):
        a = 0
        while i < len(word) and word[i] == "U":
            i += 1
            a += 1
        if a == 0 or word[i : i + k + 1] != block_down:
            raise InvalidPathError(
                f"not a {k}-box path: malformed block at index {i}")
        i += k + 1
        parts.append(a)
        if i < len(word):
            if word[i] != "D":
                raise InvalidPathError(
                    f"not a {k}-box path: expected D at index {i}")
            i += 1
            if i == len(word):
                raise InvalidPathError(
                    f"not a {k}-box path: trailing D at index {i - 1}")
    comp = Composition(k, tuple(parts))
    return comp.parts


def composition_of(path: PathWord, k: int) -> Composition:
    """Canonical composition of a k-box path; rejects k = 0."""
    if k < 1:
        raise ValueError("composition form needs k >= 1 (0-box paths are "
                         "plain Dyck paths and have no UL-free template)")
    return Composition(k, box_ascents(path, k))


def path_of_composition(comp: Composition) -> PathWord:
    """Rebuild the k-box path word from its composition."""
    k = comp.k
    inner = "D" * k + "L" + "D"
    pieces = ["U" * a + inner for a in comp.parts[:-1]]
    pieces.append("U" * comp.parts[-1] + "D" * k + "L")
    return PathWord("".join(pieces))


def box_return_count(path: PathWord, k: int) -> int:
    """Returns of a k-box path; the k = 0 virtual tail adds one return."""
    st = stats(path)
    return st.returns + 1 if k == 0 else st.returns


def box_long_ascent_count(path: PathWord, k: int) -> int:
    """Long ascents of a k-box path; for k = 0 every virtual ascent is long,
    so this is the ascent (equivalently peak) count of the Dyck word."""
    st = stats(path)
    return st.ascents if k == 0 else st.long_ascents


def generate_skew_dyck(semilength: int, allow_left: bool = True) -> Iterator[PathWord]:
    """Yield all skew Dyck paths of the given semilength, lexicographically (U < D < L)."""
    if semilength < 0:
        raise ValueError("semilength must be >= 0")
    buf: list[str] = []

    def rec(u_left: int, d_left: int, height: int, prev: str) -> Iterator[PathWord]:
        if u_left == 0 and d_left == 0:
            yield PathWord("".join(buf))
            return
        if u_left and prev != "L" and height + 1 <= d_left:
            buf.append("U")
            yield from rec(u_left - 1, d_left, height + 1, "U")
            buf.pop()
        if height > 0:
            buf.append("D")
            yield from rec(u_left, d_left - 1, height - 1, "D")
            buf.pop()
            if allow_left and prev != "U":
                buf.append("L")
                yield from rec(u_left, d_left - 1, height - 1, "L")
                buf.pop()

    return rec(semilength, semilength, 0, "")


def generate_dyck(semilength: int) -> Iterator[PathWord]:
    """Yield all Dyck paths of the given semilength, lexicographically (U < D)."""
    return generate_skew_dyck(semilength, allow_left=False)


def generate_k_box(k: int, n: int) -> Iterator[PathWord]:
    """Yield all k-box paths of size n in lexicographic word order."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    if k == 0:
        yield from generate_dyck(n - 1)
        return
    total = (k + 2) * n - 1
    parts: list[int] = []

    def rec(i: int, prefix: int) -> Iterator[PathWord]:
        if i == n - 1:
            parts.append(total - prefix)
            yield path_of_composition(Composition(k, tuple(parts)))
            parts.pop()
            return
        # larger ascent first: the template puts D right after the run,
        # so descending a_i is ascending word order under U < D < L
        lo = max(1, (k + 2) * (i + 1) - prefix)
        hi = total - prefix - (n - 1 - i)
        for a in range(hi, lo - 1, -1):
            parts.append(a)
            yield from rec(i + 1, prefix + a)
            parts.pop()

    yield from rec(0, 0)
