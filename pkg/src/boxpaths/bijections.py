"""Bijections between k-box paths and their partner families.

All maps take and return path words at the surface and work on the ascent
tuple (a_1, ..., a_n) internally, which makes the k = 0 Dyck convention fall
out of the same arithmetic (see paths.box_ascents).
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import (
    Composition,
    InvalidPathError,
    PathWord,
    box_ascents,
    classify,
    path_of_composition,
)
from .trees import (
    KAryTree,
    KDyckPath,
    TreeTuple,
    _augment,
    _strip_augmented,
    kdyck_to_tree,
    tree_to_kdyck,
)


@dataclass(frozen=True)
class BoxDecomposition:
    """Parts (mu_1, ..., mu_(k+1)) with p = mu_1 U mu_2 U ... mu_(k+1) U D^k L.

    Each part is an augmented (k+1)-Dyck word; part sizes sum to n - 1.
    For k = 0 the single part is the Dyck word rewritten with D -> ULD, a
    word that is not itself skew (it contains UL factors).
    """

    k: int
    parts: tuple[PathWord, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if len(self.parts) != self.k + 1:
            raise ValueError(
                f"expected {self.k + 1} parts, got {len(self.parts)}")


@dataclass(frozen=True)
class KtDyckPath:
    """Word over {U, D} with D = (k,-k), allowed down to y = -t, ending at 0."""

    k: int
    t: int
    word: str

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0 <= self.t <= self.k - 1:
            raise ValueError(f"need 0 <= t <= k-1, got t={self.t}")
        height = 0
        for i, ch in enumerate(self.word):
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= self.k
                if height < -self.t:
                    raise InvalidPathError(
                        f"path dips below y=-{self.t} at index {i}")
            else:
                raise InvalidPathError(
                    f"unexpected character {ch!r} at index {i}")
        if height != 0:
            raise InvalidPathError(f"path ends at height {height}, not 0")

    @property
    def size(self) -> int:
        return self.word.count("D")

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class ThresholdSequence:
    """Strictly increasing s_1 < ... < s_m with k*i <= s_i <= k*m + slack."""

    k: int
    slack: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("threshold family needs k >= 2")
        if not 0 <= self.slack <= self.k - 2:
            raise ValueError(f"need 0 <= slack <= k-2, got {self.slack}")
        m = len(self.entries)
        prev = 0
        for i, s in enumerate(self.entries, start=1):
            if s <= prev:
                raise ValueError(
                    f"entry {s} at index {i - 1} is not strictly increasing")
            if s < self.k * i:
                raise ValueError(
                    f"entry {s} at index {i - 1} is below {self.k}*{i}")
            if s > self.k * m + self.slack:
                raise ValueError(
                    f"entry {s} at index {i - 1} exceeds {self.k * m + self.slack}")
            prev = s

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.entries)


@dataclass(frozen=True)
class NotInvertible:
    """Typed outcome for the partial inverse of the return injection."""

    reason: str


def _require_box(path: PathWord, k: int) -> int:
    cls = classify(path, k)
    if cls.box_size is None:
        raise InvalidPathError(
            f"not a {k}-box path: {cls.reason or 'wrong shape'}")
    return cls.box_size


def _heights(word: str) -> list[int]:
    h = [0] * (len(word) + 1)
    for i, ch in enumerate(word):
        h[i + 1] = h[i] + (1 if ch == "U" else -1)
    return h


def decompose_box(path: PathWord, k: int) -> BoxDecomposition:
    """Split a k-box path into its k+1 augmented (k+1)-Dyck parts.

    Part i+1 is the prefix of the remaining path up to its penultimate
    return to y = i (empty when only one such return is left); one U is
    skipped after each part and D^k L must remain at the end.
    """
    _require_box(path, k)
    if k == 0:
        return BoxDecomposition(0, (PathWord(_augment(path.word, 1)),))
    word = path.word
    h = _heights(word)
    parts: list[PathWord] = []
    pos = 0
    for level in range(k + 1):
        rets = [i for i in range(pos, len(word))
                if word[i] != "U" and h[i + 1] == level]
        end = rets[-2] + 1 if len(rets) >= 2 else pos
        parts.append(PathWord(word[pos:end]))
        if end >= len(word) or word[end] != "U":
            raise InvalidPathError(f"expected separator U at index {end}")
        pos = end + 1
    if word[pos:] != "D" * k + "L":
        raise InvalidPathError(f"expected final D^{k}L at index {pos}")
    return BoxDecomposition(k, tuple(parts))


def compose_box(dec: BoxDecomposition) -> PathWord:
    """Reassemble mu_1 U mu_2 U ... mu_(k+1) U D^k L from decomposition parts."""
    k = dec.k
    if k == 0:
        word = _strip_augmented(dec.parts[0].word, 1)
        path = PathWord(word)
        _require_box(path, 0)
        return path
    for part in dec.parts:
        _strip_augmented(part.word, k + 1)
    word = "".join(p.word + "U" for p in dec.parts) + "D" * k + "L"
    path = PathWord(word)
    _require_box(path, k)
    return path


def box_to_tree_tuple(path: PathWord, k: int) -> TreeTuple:
    """A k-box path of size n as a (k+1)-tuple of (k+2)-ary trees, n-1 nodes."""
    dec = decompose_box(path, k)
    return TreeTuple(tuple(
        kdyck_to_tree(KDyckPath(k + 1, _strip_augmented(p.word, k + 1)))
        for p in dec.parts))


def tree_tuple_to_box(tup: TreeTuple, k: int) -> PathWord:
    """Inverse of box_to_tree_tuple."""
    if len(tup.trees) != k + 1:
        raise ValueError(f"expected {k + 1} trees, got {len(tup.trees)}")
    for tree in tup.trees:
        if tree.arity != k + 2:
            raise ValueError(f"expected arity {k + 2}, got {tree.arity}")
    parts = tuple(PathWord(_augment(tree_to_kdyck(t).word, k + 1))
                  for t in tup.trees)
    return compose_box(BoxDecomposition(k, parts))


def box_to_dyck_prefix(path: PathWord, k: int) -> str:
    """Intermediate of the k_t map: U^(a1-1) D U^(a2-1) ... U^(an-1) over
    {U, D} with D = (k+1,-(k+1)), a (k+1)-Dyck prefix ending at height k."""
    a = box_ascents(path, k)
    return "U" * (a[0] - 1) + "".join("D" + "U" * (x - 1) for x in a[1:])


def box_to_kt_dyck(path: PathWord, k: int) -> KtDyckPath:
    """Map a k-box path of size n to a (k+1)_k-Dyck path of size n - 1.

    Drops the final U D^k L, turns each U D^k L D into one big D step, then
    shifts the leading k up-steps away; for k = 0 this is the identity on
    the underlying Dyck word.
    """
    a = box_ascents(path, k)
    word = ("U" * (a[0] - 1 - k)
            + "".join("D" + "U" * (x - 1) for x in a[1:]))
    return KtDyckPath(k + 1, k, word)


def kt_dyck_to_box(path: KtDyckPath) -> PathWord:
    """Inverse of box_to_kt_dyck; requires t = k - 1 (the box family)."""
    if path.t != path.k - 1:
        raise ValueError(f"box paths map to t = k-1, got k={path.k} t={path.t}")
    k = path.k - 1
    runs: list[int] = []
    run = 0
    for ch in path.word:
        if ch == "U":
            run += 1
        else:
            runs.append(run)
            run = 0
    runs.append(run)
    parts = (runs[0] + 1 + k,) + tuple(c + 1 for c in runs[1:])
    return _path_of_ascents(parts, k)


def _path_of_ascents(parts: tuple[int, ...], k: int) -> PathWord:
    """Rebuild a box path from an ascent tuple, honoring the k = 0 convention."""
    if k >= 1:
        return path_of_composition(Composition(k, parts))
    n = len(parts)
    if sum(parts) != 2 * n - 1 or parts[-1] != 1 or min(parts) < 1:
        raise InvalidPathError(f"not a virtual 0-box ascent tuple: {parts}")
    s = 0
    for i, x in enumerate(parts[:-1]):
        s += x
        if s < 2 * (i + 1):
            raise InvalidPathError(
                f"prefix sum {s} at index {i} is below {2 * (i + 1)}")
    word = "".join("U" * (x - 1) + "D" for x in parts[:-1])
    return PathWord(word)


def box_to_threshold(path: PathWord, k: int) -> ThresholdSequence:
    """Prefix sums s_i = a_1 + ... + a_i, i < n, as a (k+2, k)-threshold sequence."""
    a = box_ascents(path, k)
    sums: list[int] = []
    s = 0
    for x in a[:-1]:
        s += x
        sums.append(s)
    return ThresholdSequence(k + 2, k, tuple(sums))


def threshold_to_box(seq: ThresholdSequence) -> PathWord:
    """Inverse of box_to_threshold."""
    k = seq.slack
    if seq.k != k + 2:
        raise ValueError(f"box paths use threshold parameter slack+2, "
                         f"got k={seq.k} slack={seq.slack}")
    n = len(seq.entries) + 1
    bounds = seq.entries + ((k + 2) * n - 1,)
    parts = tuple(b - a for a, b in zip((0,) + seq.entries, bounds))
    return _path_of_ascents(parts, k)


def parse_threshold(text: str, k: int) -> ThresholdSequence:
    """Parse comma-separated threshold entries for the k-box family."""
    text = text.strip()
    if not text:
        return ThresholdSequence(k + 2, k, ())
    try:
        entries = tuple(int(s) for s in text.split(","))
    except ValueError as exc:
        raise ValueError(f"threshold entries must be integers: {exc}") from exc
    return ThresholdSequence(k + 2, k, entries)


def return_injection(path: PathWord, k: int) -> PathWord:
    """Map a k-box path with j+1 returns to one with j returns (same size).

    Deletes the first U after the first return and prepends a U.  Undefined
    when the path has a single return; for k = 0 also when the first return
    sits just before the final virtual block (the 2-return Dyck case, which
    has no 1-return partner).
    """
    a = list(box_ascents(path, k))
    n = len(a)
    first = None
    s = 0
    for i in range(n - 1):
        s += a[i]
        if s == (k + 2) * (i + 1):
            first = i
            break
    if first is None:
        raise InvalidPathError("path has a single return; nothing to inject")
    if a[first + 1] < 2:
        raise InvalidPathError(
            "first return is followed by a bare virtual ascent (k = 0, "
            "two-return case); no 1-return image exists")
    a[0] += 1
    a[first + 1] -= 1
    return _path_of_ascents(tuple(a), k)


def invert_return_injection(path: PathWord, k: int) -> PathWord | NotInvertible:
    """Partial inverse: move the leading U to just after the first return to y=1.

    Returns NotInvertible when that return sits inside a D^k L D or final
    D^k L factor (for k = 0: when the Dyck word starts with UD), i.e. when
    the reinserted word is not a k-box path.
    """
    _require_box(path, k)
    word = path.word
    h = _heights(word)
    pos = next((i for i in range(len(word))
                if word[i] != "U" and h[i + 1] == 1), None)
    if pos is None:
        return NotInvertible("no return to y=1")
    candidate = PathWord(word[1:pos + 1] + "U" + word[pos + 1:])
    cls = classify(candidate, k)
    if cls.box_size is None:
        return NotInvertible(
            f"first return to y=1 at index {pos} is mid-factor: {cls.reason}")
    if return_injection(candidate, k) != path:
        return NotInvertible("reinserted word does not map back")
    return candidate


def embed_all_long(path: PathWord, k: int) -> PathWord:
    """Turn a k-box path into the (k+1)-box path with every ascent long
    (each U D^k L factor becomes U U D^(k+1) L)."""
    parts = tuple(x + 1 for x in box_ascents(path, k))
    return path_of_composition(Composition(k + 1, parts))
