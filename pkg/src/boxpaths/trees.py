"""k-ary trees, k-Dyck paths and the augmented rewriting between them.

A k-Dyck path uses steps U = (1,1) and D = (k,-k), stays weakly above the
x-axis and ends on it; its size is the number of D steps.  The first-return
decomposition mu = U mu_1 U mu_2 ... U mu_k D mu_{k+1} pairs k-Dyck paths of
size n with (k+1)-ary trees with n nodes (child i of the root maps to mu_i).

For k >= 2, rewriting every D step as the factor U D^(k-1) L D turns a
k-Dyck path into an "augmented" skew Dyck word made of n blocks
U^a D^(k-1) L D with positive ascents; these blocks are the building parts
of the box-path decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .paths import InvalidPathError, PathWord


@dataclass(frozen=True)
class TreeNode:
    children: tuple["TreeNode | None", ...]


@dataclass(frozen=True)
class KAryTree:
    """A k-ary tree: every node has exactly `arity` ordered child slots."""

    arity: int
    root: TreeNode | None

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be >= 1")
        _check_arity(self.root, self.arity)

    @property
    def node_count(self) -> int:
        return _count(self.root)

    def __str__(self) -> str:
        return format_tree(self)


def _check_arity(node: TreeNode | None, arity: int) -> None:
    if node is None:
        return
    if len(node.children) != arity:
        raise ValueError(
            f"node has {len(node.children)} child slots, expected {arity}")
    for child in node.children:
        _check_arity(child, arity)


def _count(node: TreeNode | None) -> int:
    if node is None:
        return 0
    return 1 + sum(_count(c) for c in node.children)


@dataclass(frozen=True)
class TreeTuple:
    """An ordered tuple of trees of one arity (a forest with named slots)."""

    trees: tuple[KAryTree, ...]

    @property
    def total_nodes(self) -> int:
        return sum(t.node_count for t in self.trees)

    def __str__(self) -> str:
        return ",".join(format_tree(t) for t in self.trees)


def format_tree(tree: KAryTree) -> str:
    """Render a tree: '-' for empty, '(c_0 c_1 ...)' per node."""

    def fmt(node: TreeNode | None) -> str:
        if node is None:
            return "-"
        return "(" + " ".join(fmt(c) for c in node.children) + ")"

    return fmt(tree.root)


def parse_tree(text: str, arity: int) -> KAryTree:
    """Parse the format_tree() notation back into a tree."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse_node() -> TreeNode | None:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of tree text")
        tok = tokens[pos]
        pos += 1
        if tok == "-":
            return None
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r} in tree text")
        children = []
        while pos < len(tokens) and tokens[pos] != ")":
            children.append(parse_node())
        if pos >= len(tokens):
            raise ValueError("missing ')' in tree text")
        pos += 1
        return TreeNode(tuple(children))

    root = parse_node()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in tree text: {tokens[pos:]}")
    return KAryTree(arity, root)


def generate_trees(arity: int, n: int) -> Iterator[KAryTree]:
    """Yield all k-ary trees with n nodes, empty-first, leftmost-smallest."""
    if arity < 1:
        raise ValueError("arity must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    for root in _gen_nodes(arity, n):
        yield KAryTree(arity, root)


def _gen_nodes(arity: int, n: int) -> Iterator[TreeNode | None]:
    if n == 0:
        yield None
        return
    for sizes in _weak_compositions(n - 1, arity):
        yield from _combine(arity, sizes, ())


def _combine(arity: int, sizes: tuple[int, ...],
             chosen: tuple[TreeNode | None, ...]) -> Iterator[TreeNode]:
    if not sizes:
        yield TreeNode(chosen)
        return
    for sub in _gen_nodes(arity, sizes[0]):
        yield from _combine(arity, sizes[1:], chosen + (sub,))


def _weak_compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, slots - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class KDyckPath:
    """Word over {U, D} with D = (k,-k), staying >= 0 and ending at 0."""

    k: int
    word: str

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        height = 0
        for i, ch in enumerate(self.word):
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= self.k
                if height < 0:
                    raise InvalidPathError(
                        f"{self.k}-Dyck path dips below the x-axis at index {i}")
            else:
                raise InvalidPathError(
                    f"unexpected character {ch!r} at index {i}")
        if height != 0:
            raise InvalidPathError(
                f"{self.k}-Dyck path ends at height {height}, not 0")

    @property
    def size(self) -> int:
        return self.word.count("D")

    def __str__(self) -> str:
        return self.word


def tree_to_kdyck(tree: KAryTree) -> KDyckPath:
    """Map an arity-a tree to the (a-1)-Dyck path of the same size."""
    if tree.arity < 2:
        raise ValueError("tree-to-path map needs arity >= 2")
    k = tree.arity - 1

    def walk(node: TreeNode | None) -> str:
        if node is None:
            return ""
        head = "".join("U" + walk(c) for c in node.children[:k])
        return head + "D" + walk(node.children[k])

    return KDyckPath(k, walk(tree.root))


def kdyck_to_tree(path: KDyckPath) -> KAryTree:
    """Inverse of tree_to_kdyck: a k-Dyck path becomes a (k+1)-ary tree."""
    k = path.k
    word = path.word
    heights = [0] * (len(word) + 1)
    for i, ch in enumerate(word):
        heights[i + 1] = heights[i] + (1 if ch == "U" else -k)

    def parse(lo: int, hi: int, entry: int) -> TreeNode | None:
        if lo == hi:
            return None
        # the root's D is the first D returning to the entry height: D steps
        # inside mu_1..mu_k end strictly higher, those in mu_{k+1} come later
        root_d = next(i for i in range(lo, hi)
                      if word[i] == "D" and heights[i + 1] == entry)
        tail = parse(root_d + 1, hi, entry)
        children: list[TreeNode | None] = [tail]
        end = root_d
        for j in range(k, 0, -1):
            # separator before mu_j: last U rising from entry+j-1, after
            # which the path stays at or above entry+j
            sep = max(i for i in range(lo, end)
                      if word[i] == "U" and heights[i] == entry + j - 1)
            children.append(parse(sep + 1, end, entry + j))
            end = sep
        if end != lo:
            raise InvalidPathError("malformed k-Dyck path")
        children.reverse()
        return TreeNode(tuple(children))

    return KAryTree(k + 1, parse(0, len(word), 0))


def _augment(word: str, k: int) -> str:
    """Rewrite each D of a k-Dyck word (k >= 1) as U D^(k-1) L D."""
    return word.replace("D", "U" + "D" * (k - 1) + "LD")


def _strip_augmented(word: str, k: int) -> str:
    """Inverse of _augment: blocks U^a D^(k-1) L D back to U^(a-1) D."""
    block_down = "D" * (k - 1) + "LD"
    out: list[str] = []
    i = 0
    while i < len(word):
        a = 0
        while i < len(word) and word[i] == "U":
            i += 1
            a += 1
        if a == 0 or word[i : i + k + 1] != block_down:
            raise InvalidPathError(
                f"not an augmented {k}-Dyck word: bad block at index {i}")
        i += k + 1
        out.append("U" * (a - 1) + "D")
    return "".join(out)


def kdyck_to_augmented(path: KDyckPath) -> PathWord:
    """Augmented form of a k-Dyck path, k >= 2 (each D becomes U D^(k-1) L D)."""
    if path.k < 2:
        raise ValueError("augmented form needs k >= 2")
    return PathWord(_augment(path.word, path.k))


def augmented_to_kdyck(path: PathWord, k: int) -> KDyckPath:
    """Read an augmented k-Dyck word (k >= 2) back as a k-Dyck path."""
    if k < 2:
        raise ValueError("augmented form needs k >= 2")
    return KDyckPath(k, _strip_augmented(path.word, k))
