"""k-ary trees, their big-step path encodings, and the augmented form."""

import pytest

from boxpaths import (
    InvalidPathError,
    KAryTree,
    KDyckPath,
    TreeNode,
    augmented_to_kdyck,
    classify,
    format_tree,
    fuss_catalan,
    generate_trees,
    kdyck_to_augmented,
    kdyck_to_tree,
    parse_path,
    parse_tree,
    tree_to_kdyck,
)


def test_generate_trees_counts():
    # arity a with n nodes: (1/(an+1)) C(an+1, n)
    assert [sum(1 for _ in generate_trees(2, n)) for n in range(6)] == [
        1, 1, 2, 5, 14, 42]
    assert [sum(1 for _ in generate_trees(3, n)) for n in range(5)] == [
        1, 1, 3, 12, 55]
    assert sum(1 for _ in generate_trees(4, 3)) == fuss_catalan(4, 1, 3)


def test_generate_trees_distinct_and_well_formed():
    for arity in (2, 3, 4):
        for n in range(4):
            forest = list(generate_trees(arity, n))
            assert len({str(t) for t in forest}) == len(forest)
            for t in forest:
                assert t.arity == arity
                assert t.node_count == n


def test_tree_arity_is_checked():
    lopsided = TreeNode((None, None))
    with pytest.raises(ValueError):
        KAryTree(3, lopsided)


def test_format_and_parse_roundtrip():
    for arity in (2, 3):
        for n in range(5):
            for t in generate_trees(arity, n):
                assert parse_tree(format_tree(t), arity) == t
    assert format_tree(KAryTree(3, None)) == "-"
    assert format_tree(KAryTree(3, TreeNode((None, None, None)))) == "(- - -)"


def test_parse_tree_errors():
    with pytest.raises(ValueError):
        parse_tree("(- -)", 3)  # wrong child count
    with pytest.raises(ValueError):
        parse_tree("(- - -) -", 3)  # trailing tokens
    with pytest.raises(ValueError):
        parse_tree("(- - *)", 3)
    with pytest.raises(ValueError):
        parse_tree("((- -) -", 2)  # unbalanced


def test_single_node_encodings():
    # an arity-a node encodes as U^(a-1) followed by one big down step
    assert tree_to_kdyck(parse_tree("(- - -)", 3)).word == "UUD"
    assert tree_to_kdyck(parse_tree("(- -)", 2)).word == "UD"
    assert tree_to_kdyck(parse_tree("-", 3)).word == ""


def test_kdyck_path_validation():
    assert KDyckPath(2, "UUD").size == 1
    with pytest.raises(ValueError):
        KDyckPath(2, "UDD")  # dips below zero
    with pytest.raises(ValueError):
        KDyckPath(2, "UUDU")  # does not end at zero
    with pytest.raises(ValueError):
        KDyckPath(2, "UUDL")  # alphabet is U/D only
    with pytest.raises(ValueError):
        KDyckPath(0, "")


def test_tree_kdyck_roundtrip():
    for arity in (2, 3, 4):
        for n in range(5):
            for t in generate_trees(arity, n):
                p = tree_to_kdyck(t)
                assert p.k == arity - 1
                assert p.size == n
                assert kdyck_to_tree(p) == t


def test_kdyck_words_are_distinct():
    words = {tree_to_kdyck(t).word for t in generate_trees(3, 4)}
    assert len(words) == fuss_catalan(3, 1, 4)


def test_augment_single_block():
    assert kdyck_to_augmented(KDyckPath(2, "UUD")).word == "UUUDLD"
    assert kdyck_to_augmented(KDyckPath(3, "UUUD")).word == "UUUUDDLD"


def test_augmented_roundtrip_and_classification():
    for arity in (3, 4):
        k = arity - 1
        for n in range(4):
            for t in generate_trees(arity, n):
                p = tree_to_kdyck(t)
                aug = kdyck_to_augmented(p)
                cls = classify(aug, k)
                assert cls.skew_dyck
                assert cls.augmented_size == n
                if n:
                    assert cls.family() == f"AugmentedKDyck({k}, {n})"
                assert augmented_to_kdyck(aug, k) == p


def test_augmented_requires_k_at_least_two():
    with pytest.raises(ValueError):
        kdyck_to_augmented(KDyckPath(1, "UD"))
    with pytest.raises(ValueError):
        augmented_to_kdyck(parse_path("UULD"), 1)


def test_strip_rejects_foreign_words():
    with pytest.raises(InvalidPathError):
        augmented_to_kdyck(parse_path("UUDL"), 2)
    with pytest.raises(InvalidPathError):
        augmented_to_kdyck(parse_path("UUDLD"), 2)


def parse_path(text):
    from boxpaths import parse_path

    return parse_path(text)
