from cantor_swaps.element import from_swap, identity
from cantor_swaps.presentations import evaluate, genset_uv
from cantor_swaps.treepair import TreePair, to_tree_pair


def test_swap_100_11_tree_pair():
    tp = to_tree_pair(from_swap("100", "11"))
    assert tp.domain_numbering == (1, 2, 3, 4)
    assert tp.range_numbering == (1, 4, 3, 2)
    assert tp.domain_leaves == ("0", "100", "101", "11")


def test_uv_tree_pairs():
    u = to_tree_pair(evaluate("u", genset_uv()))
    v = to_tree_pair(evaluate("v", genset_uv()))
    assert u.range_numbering == (2, 1, 5, 3, 4)
    assert u.domain_leaves == ("00", "01", "10", "110", "111")
    assert v.range_numbering == (1, 4, 2, 3)


def test_identity_is_single_node():
    tp = to_tree_pair(identity())
    assert tp.size == 1
    assert tp.render_ascii() == "e [1] --> e [1]"


def test_round_trip_to_element():
    for f in (from_swap("100", "11"), evaluate("u v u^-1", genset_uv()), identity()):
        assert to_tree_pair(f).to_element() == f


def test_leaf_permutation():
    tp = to_tree_pair(from_swap("100", "11"))
    assert tp.leaf_permutation == {1: 1, 4: 2, 3: 3, 2: 4}


def test_ascii_is_deterministic_and_numbered():
    f = evaluate("u", genset_uv())
    a, b = to_tree_pair(f).render_ascii(), to_tree_pair(f).render_ascii()
    assert a == b
    first = a.splitlines()[0]
    assert "-->" in first
    assert "110 [3]" in a and "00 [1]" in a


def test_dot_output_shape():
    dot = to_tree_pair(from_swap("100", "11")).render_dot("fig")
    assert dot.startswith("digraph fig {") and dot.rstrip().endswith("}")
    assert dot.count("{") == dot.count("}")
    assert "cluster_domain" in dot and "cluster_range" in dot
    assert 'd_e -> d_0;' in dot and 'r_10 -> r_101;' in dot


def test_manual_tree_pair():
    tp = TreePair(("0", "1"), ("0", "1"), (2, 1))
    assert tp.to_element() == from_swap("0", "1")
