import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from treemorse import MorseFunction, build_tree, is_edge, validate
from treemorse.errors import (
    MissingValueError,
    MoreThanTwoShareValueError,
    NotWeaklyIncreasingError,
    ValueSharedByNonIncidentError,
)


def single_edge():
    return build_tree(["u", "v"], [("u", "v")])


def test_missing_value_rejected():
    with pytest.raises(MissingValueError):
        validate(single_edge(), {"u": 0, "v": 1})


def test_value_on_unknown_simplex_rejected():
    with pytest.raises(MissingValueError):
        validate(
            single_edge(), {"u": 0, "v": 1, ("u", "v"): 2, ("u", "w"): 3}
        )


def test_decreasing_along_face_rejected():
    with pytest.raises(NotWeaklyIncreasingError):
        validate(single_edge(), {"u": 0, "v": 2, ("u", "v"): 1})


def test_three_way_share_rejected():
    with pytest.raises(MoreThanTwoShareValueError):
        validate(single_edge(), {"u": 1, "v": 1, ("u", "v"): 1})


def test_two_vertices_sharing_rejected():
    with pytest.raises(ValueSharedByNonIncidentError):
        validate(single_edge(), {"u": 0, "v": 0, ("u", "v"): 1})


def test_two_edges_sharing_rejected():
    with pytest.raises(ValueSharedByNonIncidentError):
        validate(
            helpers.path3_tree(),
            {"a": 0, "b": 1, "c": 2, ("a", "b"): 3, ("b", "c"): 3},
        )


def test_nonincident_vertex_edge_sharing_rejected():
    with pytest.raises(ValueSharedByNonIncidentError):
        validate(
            helpers.path3_tree(),
            {"a": 0, "b": 1, "c": 3, ("a", "b"): 3, ("b", "c"): 4},
        )


def test_incident_pair_may_share():
    f = validate(single_edge(), {"u": 0, "v": 1, ("u", "v"): 1})
    assert set(f.critical_simplices) == {"u"}
    assert list(f.gradient_vector_field) == [("v", ("u", "v"))]


def test_everything_critical_when_injective():
    f = helpers.deep_function()
    assert len(f.gradient_vector_field) == 0
    assert set(f.critical_simplices) == set(f.domain.simplices())
    assert f.critical_values == (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10)


def test_critical_simplex_lookup():
    f = helpers.deep_function()
    assert f.critical_simplex_at(6) == "d"
    assert f.critical_simplex_at(10) == ("d", "e")
    with pytest.raises(KeyError):
        f.critical_simplex_at(11)


def test_mixed_function_critical_partition():
    tree = build_tree(
        ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]
    )
    f = validate(
        tree,
        {"a": 0, "b": 1, "c": 2, "d": 3,
         ("a", "b"): 4, ("b", "c"): 5, ("c", "d"): 3},
    )
    assert list(f.gradient_vector_field) == [("d", ("c", "d"))]
    assert set(f.critical_simplices) == {
        "a", "b", "c", ("a", "b"), ("b", "c")
    }
    assert f.critical_values == (0, 1, 2, 4, 5)


def test_sublevel_component_around_branch_vertex():
    f = helpers.deep_function()
    component = f.sublevel_before(10).component_of("e")
    assert component == {"e", "f", ("e", "f")}
    assert f.sublevel_before(10).component_of("d") == {
        "a", "b", "c", "d",
        ("a", "b"), ("a", "d"), ("c", "d"),
    }


def test_level_subcomplex_thresholds():
    f = helpers.left_path_function()
    at = f.level_subcomplex(3).forest
    assert set(at.simplices()) == {"a", "b", "c", ("a", "b")}
    below = f.sublevel_before(3)
    assert set(below.simplices()) == {"a", "b", "c"}
    assert f.level_subcomplex(-1).forest.simplex_count == 0


def test_paired_simplices_enter_together():
    tree = single_edge()
    f = validate(tree, {"u": 0, "v": 1, ("u", "v"): 1})
    below = f.sublevel_before(1)
    assert set(below.simplices()) == {"u"}
    at = f.level_subcomplex(1).forest
    assert set(at.simplices()) == {"u", "v", ("u", "v")}


def test_filtration_steps_through_critical_values():
    f = helpers.left_path_function()
    steps = f.filtration()
    assert [value for value, _ in steps] == [0, 1, 2, 3, 4]
    assert [level.forest.simplex_count for _, level in steps] == [1, 2, 3, 4, 5]
    assert [level.forest.component_count for _, level in steps] == [
        1, 2, 3, 2, 1,
    ]


def test_filtration_collapses_paired_steps():
    tree = single_edge()
    f = validate(tree, {"u": 0, "v": 1, ("u", "v"): 1})
    steps = f.filtration()
    assert [value for value, _ in steps] == [0]
    assert steps[0][1].forest.simplex_count == 1


def test_sweep_order_puts_vertex_before_its_edge():
    tree = single_edge()
    f = validate(tree, {"u": 0, "v": 1, ("u", "v"): 1})
    assert f.sweep_order() == [("u", 0), ("v", 1), (("u", "v"), 1)]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_functions_validate_and_partition(data):
    n = data.draw(st.integers(min_value=1, max_value=7))
    trees = helpers.trees_up_to_iso(n)
    edges = trees[data.draw(st.integers(min_value=0, max_value=len(trees) - 1))]
    tree = helpers.tree_from_edges(n, edges)
    f = helpers.critical_function_from_choices(
        tree, lambda k: data.draw(st.integers(min_value=0, max_value=k - 1))
    )
    g = helpers.collapse_pairs(
        f, lambda k: data.draw(st.integers(min_value=0, max_value=k - 1))
    )
    paired = {s for pair in g.gradient_vector_field for s in pair}
    assert paired | set(g.critical_simplices) == set(tree.simplices())
    assert not (paired & set(g.critical_simplices))
    vertex_count = sum(1 for s in g.critical_simplices if not is_edge(s))
    assert vertex_count == len(g.critical_simplices) - vertex_count + 1
