import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone

from graphvc import HeuristicLowerBound, TraceReducer, VCDimension
from graphvc.estimators import vcdim
from graphvc.oracle import brute_vcdim, is_shattered
from graphvc.validation import check_graph

from conftest import star


def test_params_roundtrip_and_clone():
    est = VCDimension(ordering="deg-inc", maxvisits=8, lower_bound=1)
    params = est.get_params()
    assert params["ordering"] == "deg-inc" and params["lower_bound"] == 1
    twin = clone(est)
    assert twin.get_params() == params
    assert not hasattr(twin, "vcdim_")
    est.set_params(ball_restriction=False)
    assert est.ball_restriction is False


def test_fit_sets_attributes(small_family):
    for g in small_family[:40]:
        if g.n == 0:
            continue
        est = VCDimension().fit(g)
        assert est.vcdim_ == brute_vcdim(g)
        assert len(est.witness_) == est.vcdim_
        assert is_shattered(g, est.result_.witness_ids)
        assert est.lower_bound_ <= est.vcdim_
        assert est.n_vertices_in_ == g.n
        assert est.stats_.h_size <= g.n


def test_witness_uses_input_labels():
    est = VCDimension().fit("10 20\n10 30\n10 40\n")
    assert est.vcdim_ == 2
    assert set(est.witness_) <= {10, 20, 30, 40}


def test_integer_lower_bound_and_bad_value():
    assert VCDimension(lower_bound=2).fit(star()).vcdim_ == 2
    with pytest.raises(ValueError):
        VCDimension(lower_bound=3).fit(star())
    with pytest.raises(ValueError):
        VCDimension(lower_bound="big").fit(star())


def test_python_backend_agrees():
    G = nx.petersen_graph()
    assert vcdim(G, backend="python") == vcdim(G) == 2


def test_heuristic_estimator():
    est = HeuristicLowerBound(maxvisits=16).fit(nx.petersen_graph())
    assert 1 <= est.lower_bound_ <= 2
    assert len(est.witness_) == est.lower_bound_
    assert est.additions_ >= 0


def test_trace_reducer():
    g = star(5)
    red = TraceReducer(lb=2).fit(g)
    assert red.high_.tolist() == [0]
    out = red.transform(g)
    assert out.n == len(red.kept_)
    assert red.kept_.tolist() == [0]
    # every vertex has closed degree >= 1, so lb=0 keeps the whole graph
    assert TraceReducer(lb=0).fit_transform(g).n == g.n
    with pytest.raises(ValueError):
        red.transform(star(2))


def test_reducer_requires_fit():
    from sklearn.exceptions import NotFittedError
    with pytest.raises(NotFittedError):
        TraceReducer().transform(star())


@pytest.mark.parametrize("source", [
    "0 1\n1 2\n",
    np.array([[0, 1], [1, 2]]),
    [[0, 1], [1, 2]],
    nx.path_graph(3),
])
def test_check_graph_inputs(source):
    g = check_graph(source)
    assert g.n == 3 and g.edge_count == 2


def test_check_graph_rejects():
    with pytest.raises(ValueError):
        check_graph("")
    with pytest.raises(ValueError):
        check_graph(np.zeros((2, 3), dtype=int))
    with pytest.raises(TypeError):
        check_graph(np.array([[0.5, 1.0]]))
    assert check_graph("", allow_empty=True).n == 0


def test_networkx_string_nodes_get_positional_labels():
    g = check_graph(nx.Graph([("a", "b")]))
    assert g.labels.tolist() == [0, 1]
