import networkx as nx
import pytest

from graphvc.generators import gen_gnp
from graphvc.validation import check_graph


def nxg(G):
    return check_graph(G, allow_empty=True)


def star(leaves=3):
    return nxg(nx.star_graph(leaves))


def complete(n):
    return nxg(nx.complete_graph(n))


def cycle(n):
    return nxg(nx.cycle_graph(n))


def path(n):
    return nxg(nx.path_graph(n))


def edgeless(n):
    G = nx.Graph()
    G.add_nodes_from(range(n))
    return nxg(G)


def random_family(count=540, max_n=12):
    """Deterministic G(n, p) family covering n = 1..max_n and p = 0.1..0.9."""
    out = []
    for i in range(count):
        n = 1 + i % max_n
        p = ((i // max_n) % 9 + 1) / 10
        out.append(gen_gnp(n, p, seed=1000 + i))
    return out


@pytest.fixture(scope="session")
def family():
    return random_family()


@pytest.fixture(scope="session")
def small_family():
    return random_family(120)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(key, ok, detail=""):
    """Remember an acceptance outcome so the summary can print it."""
    ACCEPTANCE[key] = (bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("ab")), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
