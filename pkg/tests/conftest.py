"""Shared fixtures: the seeded instance corpus, exhaustive harness reports,
and a session-wide recorder for every LP vertex the decomposition solver
returns.  The corpus and reports are session-scoped because several
acceptance criteria must run against the same generated instances."""

from __future__ import annotations

import time

import pytest
from hypothesis import settings

import bspoly.exchange
import bspoly.ratlp
from bspoly import (
    HarnessConfig,
    check_bs_exc,
    check_delta_exc,
    check_jump_system,
    enumerate_integer_points,
    random_bisubmodular,
    random_bisubmodular_via_submodular,
    run_equivalence_harness,
)

settings.register_profile("ci", derandomize=True, max_examples=100)
settings.load_profile("ci")


@pytest.fixture(autouse=True)
def _sequential_harness(monkeypatch):
    # Keep harness runs in-process so the LP recorder sees every call.
    monkeypatch.delenv("BSPOLY_THREADS", raising=False)


class _RecordingRatlp:
    """Stand-in for the ratlp module that logs optimal vertices."""

    def __init__(self, real):
        self._real = real
        self.vertices = []

    def __getattr__(self, name):
        return getattr(self._real, name)

    def solve(self, lp):
        result = self._real.solve(lp)
        if result.status == self._real.OPTIMAL:
            self.vertices.append(result.x)
        return result


@pytest.fixture(scope="session")
def lp_vertex_log():
    """Every optimal vertex produced inside decompose during the session."""
    recorder = _RecordingRatlp(bspoly.ratlp)
    patcher = pytest.MonkeyPatch()
    patcher.setattr(bspoly.exchange, "ratlp", recorder)
    yield recorder.vertices
    patcher.undo()


@pytest.fixture(scope="session")
def instance_corpus(lp_vertex_log):
    """530 seeded integral bisubmodular functions with their integer points.

    Mix: dim-1 and dim-2 tables from uniform rejection sampling plus dim-3
    tables from the composed generator (uniform rejection is hopeless at
    dim 3); all values lie in [-5, 5].  Returns (build_seconds, items).
    """
    start = time.time()
    corpus = []
    for seed in range(260):
        corpus.append(random_bisubmodular(1, 5, seed))
    for seed in range(90):
        corpus.append(random_bisubmodular(2, 2, seed))
    for seed in range(60):
        corpus.append(random_bisubmodular(2, 3, seed))
    for seed in range(120):
        corpus.append(random_bisubmodular_via_submodular(3, seed, max_points=15))
    items = [(f, enumerate_integer_points(f)) for f in corpus]
    return time.time() - start, items


@pytest.fixture(scope="session")
def corpus_axiom_runtimes(instance_corpus):
    """Run the three axiom checkers over the corpus once, timed.

    Returns (elapsed_seconds, verdicts) where verdicts maps checker name to
    the list of verdicts in corpus order.
    """
    start = time.time()
    verdicts = {"delta_exc": [], "jump_system": [], "bs_exc": []}
    for _, points in instance_corpus[1]:
        verdicts["delta_exc"].append(check_delta_exc(points))
        verdicts["jump_system"].append(check_jump_system(points))
        verdicts["bs_exc"].append(check_bs_exc(points))
    return time.time() - start, verdicts


criterion_lines = []


def pytest_terminal_summary(terminalreporter):
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def dim1_exhaustive_report(lp_vertex_log):
    start = time.time()
    report = run_equivalence_harness(HarnessConfig(dim=1, exhaustive_range=4))
    return time.time() - start, report


@pytest.fixture(scope="session")
def dim2_exhaustive_report(lp_vertex_log):
    start = time.time()
    report = run_equivalence_harness(HarnessConfig(dim=2, exhaustive_range=2))
    return time.time() - start, report
