import itertools
import sys

import pytest

from superschur.partitions import hook_instances

# instances the module invariants are stated over
SWEEP = list(hook_instances(8, 3, 3))
SMALL_SWEEP = list(hook_instances(5, 2, 2))


def brute_tableaux(lam, k, l):
    """Every filling of the diagram checked cell by cell against the definition.

    Independent of the package's pruned search: tries all (k+l)^|lam| fillings.
    """
    letters = [("T", i) for i in range(1, k + 1)] + [("U", j) for j in range(1, l + 1)]
    rank = {z: n for n, z in enumerate(letters)}
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    out = []
    for filling in itertools.product(letters, repeat=len(cells)):
        grid = dict(zip(cells, filling))
        ok = True
        for (i, j), z in grid.items():
            if (i, j + 1) in grid:
                y = grid[(i, j + 1)]
                if rank[y] < rank[z] or (y == z and z[0] == "U"):
                    ok = False
                    break
            if (i + 1, j) in grid:
                y = grid[(i + 1, j)]
                if rank[y] < rank[z] or (y == z and z[0] == "T"):
                    ok = False
                    break
        if ok:
            out.append(grid)
    return out


def brute_content_counts(lam, k, l):
    counts = {}
    for grid in brute_tableaux(lam, k, l):
        vec = [0] * (k + l)
        for kind, idx in grid.values():
            vec[idx - 1 if kind == "T" else k + idx - 1] += 1
        counts[tuple(vec)] = counts.get(tuple(vec), 0) + 1
    return counts


@pytest.fixture(scope="session")
def sweep():
    return SWEEP


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
