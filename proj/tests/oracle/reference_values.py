"""Independent reference values for the C++ test suite.

Uses networkx for graph6 encoding and cvxpy (Clarabel) for the semidefinite
programs. The printed numbers are frozen into the C++ tests; rerun this
script to regenerate them.
"""
import itertools
import math

import cvxpy as cp
import networkx as nx
import numpy as np


def petersen():
    g = nx.Graph()
    g.add_nodes_from(range(10))
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
        g.add_edge(i, i + 5)
        g.add_edge(5 + i, 5 + (i + 2) % 5)
    return g


def corpus():
    return {
        "K2": nx.complete_graph(2),
        "K3": nx.complete_graph(3),
        "K4": nx.complete_graph(4),
        "C4": nx.cycle_graph(4),
        "C5": nx.cycle_graph(5),
        "P3": nx.path_graph(3),
        "K23": nx.complete_bipartite_graph(2, 3),
        "Petersen": petersen(),
        "E2": nx.empty_graph(2),
    }


def theta(g):
    n = g.number_of_nodes()
    X = cp.Variable((n, n), symmetric=True)
    cons = [X >> 0, cp.trace(X) == 1]
    cons += [X[u, v] == 0 for u, v in g.edges()]
    prob = cp.Problem(cp.Maximize(cp.sum(X)), cons)
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-10, tol_gap_rel=1e-10, tol_feas=1e-10)
    return prob.value


def gw(g):
    n = g.number_of_nodes()
    L = nx.laplacian_matrix(g, nodelist=range(n)).toarray().astype(float)
    X = cp.Variable((n, n), symmetric=True)
    prob = cp.Problem(cp.Maximize(cp.trace(L @ X) / 4), [X >> 0, cp.diag(X) == 1])
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-10, tol_gap_rel=1e-10, tol_feas=1e-10)
    return prob.value


def alpha0_dual(g):
    n = g.number_of_nodes()
    A = nx.to_numpy_array(g, nodelist=range(n))
    L = np.diag(A.sum(1)) - A
    X = cp.Variable((n, n), symmetric=True)
    prob = cp.Problem(cp.Maximize(-cp.trace(A @ X)), [X >> 0, cp.trace(L @ X) <= 1])
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-10, tol_gap_rel=1e-10, tol_feas=1e-10)
    return prob.value


def maxcut(g):
    n = g.number_of_nodes()
    best = 0
    for bits in itertools.product([0, 1], repeat=n - 1):
        side = (0,) + bits
        best = max(best, sum(1 for u, v in g.edges() if side[u] != side[v]))
    return best


if __name__ == "__main__":
    for name, g in corpus().items():
        g6 = nx.to_graph6_bytes(g, nodes=sorted(g), header=False).decode().strip()
        line = f"{name:9s} graph6={g6!r}"
        if g.number_of_edges() > 0:
            gc = nx.complement(g)
            A = nx.to_numpy_array(g, nodelist=range(g.number_of_nodes()))
            lmin = np.linalg.eigvalsh(A)[0]
            line += (f" theta={theta(g):.10f} theta_bar={theta(gc):.10f}"
                     f" gw={gw(g):.10f} alpha0_dual={alpha0_dual(g):.10f}"
                     f" maxcut={maxcut(g)} lmin={lmin:.12f}")
        print(line)
    print("C5 closed forms: sqrt5", math.sqrt(5), "1/sqrt5", 1 / math.sqrt(5),
          "gw", 2.5 * (1 - math.cos(4 * math.pi / 5)))
