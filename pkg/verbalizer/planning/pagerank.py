"""PageRank over the resource graph of a knowledge base.

Nodes are the IRIs that appear as a subject or an object; every triple whose
object is an IRI contributes one directed edge subject -> object, so parallel
triples between the same pair weigh more. Literals are not nodes.
"""
from __future__ import annotations

import logging

import numpy as np

from verbalizer.rdf.terms import Graph, Iri

logger = logging.getLogger(__name__)


def pagerank(
    graph: Graph,
    damping: float = 0.85,
    epsilon: float = 1e-8,
    max_iter: int = 100,
) -> dict[Iri, float]:
    """Return ``{node: score}``; scores sum to one.

    Iteration stops when the L1 change drops below ``epsilon`` or after
    ``max_iter`` rounds. Rank held by dangling nodes (no out-edges) is spread
    uniformly over all nodes.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must lie in (0, 1), got {damping}")
    if epsilon <= 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")

    nodes = sorted({t.subject for t in graph} | {t.object for t in graph if isinstance(t.object, Iri)})
    if not nodes:
        return {}
    index = {node: i for i, node in enumerate(nodes)}
    n = len(nodes)

    edges = [(index[t.subject], index[t.object]) for t in graph if isinstance(t.object, Iri)]
    src = np.fromiter((s for s, _ in edges), dtype=np.int64, count=len(edges))
    dst = np.fromiter((d for _, d in edges), dtype=np.int64, count=len(edges))
    out_degree = np.bincount(src, minlength=n).astype(float)
    dangling = out_degree == 0
    weight = 1.0 / out_degree[src]

    x = np.full(n, 1.0 / n)
    iterations = 0
    for iterations in range(1, max_iter + 1):
        previous = x
        flow = np.bincount(dst, weights=previous[src] * weight, minlength=n)
        x = damping * (flow + previous[dangling].sum() / n) + (1.0 - damping) / n
        x /= x.sum()
        if np.abs(x - previous).sum() < epsilon:
            break
    else:
        logger.warning("PageRank did not converge within %d iterations", max_iter)

    logger.debug("PageRank over %d nodes and %d edges finished after %d iterations", n, len(edges), iterations)
    return {node: float(score) for node, score in zip(nodes, x)}
