import networkx as nx

from complex.simplicial import SimplicialComplex
from graphs.graph import Graph, Hypergraph


def maximal_independent_sets(graph: nx.Graph) -> list:
    if graph.number_of_nodes() == 0:
        return [()]
    return list(nx.find_cliques(nx.complement(graph)))


def independence_complex(g: Graph) -> SimplicialComplex:
    """I(G): 극대면 = 극대 독립집합"""
    return SimplicialComplex(g.vertices, maximal_independent_sets(g.to_networkx()))


def line_graph(h: Hypergraph) -> nx.Graph:
    """간선 id를 정점으로, 교차하는 간선끼리 연결 (평행 간선도 교차)"""
    graph = nx.Graph()
    graph.add_nodes_from(h.edge_ids)
    for i, first in enumerate(h.edge_ids):
        for second in h.edge_ids[i + 1:]:
            if h.edge(first) & h.edge(second):
                graph.add_edge(first, second)
    return graph


def matching_complex(h: Hypergraph) -> SimplicialComplex:
    """M(H): 바탕 집합 = 간선 id, 면 = 서로소 간선 집합 (선 그래프의 독립 복합체)"""
    return SimplicialComplex(h.edge_ids, maximal_independent_sets(line_graph(h)))
