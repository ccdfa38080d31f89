# Copyright 2024 The csmtutte developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Contains functions generating matroids (uniform, graphic, linear, sums).

Every generator returns a Matroid on the standard ground set {0,...,n}, the
element e being the e-th column, edge or element given in input.
"""

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from sympy import isprime

from csmtutte.matroids.core import Matroid, check_ground_size, from_bases
from csmtutte.utils.exceptions import (InputError, NonPrimeModulusError,
                                       RankOutOfRangeError, ZeroMatrixError)
from csmtutte.utils.linalg import field_rank
from csmtutte.utils.subsets import mask_of


def uniform(rank: int, size: int, name: Optional[str] = None) -> Matroid:
    """Returns the uniform matroid U(rank, size) on {0,...,size-1}.

    Raises:
        RankOutOfRangeError: If not 1 <= rank <= size.
    """
    check_ground_size(size)
    if not 1 <= rank <= size:
        msg = f'uniform matroids need 1 <= rank <= size (got {rank}, {size})'
        raise RankOutOfRangeError(msg)
    bases = (mask_of(c) for c in combinations(range(size), rank))
    return Matroid((1 << size) - 1, bases,
                   f'U({rank},{size})' if name is None else name)


def from_graph(vertex_count: int,
               edges: Sequence[Tuple[int, int]],
               name: Optional[str] = None) -> Matroid:
    """Returns the graphic matroid (cycle matroid) of a multigraph.

    Edges are the elements, numbered in input order; self-loops are loops of
    the matroid and parallel edges are parallel elements. Bases are the
    spanning forests with a maximal number of edges.

    Args:
        vertex_count: The number of vertices (labelled 0..vertex_count-1).
        edges: The list of edges, as pairs of vertices.
        name: Optional; the name of the matroid.

    Raises:
        InputError: If an edge is malformed.
        RankOutOfRangeError: If every edge is a self-loop.
    """
    check_ground_size(len(edges))
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(vertex_count))
    for e, edge in enumerate(edges):
        if len(edge) != 2 or not all(0 <= v < vertex_count for v in edge):
            msg = (f'edge {e} ({edge}) must join two vertices among '
                   f'0..{vertex_count - 1}')
            raise InputError(msg)
        graph.add_edge(*edge, key=e)
    rank = vertex_count - nx.number_connected_components(graph)
    if rank == 0:
        raise RankOutOfRangeError('graphs without a non-loop edge have rank 0')
    bases = []
    for candidate in combinations(range(len(edges)), rank):
        forest = nx.MultiGraph()
        forest.add_edges_from(edges[e] for e in candidate)
        if nx.is_forest(forest):
            bases.append(mask_of(candidate))
    return Matroid((1 << len(edges)) - 1, bases, name)


def from_matrix(modulus: int,
                rows: Sequence[Sequence[int]],
                name: Optional[str] = None) -> Matroid:
    """Returns the column matroid of an integer matrix over Q or GF(p).

    Args:
        modulus: 0 for the rationals, a prime p for GF(p).
        rows: The rows of the matrix; columns are the elements.
        name: Optional; the name of the matroid.

    Raises:
        InputError: If rows do not share one length.
        NonPrimeModulusError: If modulus is neither 0 nor a prime.
        ZeroMatrixError: If the matrix has rank 0.
    """
    if modulus != 0 and not isprime(modulus):
        raise NonPrimeModulusError(f'{modulus} is not a prime number')
    if not rows or len({len(row) for row in rows}) != 1:
        raise InputError('matrix rows must be nonempty and of equal length')
    columns: List[List[int]] = [list(col) for col in zip(*rows)]
    check_ground_size(len(columns))
    rank = field_rank(columns, modulus)
    if rank == 0:
        raise ZeroMatrixError('the matrix has rank 0')
    bases = [mask_of(candidate)
             for candidate in combinations(range(len(columns)), rank)
             if field_rank([columns[e] for e in candidate], modulus) == rank]
    return Matroid((1 << len(columns)) - 1, bases, name)


def direct_sum(first: Matroid,
               second: Matroid,
               name: Optional[str] = None) -> Matroid:
    """Returns the direct sum of two matroids on standard ground sets.

    Elements of the second matroid are shifted by the size of the first one.
    """
    if not (first.is_standard and second.is_standard):
        raise InputError('direct sums need matroids on {0,...,n}')
    shift = first.size
    check_ground_size(shift + second.size)
    bases = (b1 | (b2 << shift) for b1 in first.bases for b2 in second.bases)
    if name is None and first.name and second.name:
        name = f'{first.name}+{second.name}'
    return Matroid((1 << (shift + second.size)) - 1, bases, name)


def from_document(doc: dict, name: Optional[str] = None) -> Matroid:
    """Builds a matroid from a bases, graph or matrix document.

    Documents are {"ground_size", "bases"}, {"vertex_count", "edges"} or
    {"field", "rows"} (field being 0 for Q or a prime p), with an optional
    "name".

    Raises:
        InputError: If the document matches none of these shapes.
    """
    if not isinstance(doc, dict):
        raise InputError('a matroid document must be a JSON object')
    name = doc.get('name', name)
    try:
        if 'bases' in doc:
            return from_bases(doc['ground_size'], doc['bases'], name)
        if 'edges' in doc:
            return from_graph(doc['vertex_count'],
                              [tuple(edge) for edge in doc['edges']], name)
        if 'rows' in doc:
            modulus = 0 if doc['field'] in ('Q', 0) else doc['field']
            return from_matrix(modulus, doc['rows'], name)
    except (KeyError, TypeError) as malformed:
        msg = f'malformed matroid document ({malformed!r})'
        raise InputError(msg) from malformed
    msg = ('a matroid document needs either "bases", "edges" or "rows" '
           f'(got keys {sorted(doc)})')
    raise InputError(msg)
