from __future__ import print_function, division, absolute_import

from bisect import bisect_left

from ..exceptions import SetMismatch
from .. import config

from .grouping import as_nodes


def _projection_bands(nodes, axis, epsilon):
    """ Split nodes into bands separated by whitespace along one axis
    (0 for x, 1 for y). A gap only counts when it is wider than
    epsilon. Bands come out in increasing coordinate order. """

    if axis == 0:
        span = [(n.box.left, n.box.right) for n in nodes]

    else:
        span = [(n.box.top, n.box.bottom) for n in nodes]

    order = sorted(range(len(nodes)), key=lambda i: span[i])

    bands = [[order[0]]]
    end = span[order[0]][1]

    for i in order[1:]:
        start, stop = span[i]
        if start - end > epsilon:
            bands.append([i])

        else:
            bands[-1].append(i)

        end = max(end, stop)

    return [[nodes[i] for i in band] for band in bands]


def _top_then_left(nodes, epsilon):
    """ Read top to bottom in lines, left to right within a line. A line
    takes every node whose top is within epsilon of the line's first
    top. """

    lines = []
    for node in sorted(nodes, key=lambda n: (n.box.top, n.box.left)):
        if lines and node.box.top - lines[-1][0].box.top <= epsilon:
            lines[-1].append(node)
        else:
            lines.append([node])

    return [n for line in lines
            for n in sorted(line, key=lambda n: (n.box.left, n.box.top))]


def xy_cut(nodes, epsilon=config.xycut_epsilon):
    """ Order nodes with the recursive XY-cut: cut into horizontal
    bands where a line can cross the region without touching a node,
    then each band into columns the same way, and recurse. Regions that
    cannot be cut are read top to bottom in lines of tops within
    epsilon, each line left to right. """

    nodes = list(nodes)
    if len(nodes) <= 1:
        return nodes

    for axis in (1, 0):
        bands = _projection_bands(nodes, axis, epsilon)
        if len(bands) > 1:
            out = []
            for band in bands:
                out.extend(xy_cut(band, epsilon=epsilon))

            return out

    return _top_then_left(nodes, epsilon)


def order_elements(items, epsilon=config.xycut_epsilon):
    """ Put nodes in navigation order with the XY-cut, then order the
    children inside every group the same way.

    Parameters
    ----------

    items : list
        accessibility_node objects or bare elements.

    epsilon : float - optional
        Narrowest whitespace that still separates two regions.
    """

    ordered = []
    for node in xy_cut(as_nodes(items), epsilon=epsilon):
        if node.kind == "Container":
            # The Container element itself stays first.
            node = node.with_children(node.children[:1] + order_elements(
                node.children[1:], epsilon=epsilon))

        elif not node.is_leaf:
            node = node.with_children(order_elements(node.children,
                                                     epsilon=epsilon))
        ordered.append(node)

    return ordered


def longest_increasing_subsequence(sequence):
    """ Length of the longest strictly increasing subsequence, by
    patience sorting. """

    tails = []
    for value in sequence:
        i = bisect_left(tails, value)
        if i == len(tails):
            tails.append(value)

        else:
            tails[i] = value

    return len(tails)


def insertion_distance(produced, truth):
    """ Minimum number of moves (take one item out, insert it anywhere)
    turning the produced order into the truth order. Items that are
    already in relative order can stay put, so this is the length minus
    the longest increasing subsequence of truth positions.

    Raises SetMismatch when the two orders are not permutations of the
    same items.
    """

    produced = list(produced)
    truth = list(truth)

    if (len(produced) != len(truth) or len(set(truth)) != len(truth)
            or set(produced) != set(truth)):
        raise SetMismatch("Orders are not permutations of the same items.")

    position = dict((item, i) for i, item in enumerate(truth))

    return len(produced) - longest_increasing_subsequence(
        [position[item] for item in produced])
