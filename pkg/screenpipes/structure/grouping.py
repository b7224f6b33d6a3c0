""" Grouping heuristics. Each takes a list of nodes (bare elements are
wrapped as leaves) and returns a new list of nodes in which some of
them have been gathered into groups. Every element stays in exactly one
node. """

from __future__ import print_function, division, absolute_import

import numpy as np

from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..geometry import (x_overlap, x_overlap_fraction, containment_fraction)
from ..input.screen import detected_element

from .tree import accessibility_node


def as_nodes(items):
    return [accessibility_node.leaf(i) if isinstance(i, detected_element)
            else i for i in items]


def _reading_key(node):
    box = node.box
    return (box.top, box.left)


def _components(n, linked):
    """ Connected components of the graph on range(n) whose edges are
    the pairs (i, j) for which linked(i, j) is true. Components come
    out as sorted index lists, ordered by their first index. """

    if n == 0:
        return []

    adjacency = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j and linked(i, j):
                adjacency[i, j] = adjacency[j, i] = True

    _, labels = connected_components(csr_matrix(adjacency), directed=False)

    groups = {}
    for i, label in enumerate(labels):
        groups.setdefault(label, []).append(i)

    return sorted(groups.values(), key=lambda g: g[0])


def _regroup(nodes, groups):
    """ Replace the members of each group (lists of indices into nodes)
    by one group node placed where its first member was. groups is a
    list of (kind, indices, children) with children the new node's
    child list. """

    taken = {}
    for kind, indices, children in groups:
        new = accessibility_node.group(kind, children)
        for i in indices:
            taken[i] = new

    out = []
    placed = set()
    for i, node in enumerate(nodes):
        if i not in taken:
            out.append(node)

        elif id(taken[i]) not in placed:
            out.append(taken[i])
            placed.add(id(taken[i]))

    return out


def _is_leaf_of(node, ui_types):
    return node.is_leaf and node.element.ui_type in ui_types


def group_tabs(items, config):
    """ Group the bottom tab bar into Tab Buttons.

    B is the element with the lowest bottom edge. Icon and Text leaves
    starting in the bottom tab_zone_fraction of the screen, whose top is
    within tab_height_tolerance of B's bottom, are tab bar candidates.
    Candidates joined by x-overlap form one Tab Button each; a lone
    candidate still forms a Tab Button.
    """

    nodes = as_nodes(items)
    if not nodes:
        return nodes

    lowest = max(n.box.bottom for n in nodes)
    zone_top = 1. - config.tab_zone_fraction

    candidates = [i for i, n in enumerate(nodes)
                  if _is_leaf_of(n, ["Icon", "Text"])
                  and n.box.top >= zone_top
                  and lowest - n.box.top <= config.tab_height_tolerance]

    boxes = [nodes[i].box for i in candidates]
    components = _components(len(candidates),
                             lambda a, b: x_overlap(boxes[a], boxes[b]) > 0.)

    groups = []
    for component in components:
        indices = [candidates[c] for c in component]
        children = sorted([nodes[i] for i in indices], key=_reading_key)
        groups.append(("TabButton", indices, children))

    return _regroup(nodes, groups)


def group_text(items, config):
    """ Group multi-line text into Text Blocks.

    A Text T2 is linked to a Text T1 above it when they overlap
    horizontally and the gap from T1's bottom to T2's top is smaller
    than the height of the shorter of the two. Chains of links form one
    block.
    """

    nodes = as_nodes(items)

    texts = [i for i, n in enumerate(nodes) if _is_leaf_of(n, ["Text"])]
    boxes = [nodes[i].box for i in texts]

    def linked(a, b):
        upper, lower = boxes[a], boxes[b]
        if not lower.top > upper.top:
            return False

        gap = lower.top - upper.bottom
        return (x_overlap(upper, lower) > 0.
                and gap < min(upper.height, lower.height))

    groups = []
    for component in _components(len(texts), linked):
        if len(component) < 2:
            continue

        indices = [texts[c] for c in component]
        children = sorted([nodes[i] for i in indices], key=_reading_key)
        groups.append(("TextBlock", indices, children))

    return _regroup(nodes, groups)


def _subtitle_distance(upper, lower, others, config):
    """ Vertical distance from upper to the caption candidate lower if
    lower qualifies as its subtitle, else None. The candidate has to
    overlap upper horizontally for at least subtitle_x_overlap_min of
    its width, sit below it within subtitle_y_gap, and be closer to
    upper than to any other node below it. """

    if x_overlap_fraction(lower, upper) < config.subtitle_x_overlap_min:
        return None

    if not (lower.top > upper.top and lower.bottom > upper.bottom):
        return None

    distance = max(0., lower.top - upper.bottom)
    if distance >= config.subtitle_y_gap:
        return None

    for other in others:
        if other.top >= lower.bottom and x_overlap(other, lower) > 0.:
            if other.top - lower.bottom <= distance:
                return None

    return distance


def group_picture_subtitles(items, config):
    """ Attach subtitles to Pictures.

    A Text (or Text Block) T1 below a Picture P becomes its subtitle
    when it has enough x-overlap with P, lies within subtitle_y_gap of
    P and is closer to P than to anything else below T1. A second text
    T2 satisfying the same conditions with respect to T1 joins too.
    Each Picture takes at most one T1 and each text joins at most one
    Picture: the nearest, with ties going to the earlier Picture in
    reading order. Text Blocks are flattened into the new group.
    """

    nodes = as_nodes(items)

    pictures = sorted([i for i, n in enumerate(nodes)
                       if _is_leaf_of(n, ["Picture"])],
                      key=lambda i: _reading_key(nodes[i]))

    texts = [i for i, n in enumerate(nodes)
             if _is_leaf_of(n, ["Text"]) or n.kind == "TextBlock"]

    def others(exclude):
        return [n.box for i, n in enumerate(nodes) if i not in exclude]

    # Best picture for each text.
    offers = {}
    for t in texts:
        best = None
        for rank, p in enumerate(pictures):
            d = _subtitle_distance(nodes[p].box, nodes[t].box,
                                   others((p, t)), config)
            if d is not None and (best is None or (d, rank) < best[:2]):
                best = (d, rank, p)

        if best is not None:
            offers.setdefault(best[2], []).append((best[0],
                                                   _reading_key(nodes[t]), t))

    firsts = dict((p, min(offers[p])[2]) for p in pictures if p in offers)
    used = set(firsts.values())

    groups = []
    for p in pictures:
        if p not in firsts:
            continue

        first = firsts[p]
        members = [p, first]

        seconds = []
        for t in texts:
            if t in used:
                continue

            d = _subtitle_distance(nodes[first].box, nodes[t].box,
                                   others((first, t)), config)
            if d is not None:
                seconds.append((d, _reading_key(nodes[t]), t))

        if seconds:
            second = min(seconds)[2]
            used.add(second)
            members.append(second)

        children = []
        for i in members:
            children.extend(accessibility_node.leaf(e)
                            for e in nodes[i].leaves())

        groups.append(("PictureWithSubtitle", members, children))

    return _regroup(nodes, groups)


def group_containers(items, config):
    """ Group each Container with everything inside it.

    A node belongs to a Container when at least container_membership of
    its area lies inside it, and to the smallest such Container when
    there are several. Text Blocks and Pictures with subtitles join as
    a whole; Tab Buttons never join. A Container lying inside another
    one is attached to the smallest enclosing Container, inner ones
    first, so Container groups nest. A Container with members becomes a
    group whose first child is the Container element itself; an empty
    Container stays a leaf.
    """

    nodes = as_nodes(items)

    containers = [i for i, n in enumerate(nodes)
                  if _is_leaf_of(n, ["Container"])]

    if not containers:
        return nodes

    def size(c):
        return (nodes[c].box.area, c)

    def smallest_enclosing(i, candidates):
        enclosing = [c for c in candidates if c != i
                     and containment_fraction(nodes[i].box, nodes[c].box)
                     >= config.container_membership]

        if not enclosing:
            return None

        return min(enclosing, key=size)

    members = dict((c, []) for c in containers)

    for i, node in enumerate(nodes):
        if i in members or node.kind == "TabButton":
            continue

        owner = smallest_enclosing(i, containers)
        if owner is not None:
            members[owner].append(i)

    # Only strictly larger Containers can hold another one.
    parent = {}
    for c in containers:
        owner = smallest_enclosing(c, [o for o in containers
                                       if size(o) > size(c)])
        if owner is not None:
            parent[c] = owner
            members[owner].append(c)

    built = {}
    for c in sorted(containers, key=size):
        if not members[c]:
            built[c] = nodes[c]
            continue

        inside = [built[i] if i in built else nodes[i] for i in members[c]]
        built[c] = accessibility_node.group(
            "Container", [nodes[c]] + sorted(inside, key=_reading_key))

    taken = {}

    def claim(c, top):
        taken[c] = top
        for i in members[c]:
            taken[i] = top
            if i in members:
                claim(i, top)

    for c in containers:
        if c not in parent:
            claim(c, built[c])

    out = []
    placed = set()
    for i, node in enumerate(nodes):
        if i not in taken:
            out.append(node)

        elif id(taken[i]) not in placed:
            out.append(taken[i])
            placed.add(id(taken[i]))

    return out
