from __future__ import print_function, division, absolute_import

from ..geometry import bbox, union_box
from ..input.screen import detected_element
from ..input.ui_types import group_kinds
from ..input.loading import load_json
from ..exceptions import SchemaError
from .. import utils


def _join_alt_text(children):
    return ", ".join(c.alt_text for c in children if c.alt_text)


class accessibility_node(object):
    """ One node of an accessibility tree: either a leaf wrapping a
    single element, or a group with an ordered, non-empty list of
    children.

    Parameters
    ----------

    kind : str
        "leaf", or one of the group kinds TabButton, Container,
        TextBlock and PictureWithSubtitle.

    element : screenpipes.input.detected_element - optional
        The element of a leaf.

    children : list - optional
        Child nodes of a group.

    selected : bool - optional
        Selection state of a group (Tab Buttons).
    """

    def __init__(self, kind, element=None, children=None, selected=None):

        if kind == "leaf":
            if element is None or children:
                raise ValueError("a leaf wraps exactly one element")

        elif kind in group_kinds:
            if not children:
                raise ValueError("groups need at least one child")

        else:
            raise ValueError("unknown node kind " + str(kind))

        self.kind = kind
        self.element = element
        self.children = list(children) if children else []
        self.selected = selected

    @classmethod
    def leaf(cls, element):
        return cls("leaf", element=element)

    @classmethod
    def group(cls, kind, children, selected=None):
        return cls(kind, children=children, selected=selected)

    @property
    def is_leaf(self):
        return self.kind == "leaf"

    @property
    def box(self):
        if self.is_leaf:
            return self.element.box

        return union_box(c.box for c in self.children)

    @property
    def alt_text(self):
        """ What a screen reader speaks for the node. Groups join their
        children's alternative texts with ", " in navigation order. """

        if self.is_leaf:
            return self.element.alt_text()

        return _join_alt_text(self.children)

    @property
    def clickable(self):
        if self.is_leaf:
            return self.element.clickable

        return any(c.clickable is True for c in self.children)

    @property
    def ui_type(self):
        return self.element.ui_type if self.is_leaf else self.kind

    def leaves(self):
        """ Elements under this node in navigation order. """

        if self.is_leaf:
            return [self.element]

        out = []
        for child in self.children:
            out.extend(child.leaves())

        return out

    def with_children(self, children):
        return accessibility_node(self.kind, element=self.element,
                                  children=children, selected=self.selected)

    def to_dict(self):
        out = {"kind": self.kind, "box": self.box.to_dict(),
               "alt_text": self.alt_text, "clickable": self.clickable}

        if self.is_leaf:
            out["element"] = self.element.to_dict()

        else:
            out["children"] = [c.to_dict() for c in self.children]

        if self.selected is not None:
            out["selected"] = self.selected

        return out

    @classmethod
    def from_dict(cls, d):
        if d["kind"] == "leaf":
            e = d["element"]
            box = bbox(*[e["box"][k] for k in "ltrb"])
            element = detected_element(
                e["id"], box, e["type"], confidence=e.get("confidence", 1.),
                text=e.get("text"), icon_class=e.get("icon_class"),
                selected=e.get("selected"), clickable=e.get("clickable"),
                clickable_annotated=e.get("clickable_annotated"))

            return cls.leaf(element)

        return cls.group(d["kind"], [cls.from_dict(c) for c in d["children"]],
                         selected=d.get("selected"))

    def __repr__(self):
        if self.is_leaf:
            return "leaf(" + self.element.id + ")"

        return self.kind + "(" + ", ".join(repr(c) for c in self.children) \
            + ")"


class accessibility_tree(object):
    """ Pipeline output for one screen: top-level nodes in navigation
    order.

    Parameters
    ----------

    screen_id : str
        Screen the tree describes.

    nodes : list
        Top-level accessibility_node objects, in navigation order.
    """

    def __init__(self, screen_id, nodes):
        self.screen_id = str(screen_id)
        self.nodes = list(nodes)

    @property
    def n_navigable(self):
        """ Number of stops a screen reader user swipes through. """
        return len(self.nodes)

    def elements(self):
        """ Every element in the tree, in navigation order. """
        out = []
        for node in self.nodes:
            out.extend(node.leaves())

        return out

    def element_order(self):
        return [e.id for e in self.elements()]

    def groups(self):
        """ All group nodes, nested Container children included, in
        navigation order. """

        out = []
        stack = list(reversed(self.nodes))
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                out.append(node)
                stack.extend(reversed(node.children))

        return out

    def to_dict(self):
        return {"screen_id": self.screen_id,
                "nodes": [n.to_dict() for n in self.nodes]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["screen_id"],
                   [accessibility_node.from_dict(n) for n in d["nodes"]])


def save_trees(path, trees):
    """ Write a list of trees as one JSON array. """
    utils.write_json(path, [t.to_dict() for t in trees])


def load_trees(path):
    """ Read trees written by save_trees. Malformed files raise
    SchemaError. """

    records = load_json(path)
    if not isinstance(records, list):
        raise SchemaError(path, "top level must be a list of trees")

    try:
        return [accessibility_tree.from_dict(r) for r in records]

    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError(path, "bad tree record: " + str(err))
