from __future__ import print_function, division, absolute_import

from ..geometry import bbox
from ..input.screen import detected_element
from ..input.ui_types import interactive_types, intrinsic_state
from ..structure.tree import accessibility_node

from . import render


""" Screen templates. Each template lays out one kind of screen in
normalised coordinates and records, together, the annotated elements,
the ground-truth tree in navigation order and the rectangles to paint.

Non-tab content always ends above content_floor, so nothing but a tab
bar reaches the tab zone at the bottom of the screen. """

content_floor = 0.78
content_top = 0.13

# Text line height and the factors applied to it for gaps that must
# (inside a paragraph) or must not (between paragraphs) join lines.
line_height = 0.02
joining_gap = (0.25, 0.9)
separating_gap = (1.1, 2.0)

icon_vocabulary = ["back", "close", "add", "share", "settings", "search",
                   "menu", "more", "chevron", "star", "heart", "info",
                   "home", "profile", "bell", "camera", "mail", "calendar",
                   "unknown"]

# Icons of these classes are clickable wherever they are.
clickable_icon_classes = ["back", "close", "add", "share", "settings",
                          "search", "menu", "more"]

# Icons this close to the top or bottom edge sit in a navigation or tab
# bar and are clickable.
clickable_edge = 0.12

words = ["account", "album", "alerts", "archive", "balance", "battery",
         "browse", "calendar", "camera", "cards", "chat", "contacts",
         "daily", "data", "discover", "display", "downloads", "drafts",
         "events", "explore", "favourites", "feed", "files", "friends",
         "games", "general", "groups", "help", "history", "home",
         "inbox", "library", "location", "music", "news", "notes",
         "offers", "orders", "photos", "privacy", "profile", "recent",
         "reminders", "saved", "security", "shared", "sounds", "storage",
         "today", "travel", "updates", "videos", "wallet", "weather"]

tab_icons = ["home", "search", "profile", "bell", "settings"]
tab_labels = ["Home", "Search", "Profile", "Alerts", "Settings"]


def planted_clickable(box, icon_class):
    """ Whether an icon is clickable under the rule synthetic corpora are
    annotated with. """

    cy = box.center[1]
    return bool(cy < clickable_edge or cy > 1. - clickable_edge
                or icon_class in clickable_icon_classes)


def phrase(rng, low=1, high=3):
    n = int(rng.integers(low, high + 1))
    picked = rng.choice(words, size=n)
    return " ".join(picked).capitalize()


class canvas(object):
    """ Collects the elements, truth nodes and paints of one screen.

    Parameters
    ----------

    rng : numpy.random.Generator
        The screen's random stream.

    low_contrast : bool - optional
        Draw selection tints too faint to tell apart after quantisation.
    """

    def __init__(self, rng, low_contrast=False):
        self.rng = rng
        self.low_contrast = low_contrast
        self.elements = []
        self.nodes = []
        self.paints = []

    def tint(self, base):
        """ Tint for a selected item drawn over base. """
        if self.low_contrast:
            return render.faint(base)

        return render.tints[int(self.rng.integers(len(render.tints)))]

    def element(self, ui_type, box, text=None, icon_class=None,
                selected=None, color=None):
        """ Annotated element with its default paint. """

        if ui_type in intrinsic_state:
            selected = intrinsic_state[ui_type]

        if ui_type == "Icon":
            clickable = planted_clickable(box, icon_class)

        elif ui_type in interactive_types:
            clickable = True

        else:
            clickable = None

        e = detected_element("e" + str(len(self.elements)), box, ui_type,
                             confidence=1., text=text, icon_class=icon_class,
                             selected=selected, clickable=clickable,
                             clickable_annotated=clickable)

        self.elements.append(e)
        self.draw(e, color)

        return e

    def draw(self, e, color=None):
        box = e.box
        add = self.paints.append

        if e.ui_type == "Text":
            add(render.paint(render.inset(box, 0., 0.25),
                             color or render.text_ink))

        elif e.ui_type == "Icon":
            add(render.paint(render.inset(box), color or render.icon_gray))

        elif e.ui_type == "Picture":
            fill = render.picture_fills[int(self.rng.integers(
                len(render.picture_fills)))]
            add(render.paint(box, color or fill))

        elif e.ui_type == "Container":
            add(render.paint(box, render.container_fill))

        elif e.ui_type == "SegmentedControl":
            add(render.paint(box, render.segment_fill))
            if e.text:
                add(render.paint(render.inset(box, 0.3, 0.3),
                                 color or render.icon_gray))

        elif e.ui_type == "TextField":
            add(render.paint(box, render.field_fill))
            add(render.paint(render.inset(box, 0.05, 0.3), render.icon_gray))

        elif e.ui_type in ["ToggleSelected", "ToggleUnselected"]:
            on = e.ui_type == "ToggleSelected"
            add(render.paint(box, render.switch_on if on
                             else render.switch_off))
            knob = bbox(box.left + (0.55 if on else 0.05)*box.width,
                        box.top + 0.1*box.height,
                        box.left + (0.95 if on else 0.45)*box.width,
                        box.bottom - 0.1*box.height)
            add(render.paint(knob, render.background))

        elif e.ui_type in ["CheckboxSelected", "CheckboxUnselected"]:
            if e.ui_type == "CheckboxSelected":
                add(render.paint(box, render.tints[0]))

            else:
                add(render.paint(box, render.icon_gray))
                add(render.paint(render.inset(box, 0.15, 0.15),
                                 render.background))

        elif e.ui_type == "Slider":
            add(render.paint(render.inset(box, 0., 0.4), render.icon_gray))
            knob_x = box.left + self.rng.uniform(0.1, 0.9)*box.width
            add(render.paint(bbox(knob_x - 0.02, box.top, knob_x + 0.02,
                                  box.bottom), render.tints[0]))

        else:
            add(render.paint(render.inset(box, 0.3, 0.3), render.icon_gray))

    def leaf(self, *args, **kwargs):
        return accessibility_node.leaf(self.element(*args, **kwargs))

    def add(self, node):
        self.nodes.append(node)


def nav_bar(c):
    """ Back button, title and an optional action icon across the top. """

    rng = c.rng
    row = []

    if rng.random() < 0.8:
        row.append(c.leaf("Icon", bbox(0.04, 0.065, 0.11, 0.095),
                          icon_class="back"))

    row.append(c.leaf("Text", bbox(0.3, 0.068, 0.7, 0.092),
                      text=phrase(rng, 1, 2)))

    if rng.random() < 0.6:
        action = ["share", "more", "settings", "search", "add",
                  "close"][int(rng.integers(6))]
        row.append(c.leaf("Icon", bbox(0.89, 0.065, 0.96, 0.095),
                          icon_class=action))

    for node in row:
        c.add(node)

    return content_top


def paragraphs(c, top, n_paragraphs, floor=content_floor):
    """ Paragraphs of full-width lines. Lines inside a paragraph are
    closer than a line height and form a TextBlock; paragraphs are
    further apart. Stops early when the floor is reached. """

    rng = c.rng
    y = top

    for _ in range(n_paragraphs):
        n_lines = int(rng.integers(1, 5))
        gaps = [rng.uniform(*joining_gap)*line_height
                for _ in range(n_lines - 1)]

        while n_lines and y + n_lines*line_height + sum(gaps) > floor:
            n_lines -= 1
            gaps = gaps[:max(0, n_lines - 1)]

        if not n_lines:
            break

        lines = []
        for i in range(n_lines):
            right = 0.95 if i < n_lines - 1 else rng.uniform(0.3, 0.9)
            lines.append(c.leaf("Text", bbox(0.05, y, right,
                                             y + line_height),
                                text=phrase(rng, 3, 6)))
            y += line_height
            if i < n_lines - 1:
                y += gaps[i]

        if len(lines) > 1:
            c.add(accessibility_node.group("TextBlock", lines))

        else:
            c.add(lines[0])

        y += rng.uniform(*separating_gap)*line_height

    return y


def article(c, spec):
    """ Heading, optional share icon and paragraphs of text. """

    rng = c.rng
    top = nav_bar(c)

    heading = c.leaf("Text", bbox(0.05, top, 0.8, top + 0.03),
                     text=phrase(rng, 2, 4))
    c.add(heading)

    if rng.random() < 0.5:
        c.add(c.leaf("Icon", bbox(0.88, top, 0.95, top + 0.03),
                     icon_class="share"))

    y = top + 0.03 + rng.uniform(*separating_gap)*line_height
    low, high = spec.ranges["paragraphs"]

    paragraphs(c, y, int(rng.integers(low, high + 1)))


def list_row(c, top):
    """ One Container row of a settings-style list. """

    rng = c.rng
    container = c.leaf("Container", bbox(0.03, top, 0.97, top + 0.08))
    kind = ["item", "item", "toggle", "checkbox",
            "slider"][int(rng.integers(5))]

    if kind == "item":
        icon = c.leaf("Icon", bbox(0.06, top + 0.02, 0.14, top + 0.06),
                      icon_class=icon_vocabulary[int(rng.integers(
                          len(icon_vocabulary)))])

        title = c.leaf("Text", bbox(0.18, top + 0.012,
                                    rng.uniform(0.6, 0.8), top + 0.034),
                       text=phrase(rng, 1, 3))

        if rng.random() < 0.5:
            subtitle = c.leaf("Text", bbox(0.18, top + 0.04,
                                           rng.uniform(0.5, 0.85),
                                           top + 0.058),
                              text=phrase(rng, 2, 5))
            label = accessibility_node.group("TextBlock", [title, subtitle])

        else:
            label = title

        chevron = c.leaf("Icon", bbox(0.89, top + 0.025, 0.94, top + 0.055),
                         icon_class="chevron")
        members = [icon, label, chevron]

    elif kind == "toggle":
        title = c.leaf("Text", bbox(0.06, top + 0.028, 0.6, top + 0.052),
                       text=phrase(rng, 1, 3))
        toggle = c.leaf("ToggleSelected" if rng.random() < 0.5
                        else "ToggleUnselected",
                        bbox(0.8, top + 0.022, 0.94, top + 0.058))
        members = [title, toggle]

    elif kind == "checkbox":
        box = c.leaf("CheckboxSelected" if rng.random() < 0.5
                     else "CheckboxUnselected",
                     bbox(0.06, top + 0.025, 0.12, top + 0.055))
        title = c.leaf("Text", bbox(0.16, top + 0.028, 0.7, top + 0.052),
                       text=phrase(rng, 1, 3))
        members = [box, title]

    else:
        icon = c.leaf("Icon", bbox(0.06, top + 0.02, 0.14, top + 0.06),
                      icon_class="unknown")
        slider = c.leaf("Slider", bbox(0.18, top + 0.03, 0.94, top + 0.05))
        members = [icon, slider]

    c.add(accessibility_node.group("Container", [container] + members))


def list_screen(c, spec):
    """ Optional search field and rows of Containers. """

    rng = c.rng
    top = nav_bar(c)

    if rng.random() < 0.5:
        c.add(c.leaf("TextField", bbox(0.05, top - 0.015, 0.95, top + 0.025),
                     text="Search"))
        top += 0.04

    low, high = spec.ranges["list_rows"]
    n_rows = int(rng.integers(low, high + 1))

    for i in range(n_rows):
        row_top = top + i*0.09
        if row_top + 0.08 > content_floor:
            break

        list_row(c, row_top)


def picture_grid(c, spec):
    """ Grid of pictures with one or two caption lines under each, and
    sometimes a page control below. """

    rng = c.rng
    top = nav_bar(c)

    low, high = spec.ranges["grid_columns"]
    n_cols = int(rng.integers(low, high + 1))
    low, high = spec.ranges["grid_rows"]
    n_rows = int(rng.integers(low, high + 1))

    col_gap, row_gap = 0.04, 0.04
    col_width = (0.9 - col_gap*(n_cols - 1))/n_cols

    caption_room = 0.027 + 0.044
    pitch = (content_floor - 0.03 - top)/n_rows
    picture_height = min(rng.uniform(0.1, 0.14),
                         pitch - row_gap - caption_room)

    y = top
    for _ in range(n_rows):
        bottom = y
        for j in range(n_cols):
            left = 0.05 + j*(col_width + col_gap)

            picture = c.leaf("Picture", bbox(left, y, left + col_width,
                                             y + picture_height))

            gap = rng.uniform(0.1, 0.9)*0.03
            t_top = y + picture_height + gap
            right = left + col_width*rng.uniform(0.6, 1.)
            first = c.leaf("Text", bbox(left, t_top, right, t_top + 0.02),
                           text=phrase(rng, 1, 3))
            children = [picture, first]

            if rng.random() < 0.3:
                s_top = t_top + 0.024
                right = left + col_width*rng.uniform(0.5, 1.)
                children.append(c.leaf("Text", bbox(left, s_top, right,
                                                    s_top + 0.018),
                                       text=phrase(rng, 1, 2)))

            c.add(accessibility_node.group("PictureWithSubtitle", children))
            bottom = max(bottom, children[-1].box.bottom)

        y = bottom + row_gap

    if rng.random() < 0.4 and y + 0.012 <= content_floor:
        c.add(c.leaf("PageControl", bbox(0.42, y, 0.58, y + 0.012)))


def segmented_control(c, spec):
    """ A Segmented Control row under the title, drawn with one of three
    selection styles, above some paragraphs. """

    rng = c.rng
    top = nav_bar(c)

    low, high = spec.ranges["segments"]
    n = int(rng.integers(low, high + 1))
    chosen = int(rng.integers(n))

    style = ["tint", "underline", "text"][int(rng.integers(3))]
    if style == "tint" and n < 3:
        style = "underline"

    gap = 0.01
    width = (0.9 - gap*(n - 1))/n

    for i in range(n):
        left = 0.05 + i*(width + gap)
        box = bbox(left, top, left + width, top + 0.05)
        selected = i == chosen

        text = phrase(rng, 1, 1)
        color = None

        if style == "tint":
            color = c.tint(render.icon_gray) if selected else None

        elif style == "text" and not selected:
            text = None

        c.add(c.leaf("SegmentedControl", box, text=text, selected=selected,
                     color=color))

        if style == "underline" and selected:
            c.paints.append(render.paint(render.bottom_bar(box),
                                         c.tint(render.segment_fill)))

    low, high = spec.ranges["paragraphs"]
    paragraphs(c, top + 0.05 + 0.03, int(rng.integers(low, high + 1)))


def tab_bar(c, spec):
    """ A list or an article above a bar of Tab Bar Items, one of them
    selected. """

    rng = c.rng

    if rng.random() < 0.5:
        list_screen(c, spec)

    else:
        article(c, spec)

    low, high = spec.ranges["tabs"]
    n = int(rng.integers(low, high + 1))
    chosen = int(rng.integers(n))
    tint = c.tint(render.icon_gray)

    c.paints.append(render.paint(bbox(0., 0.905, 1., 1.),
                                 render.tab_bar_fill))

    label_width = min(0.7/n, 0.16)
    for i in range(n):
        cx = (i + 0.5)/n
        color = tint if i == chosen else render.icon_gray

        icon = c.leaf("Icon", bbox(cx - 0.035, 0.915, cx + 0.035, 0.95),
                      icon_class=tab_icons[i], color=color)
        label = c.leaf("Text", bbox(cx - label_width/2., 0.955,
                                    cx + label_width/2., 0.975),
                       text=tab_labels[i], color=color)

        c.add(accessibility_node.group("TabButton", [icon, label],
                                       selected=i == chosen))


templates = {"tab_bar": tab_bar, "list": list_screen, "article": article,
             "picture_grid": picture_grid,
             "segmented_control": segmented_control}
