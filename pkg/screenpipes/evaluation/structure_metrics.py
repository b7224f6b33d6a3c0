from __future__ import print_function, division, absolute_import

import numpy as np

from ..exceptions import IdMismatch
from ..input.ui_types import group_kinds
from ..structure.ordering import insertion_distance

from .matching import align_screens


other_errors = "Other"


def _group_sets(tree):
    return [(g.kind, frozenset(e.id for e in g.leaves()))
            for g in tree.groups()]


def _stats(values):
    values = np.asarray(values, dtype=float)
    if values.shape[0] == 0:
        return {"mean": None, "std": None, "min": None, "max": None}

    return {"mean": float(values.mean()), "std": float(values.std()),
            "min": float(values.min()), "max": float(values.max())}


def compare_groups(produced, truth):
    """ Grouping errors of one produced tree against its truth tree.

    A produced group is correct when some truth group has exactly its
    elements, and incorrectly grouped when its elements are not all in
    one truth group. A truth group whose elements are not all in one
    produced group should have been grouped. Errors are attributed to
    the kind of the group at fault; a missed group whose elements were
    taken by a produced group of another kind counts as "Other".
    """

    produced_ids = set(produced.element_order())
    truth_ids = set(truth.element_order())

    if produced_ids != truth_ids:
        raise IdMismatch("Trees for screen " + truth.screen_id
                         + " contain different elements.")

    made = _group_sets(produced)
    wanted = _group_sets(truth)

    breakdown = dict((k, {"incorrect": 0, "should_have": 0})
                     for k in group_kinds + [other_errors])

    correct = sum(1 for _, ids in made
                  if any(ids == t for _, t in wanted))

    incorrect = 0
    for kind, ids in made:
        if not any(ids <= t for _, t in wanted):
            incorrect += 1
            breakdown[kind]["incorrect"] += 1

    should_have = 0
    for kind, ids in wanted:
        if not any(ids <= m for _, m in made):
            should_have += 1

            rivals = set(k for k, m in made if m & ids and k != kind)
            bucket = other_errors if rivals else kind
            breakdown[bucket]["should_have"] += 1

    return {"groups_made": len(made), "groups_truth": len(wanted),
            "correct": correct, "incorrect": incorrect,
            "should_have": should_have, "breakdown": breakdown}


def grouping_metrics(produced_trees, truth_trees):
    """ Grouping quality over a set of screens.

    Reports the reduction in the number of navigation stops (elements
    before grouping against top-level nodes after), the mean and std of
    both, counts of correctly formed, incorrectly grouped and
    should-have-grouped groups with a breakdown per group kind, and the
    distribution of errors per screen.
    """

    before, after, errors = [], [], []
    totals = {"groups_made": 0, "groups_truth": 0, "correct": 0,
              "incorrect": 0, "should_have": 0}
    breakdown = dict((k, {"incorrect": 0, "should_have": 0})
                     for k in group_kinds + [other_errors])

    for produced, truth in align_screens(produced_trees, truth_trees):
        result = compare_groups(produced, truth)

        for key in totals:
            totals[key] += result[key]

        for kind, counts in result["breakdown"].items():
            for key in counts:
                breakdown[kind][key] += counts[key]

        before.append(len(produced.element_order()))
        after.append(produced.n_navigable)
        errors.append(result["incorrect"] + result["should_have"])

    n_before = float(np.sum(before))
    reduction = (1. - np.sum(after)/n_before) if n_before else 0.

    out = dict(totals)
    out.update({"n_screens": len(before),
                "reduction": float(reduction),
                "elements_before": _stats(before),
                "elements_after": _stats(after),
                "errors_per_screen": _stats(errors),
                "incorrect_fraction": (totals["incorrect"]
                                       / float(totals["groups_made"])
                                       if totals["groups_made"] else 0.),
                "recovered_fraction": (totals["correct"]
                                       / float(totals["groups_truth"])
                                       if totals["groups_truth"] else 1.),
                "breakdown": breakdown})

    return out


def ordering_metrics(produced_orders, truth_orders):
    """ Navigation order quality over a set of screens.

    Parameters
    ----------

    produced_orders, truth_orders : dict
        Element id lists keyed by screen id. Both must cover the same
        screens, or IdMismatch is raised.

    Returns
    -------

    stats : dict
        Per-screen insertion distances, the fraction of screens in
        perfect order, the fraction with fewer than one error per ten
        elements (strictly), and the mean, std, min and max distance and
        number of elements.
    """

    if set(produced_orders) != set(truth_orders):
        raise IdMismatch("Order sets cover different screens.")

    ids = sorted(truth_orders)
    distances = dict((s, insertion_distance(produced_orders[s],
                                            truth_orders[s])) for s in ids)

    sizes = [len(truth_orders[s]) for s in ids]
    d = [distances[s] for s in ids]

    n = float(len(ids))

    out = {"n_screens": len(ids),
           "per_screen": distances,
           "perfect": (sum(1 for x in d if x == 0)/n) if ids else 1.,
           "within_tenth": (sum(1 for x, size in zip(d, sizes)
                                if x < size/10.)/n) if ids else 1.,
           "distance": _stats(d),
           "elements": _stats(sizes)}

    out["mean_distance"] = out["distance"]["mean"] if ids else 0.

    return out


def tree_orders(trees):
    """ Element navigation order of each tree, keyed by screen id. """
    return dict((t.screen_id, t.element_order()) for t in trees)


def selection_metrics(produced_trees, truth_trees):
    """ Share of screens whose selection states are all right.

    A screen with Tab Buttons counts as correct when every truth Tab
    Button is formed with the same elements and the same selected flag.
    A screen with Segmented Controls counts as correct when every truth
    segment has the same selected flag in the produced tree.
    """

    tab_screens, tab_correct = 0, 0
    sc_screens, sc_correct = 0, 0

    for produced, truth in align_screens(produced_trees, truth_trees):

        truth_tabs = [(frozenset(e.id for e in g.leaves()), g.selected)
                      for g in truth.groups() if g.kind == "TabButton"]

        if truth_tabs:
            made = dict((frozenset(e.id for e in g.leaves()), g.selected)
                        for g in produced.groups() if g.kind == "TabButton")

            tab_screens += 1
            tab_correct += all(ids in made and made[ids] == selected
                               for ids, selected in truth_tabs)

        segments = [e for e in truth.elements()
                    if e.ui_type == "SegmentedControl"]

        if segments:
            states = dict((e.id, e.selected) for e in produced.elements())

            sc_screens += 1
            sc_correct += all(states.get(e.id, "missing") == e.selected
                              for e in segments)

    return {"tab_screens": tab_screens,
            "tab_state_accuracy": (tab_correct/float(tab_screens)
                                   if tab_screens else None),
            "sc_screens": sc_screens,
            "sc_state_accuracy": (sc_correct/float(sc_screens)
                                  if sc_screens else None)}
