"""Python access to the commnil group-theory checks."""

import json

from ._commnil import (
    GroupError,
    Permutation,
    PermGroup,
    __version__,
    builtin,
    builtin_ids,
    commutator,
    delta_values,
    derived_orders,
    derived_subgroup,
    fitting_height,
    fitting_subgroup,
    is_nilpotent,
    is_soluble,
    lower_central_orders,
    sylow_subgroup,
)
from . import _commnil


def criterion(g, k, kind="delta"):
    return json.loads(_commnil.criterion(g, k, kind))


def theorem_check(g, k):
    return json.loads(_commnil.theorem_check(g, k))


def xclo(g, seed=0):
    return json.loads(_commnil.xclo(g, seed))


def run(command, groups=(), filter="all", ks=(1, 2, 3), seed=0):
    """Runs a batch command; returns (exit_code, report dict)."""
    code, text = _commnil.run(command, list(groups), filter, list(ks), seed)
    return code, json.loads(text)
