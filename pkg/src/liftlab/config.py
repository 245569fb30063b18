"""Global limits. Defaults may be overridden through environment variables."""

import os

FIELD_ORDER_BOUND = 1 << 20

#: Maximum number of codewords (or selector matrices) enumerated by a single query.
ENUMERATION_BUDGET = int(os.environ.get("LIFTLAB_BUDGET", 1 << 26))

#: Maximum number of t-subsets examined by a design verification.
SUBSET_BUDGET = int(os.environ.get("LIFTLAB_SUBSET_BUDGET", 10**7))


def resolve_budget(budget):
    return ENUMERATION_BUDGET if budget is None else int(budget)


def resolve_subset_budget(budget):
    return SUBSET_BUDGET if budget is None else int(budget)
