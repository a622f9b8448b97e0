"""Exact checks for Fermat-type arrangements of codimension-2 flats.

Thin wrapper over the C++ core: every call returns the parsed JSON document
that the command-line tool would print for the same arguments.
"""

import json as _json

try:
    from . import _core
except ImportError:  # running against a build tree, extension not in the package
    import _core

__all__ = [
    "lemmas",
    "flats",
    "gens",
    "contain",
    "structure",
    "prooftrace",
    "cas_export_flats",
    "cas_export_gens",
    "cas_export_contain",
]


def lemmas(k_max=4, n_set=(3, 4, 5)):
    """Sweep the bracket identities for 1 <= k <= k_max and each exponent in n_set."""
    return _json.loads(_core.lemmas(k_max, list(n_set)))


def flats(N, n):
    """List the codimension-2 flats of the (N, n) arrangement."""
    return _json.loads(_core.flats(N, n))


def gens(N, n):
    """List the generators of the (N, n) arrangement ideal."""
    return _json.loads(_core.gens(N, n))


def contain(N, n, m=3, r=2, field="auto", nf_crosscheck=False, max_spairs=0,
            max_matrix_cells=0, max_rational_cells=0):
    """Check F in I^(m) symbolically and F outside I^r by graded linear algebra.

    field: "auto", "rational", or "prime:p[,q,...]".  Budget arguments of 0
    keep the defaults.
    """
    return _json.loads(_core.contain(N, n, m, r, field, nf_crosscheck, max_spairs,
                                     max_matrix_cells, max_rational_cells))


def structure(N, n, field="auto", max_spairs=0, max_matrix_cells=0, max_rational_cells=0):
    """Verify the ideal-intersection description and the generator identities."""
    return _json.loads(_core.structure(N, n, field, max_spairs, max_matrix_cells,
                                       max_rational_cells))


def prooftrace(N, n, uniqueness=False):
    """Trace the coefficient contradiction behind the noncontainment proof."""
    return _json.loads(_core.prooftrace(N, n, uniqueness))


def cas_export_flats(N, n):
    """Singular script listing the flat ideals."""
    return _core.cas_export_flats(N, n)


def cas_export_gens(N, n):
    """Singular script defining the arrangement ideal."""
    return _core.cas_export_gens(N, n)


def cas_export_contain(N, n, r=2):
    """Singular script reducing F against a Groebner basis of I^r."""
    return _core.cas_export_contain(N, n, r)
