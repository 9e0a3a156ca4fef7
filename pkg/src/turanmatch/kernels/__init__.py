"""Kernel backend selection.

The compiled extension (`turanmatch.kernels._fast`) is preferred when it
imported cleanly; otherwise the pure-Python twin takes over.  Set
``TURANMATCH_BACKEND=pure`` or ``=fast`` to force a choice (``fast`` raises
if the extension is missing).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import pure

_choice = os.environ.get("TURANMATCH_BACKEND", "").strip().lower()

if _choice == "pure":
    impl: ModuleType = pure
elif _choice in ("fast", "compiled", "cython"):
    from . import _fast as impl  # type: ignore[no-redef]
else:
    try:
        from . import _fast as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

BACKEND: str = impl.BACKEND_NAME


def get_impl(name: str | None = None) -> ModuleType:
    """Fetch a backend module by name ("pure"/"fast"); default is the active one."""
    if name is None:
        return impl
    if name == "pure":
        return pure
    if name in ("fast", "compiled", "cython"):
        from . import _fast

        return _fast
    raise ValueError(f"unknown backend {name!r}")


edge_slots = pure.edge_slots
adj_from_mask = pure.adj_from_mask
splitmix64 = pure.splitmix64
random_edge_mask = pure.random_edge_mask

nu_blossom = impl.nu_blossom
nu_bitmask = impl.nu_bitmask
blossom_matching = impl.blossom_matching
count_cliques = impl.count_cliques
clique_profile = impl.clique_profile
longest_path_in_component = impl.longest_path_in_component
contains = impl.contains
count_injections = impl.count_injections
tb_minimum = impl.tb_minimum
tb_value_of_set = pure.tb_value_of_set
scan_matching_equality = impl.scan_matching_equality
scan_matching_equality_random = impl.scan_matching_equality_random
scan_tutte_berge = impl.scan_tutte_berge
scan_path_degree_bound = impl.scan_path_degree_bound
scan_component_cliqueify = impl.scan_component_cliqueify
scan_component_rewire = impl.scan_component_rewire
search_subtree = impl.search_subtree
search_prefixes = impl.search_prefixes
count_admissible = impl.count_admissible
