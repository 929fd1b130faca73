from .abelian import (
    AbelianAutomorphism,
    AbelianGroup,
    DihedralGroup,
    GDihElement,
    abelian_automorphisms,
    count_abelian_automorphisms,
    gdih_multiply,
    iter_abelian_automorphisms,
)
from .catalog import STABILIZER_ORDERS_BY_S, STABILIZERS_BY_S, Fingerprint, fingerprint, identify, identify_group
from .concrete import PermutationGroupElements, right_regular
from .perm import (
    ClosureCapExceeded,
    Perm,
    PermGroup,
    centralizer,
    dumps_perms,
    group_from_elements,
    is_semiregular,
    is_semiregular_by_closure,
    loads_perms,
    normalizer,
)

__all__ = [
    "AbelianAutomorphism", "AbelianGroup", "DihedralGroup", "GDihElement", "abelian_automorphisms",
    "count_abelian_automorphisms", "gdih_multiply", "iter_abelian_automorphisms", "STABILIZER_ORDERS_BY_S",
    "STABILIZERS_BY_S", "Fingerprint", "fingerprint", "identify", "identify_group", "PermutationGroupElements",
    "right_regular", "ClosureCapExceeded", "Perm", "PermGroup", "centralizer", "dumps_perms",
    "group_from_elements", "is_semiregular", "is_semiregular_by_closure", "loads_perms", "normalizer",
]
