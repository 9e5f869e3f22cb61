"""Shared enums, named constants and registries."""
import enum


class Connectivity(enum.Enum):
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"


class PairOutcome(enum.Enum):
    ADJACENT = "adjacent"
    NONADJACENT = "nonadjacent"
    FAIL = "fail"


class FailureKind(enum.Enum):
    BAD_DIMENSION = "bad_dimension"
    PAIR_UNDECIDABLE = "pair_undecidable"
    VERIFICATION_MISMATCH = "verification_mismatch"
    OUTSIDE_PROMISE = "outside_promise"


class ObstructionKind(enum.Enum):
    TWINS = "twins"
    P4_MEMBERSHIP = "p4_membership"
    DOMINATING_PAIR = "dominating_pair"


# Triple consulted when both C and D are singletons with distinct x and y.
# Entries name the roles (u, x_of_C, y_of_C, x_of_D, y_of_D) used.
STEP7_TRIPLES = {
    "enumerated": ("u", "x2", "y1"),
    "preceding": ("u", "x1", "y2"),
}
STEP7_TRIPLE = "enumerated"

# When several C (or D) pairs disagree in both coordinates the pair is
# reported undecidable instead of picking one pattern.
STEP5_TIE_BREAKS = ["fail", "adjacent", "nonadjacent"]
STEP5_BOTH_PATTERNS = "fail"

# Second excluded set of the large-d family: how to treat a literal
# evaluation whose size is not d + 1.
LARGE_D_POLICIES = ["strict", "literal", "pad"]

CONSTRUCTION_FAMILIES = ["dim0", "codim2", "counter-small", "counter-large"]

ORACLE_MODES = [
    "uniqueness",
    "total-uniqueness",
    "recognition",
    "lower-bound",
    "flip-search",
    "invariance",
    "twin-corollary",
    "conditions",
    "constructions",
    "duality",
    "complexity",
]

# Full enumeration is cheap up to this many vertices; one more is allowed
# behind an explicit flag.
FULL_ENUMERATION_LIMIT = 6
LARGE_ENUMERATION_LIMIT = 7
MAX_SAMPLED_N = 256

REPORT_FORMAT = "cutcomplex-report/1"

EXIT_CODES = {
    "ok": 0,
    "bad_input": 1,
    FailureKind.BAD_DIMENSION: 1,
    FailureKind.PAIR_UNDECIDABLE: 2,
    FailureKind.VERIFICATION_MISMATCH: 2,
    FailureKind.OUTSIDE_PROMISE: 3,
    "oracle_violations": 2,
    "conditions_fail": 4,
}
