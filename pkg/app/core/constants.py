# filename: app/core/constants.py

# Methods accepted by the homology command and endpoint.
HOMOLOGY_METHODS = {"resolution", "nerve", "auto"}

# Orders of groups whose integral homology is read off a fixed pattern
# instead of being resolved. Cyclic of prime order; order 4 is split into
# C_4 and the Klein four-group by counting squares.
PRIME_PATTERN_GROUP_ORDERS = {2, 3, 5, 7}
KLEIN_PATTERN_GROUP_ORDER = 4

# Names of the dispatch branches taken by get_homology.
ROUTE_K_THIN_PATTERN = "k-thin-pattern"
ROUTE_K_THIN_GROUP = "k-thin-group"
ROUTE_CORNER_REDUCTION = "corner-reduction"
ROUTE_MONOID = "monoid"
ROUTE_ADJOINED_UNIT = "adjoined-unit"

# Line prefix for comments in the table text format.
TABLE_COMMENT_PREFIX = "#"

# CLI exit codes.
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2
