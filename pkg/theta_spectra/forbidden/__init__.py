from .patterns import F5, THETA_122, THETA_123, Pattern, parse_pattern, parse_patterns
from .subgraph import Embedding, contains_subgraph, find_forbidden, is_free
from .paths import has_path_subgraph
