from .util import DotDict, ResourceLimitError, enumeration_limit
