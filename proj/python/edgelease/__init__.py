"""Cloud-Edge portion broker.

Selects the profit-maximal portion of a Cloud-Edge infrastructure that
satisfies an application operator's local and global requirements.
"""

from ._edgelease import BrokerError, enumerate, solve, validate

__all__ = ["BrokerError", "enumerate", "solve", "validate"]
