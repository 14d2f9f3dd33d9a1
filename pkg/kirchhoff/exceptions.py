"""
Exception hierarchy shared by the library and the command line.
"""
from typing import Iterable, List


class KirchhoffError(Exception):
    """Base class for every error raised by this package"""

    exit_code = 1


# ============ Input errors (exit code 1) ============

class InputError(KirchhoffError):
    """Bad input file, bad graph or bad parameter"""

    exit_code = 1


class UsageError(InputError):
    """Invalid command-line usage"""


class GraphFormatError(InputError):
    """Syntax or semantic error in a graph file"""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)


class GraphValidationError(InputError):
    """Graph violates one or more structural invariants"""

    def __init__(self, violations: Iterable[str]):
        self.violations: List[str] = list(violations)
        super().__init__("invalid graph: " + "; ".join(self.violations))


class UnreachableNodeError(InputError):
    """A node has no path from the start node"""

    def __init__(self, node: str):
        self.node = node
        super().__init__(f"node '{node}' is unreachable from start")


class VmaxOutOfRangeError(InputError):
    """Explicit V_max outside the open interval (0, ST)"""

    def __init__(self, v_max, st):
        self.v_max = v_max
        self.st = st
        super().__init__(f"v_max={v_max} must satisfy 0 < v_max < ST={st}")


class UnknownEdgeIdError(InputError):
    """Edge ids that do not exist in the graph"""

    def __init__(self, ids: Iterable[int]):
        self.ids = sorted(ids)
        super().__init__(f"unknown edge id(s): {', '.join(map(str, self.ids))}")


class NoPathError(InputError):
    """No path joins the two nodes"""

    def __init__(self, source: str, target: str):
        self.source = source
        self.target = target
        super().__init__(f"no path from '{source}' to '{target}'")


# ============ Numerical errors (exit code 2) ============

class NumericalError(KirchhoffError):
    """Failure of the numerical solve"""

    exit_code = 2


class SingularSystemError(NumericalError):
    """Nodal matrix is (effectively) singular"""

    def __init__(self, pivot_index: int, detail: str = ""):
        self.pivot_index = pivot_index
        msg = f"singular nodal system (zero pivot at row {pivot_index})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ZeroCurrentError(NumericalError):
    """No current leaves the start node"""

    def __init__(self):
        super().__init__("total current is zero; effective resistance undefined")
