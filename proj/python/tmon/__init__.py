"""Online monitor for timed properties given as a pair of timed Buchi automata."""

from numbers import Real

from ._tmon import (
    InconsistentPair,
    Location,
    MonitorError,
    ParseError,
    Tba,
    TraceError,
    Verdict,
    divergence_automaton,
    format_scaled,
    load_tba,
    nonempty_states,
    parse_tba,
    product,
    run,
    scale_decimal,
)
from ._tmon import Monitor as _Monitor

__all__ = [
    "InconsistentPair",
    "Location",
    "Monitor",
    "MonitorError",
    "ParseError",
    "Tba",
    "TraceError",
    "Verdict",
    "divergence_automaton",
    "format_scaled",
    "load_tba",
    "nonempty_states",
    "parse_tba",
    "product",
    "run",
    "scale_decimal",
]


def _time_text(time):
    if isinstance(time, str):
        return time
    if isinstance(time, bool) or not isinstance(time, Real):
        raise TypeError(f"time must be a decimal string or a number, got {type(time).__name__}")
    if isinstance(time, int):
        return str(time)
    # repr gives the shortest decimal that round-trips the float.
    return repr(float(time))


class Monitor(_Monitor):
    """Monitor that also accepts numeric timestamps in step()."""

    def step(self, symbol, time):
        return super().step(symbol, _time_text(time))
