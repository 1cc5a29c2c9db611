"""Test-wide conservation audit.

Every TransferState produced through evolve or evolve_grid anywhere in
the suite gets its total probability logged; the acceptance test for
probability conservation asserts over the accumulated log.  The wrap
happens at conftest import, before any test module binds the names.
"""

import spintransfer
import spintransfer.dynamics as dynamics
import spintransfer.verify as verify

CONSERVATION_LOG = []


def _audit(state):
    CONSERVATION_LOG.append(float(abs(state.probabilities.sum() - 1.0)))
    return state


_evolve = dynamics.evolve
_evolve_grid = dynamics.evolve_grid


def _audited_evolve(spectrum, k0, tau):
    return _audit(_evolve(spectrum, k0, tau))


def _audited_evolve_grid(spectrum, k0, T, dtau):
    return [_audit(s) for s in _evolve_grid(spectrum, k0, T, dtau)]


# Rebind every module-level alias that exists at this point.
dynamics.evolve = _audited_evolve
dynamics.evolve_grid = _audited_evolve_grid
spintransfer.evolve = _audited_evolve
spintransfer.evolve_grid = _audited_evolve_grid
verify.evolve = _audited_evolve
