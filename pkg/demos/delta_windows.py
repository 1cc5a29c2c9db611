"""Where in parameter space does high-probability transfer live?

F_P(delta, T, dtau) is the worst-case best transfer probability over
all nodes within the time budget T.  Sweeping it over delta maps out
the windows where the whole cluster is reachable.  Longer budgets open
wider windows; the fine-grained sweep at T = 6 reveals a second window
at large delta.
"""

from spintransfer import sweep1d
from spintransfer.geometry import FIELD_ALONG_B, FIELD_PERPENDICULAR

CONFIGS = [
    ("perpendicular field, T = 10 ", FIELD_PERPENDICULAR, (4.0, 11.0), 10.0, 0.01),
    ("perpendicular field, T = 15 ", FIELD_PERPENDICULAR, (2.0, 19.0), 15.0, 0.01),
    ("field along side b, T = 3.5 ", FIELD_ALONG_B, (2.0, 7.0), 3.5, 0.01),
    ("field along side b, T = 6   ", FIELD_ALONG_B, (1.5, 31.0), 6.0, 0.001),
]

for label, mode, delta_range, T, dtau in CONFIGS:
    result = sweep1d(mode, delta_range, 0.01, T, dtau)
    windows = ", ".join(f"[{lo:.2f}, {hi:.2f}]" for lo, hi in result.intervals)
    print(f"{label} delta in {windows}")

print()
print("Main windows, for reference:")
print("  perpendicular, T = 10 : [5.56, 9.62]")
print("  perpendicular, T = 15 : [5.56, 17.79]")
print("  along,         T = 3.5: [2.62, 6.08]")
print("  along,         T = 6  : [2.32, 6.08] and [14.89, 30.63]")
