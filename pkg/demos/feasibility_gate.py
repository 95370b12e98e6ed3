"""The kinematic go/no-go gate, poked directly.

Shows the three failure branches (required acceleration, final speed,
raw distance) on hand-picked queries, then the same gate embedded in the
language classifier rejecting an underpowered drone.
"""
import numpy as np

from ringflight.feasibility import (DroneCapabilities, FeasibilityQuery,
                                    feasibility_check, infeasibility_reason)
from ringflight.language import classify_go_nogo
from ringflight.snn import EnvironmentStateReport


def show(query, note):
    verdict = "GO " if feasibility_check(query) else "NO-GO"
    print(f"  [{verdict}] {note}")
    if not feasibility_check(query):
        print(f"          {infeasibility_reason(query)}")


def main():
    print("direct queries (v_max = 1.5 m/s, a_max = 2.0 m/s^2):")
    base = dict(p_src=np.zeros(3), v0=0.0, v_max=1.5, a_max=2.0)
    show(FeasibilityQuery(p_dest=np.array([2.0, 0, 0]), t=4.0, **base),
         "2 m in 4 s — comfortable")
    show(FeasibilityQuery(p_dest=np.array([2.0, 0, 0]), t=1.0, **base),
         "2 m in 1 s — needs 4 m/s^2")
    show(FeasibilityQuery(p_dest=np.array([3.1, 0, 0]), t=4.0, **base),
         "3.1 m in 4 s — arrival speed would exceed v_max")
    show(FeasibilityQuery(p_dest=np.array([7.0, 0, 0]), t=4.0,
                          p_src=np.zeros(3), v0=3.0, v_max=1.5, a_max=2.0),
         "7 m in 4 s — not coverable even at v_max")

    print("\nthe same gate behind a language command:")
    esr = EnvironmentStateReport(
        obstacle_count=1,
        obstacles=[{"position": np.array([2.5, 2.0, 1.5]),
                    "velocity": np.array([0.3, 0.0, 0.0])}],
        time_to_collision=2.2, timestamp=0)
    for v_max in (1.5, 0.3):
        caps = DroneCapabilities(v_max=v_max, a_max=2.0)
        decision = classify_go_nogo("Fly through Center of Ring", esr, caps,
                                    p_src=[2.5, 0.8, 1.5])
        print(f"  v_max={v_max} m/s -> {decision.decision}"
              + (f" ({decision.reason})" if decision.reason else ""))


if __name__ == "__main__":
    main()
