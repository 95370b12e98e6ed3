"""Rejection, mid-flight aborts, and batch statistics.

Part 1: an underpowered drone is told to thread the ring; the classifier
says no-go and the drone lands immediately ("Exiting. Preparing to
land.").

Part 2: the sensor stream is cut mid-flight; the staleness monitor
latches no-go and the state machine jumps straight to prepare-to-land
within one control tick.

Part 3: a small seeded batch with randomized ring speed, start delay,
and command mix.
"""
from ringflight.feasibility import GoNoGo
from ringflight.scenario import (FlightSession, ScenarioConfig, run_batch,
                                 run_scenario)


def part1_reject():
    print("-- reject: v_max lowered to 0.3 m/s --")
    result = run_scenario(ScenarioConfig(seed=7, v_max=0.3))
    print(f"outcome:  {result.outcome}")
    print(f"reason:   {result.nogo_reason}")
    print(f"response: {result.response_text!r}")
    phases = [p for p, _ in result.phase_timeline]
    print(f"phases:   {' -> '.join(phases)}")


def part2_injected_abort():
    print("\n-- injected abort during the maneuver --")
    session = FlightSession(ScenarioConfig(seed=7))
    while session.step():
        if session.machine.phase == "maneuver_through_ring":
            break
    t_abort = session.world.time
    session._handle_nogo(GoNoGo("no-go", "operator abort (demo)"))
    result = session.run()
    print(f"abort injected at t = {t_abort:.2f} s")
    print(f"reaction latency:  {result.abort_latency * 1e3:.1f} ms")
    print(f"outcome:  {result.outcome}, response: {result.response_text!r}")


def part3_batch():
    print("\n-- seeded 8-run batch --")
    summary = run_batch(ScenarioConfig(keep_events=False), 8, seed=123)
    print(summary.table().rstrip())
    for i, r in enumerate(summary.results):
        print(f"  run {i}: {r.maneuver_kind or '-':15s} {r.outcome:9s} "
              f"clearance {r.min_ring_distance:.3f} m")


if __name__ == "__main__":
    part1_reject()
    part2_injected_abort()
    part3_batch()
