"""A complete nominal flight, narrated.

The drone climbs to hover, acquires the moving ring through the event
camera, receives "Fly through Center of Ring", passes the feasibility
gate, threads the hoop, and lands. Run artifacts (trajectory, events,
summary) are written next to this script under `out/nominal/`.
"""
from pathlib import Path

from ringflight.scenario import ScenarioConfig, run_scenario

OUT = Path(__file__).parent / "out" / "nominal"


def main():
    config = ScenarioConfig(seed=7, drive_velocity=0.3,
                            commands=[{"time": 0.0,
                                       "text": "Fly through Center of Ring"}])
    result = run_scenario(config, out_dir=OUT, export_text_events=True)

    print(f"outcome:            {result.outcome}")
    print(f"operator response:  {result.response_text!r}")
    print(f"maneuver:           {result.maneuver_kind}")
    print(f"ring detections:    {len(result.detections)}")
    print(f"events emitted:     {len(result.events)}")
    print(f"actuator energy:    {result.energy:.1f} J")
    print(f"closest approach:   {result.min_ring_distance:.3f} m "
          f"(collision below 0.15 m)")
    print("phase timeline:")
    for phase, t in result.phase_timeline:
        print(f"  {t:7.3f} s  {phase}")
    print(f"\nartifacts written to {OUT}")


if __name__ == "__main__":
    main()
