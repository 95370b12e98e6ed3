"""Event camera and spiking-network tracking, in isolation.

Drives the ring across the room, synthesizes the DVS event stream from
rendered frames, runs the leaky integrate-and-fire detector on 30 ms
windows, and prints how the resulting track compares with ground truth.
Also exports an accumulated event frame as a PGM image.
"""
from pathlib import Path

import numpy as np

from ringflight import events as ev
from ringflight import snn
from ringflight.geometry import CameraModel, vec3
from ringflight.world import (RingState, WorldState, render_intensity,
                              ring_center, ring_step)

OUT = Path(__file__).parent / "out"


def main():
    world = WorldState(ring=RingState(pivot_s=1.0, drive_velocity=0.3,
                                      target_drive_velocity=0.3))
    camera = CameraModel(position=vec3(2.5, 0.2, 1.5))
    sensor = ev.SensorParams()
    refs = ev.init_reference(render_intensity(world, camera, 0.1), sensor)
    layer = snn.SpikingLayer(width=sensor.width, height=sensor.height)
    tracker = snn.TrackerParams(plane_y=2.0, velocity_baseline_us=500_000,
                                position_filter_gain=0.06)

    track = None
    window: list[np.ndarray] = []
    all_events: list[np.ndarray] = []
    dt = 0.005
    print(" t      detections      track x    true x    track vx   true vx")
    for k in range(1, int(4.0 / dt) + 1):
        t0, t1 = int((k - 1) * dt * 1e6), int(k * dt * 1e6)
        world.ring = ring_step(world.ring, dt)
        frame = render_intensity(world, camera, 0.1)
        batch, refs = ev.emit_events(refs, frame, t0, t1, sensor)
        window.append(batch)
        all_events.append(batch)
        if k % 2:
            continue
        lo = t1 - 30_000
        recent = [b for b in window if len(b) and b["t"].max() > lo]
        events = np.concatenate(recent) if recent else ev.empty_events()
        det = snn.detect_ring(layer, events[events["t"].astype(np.int64) > lo],
                              t1, dt_steps=10)
        window = window[-12:]
        if det is not None:
            track = snn.update_track(track, det, camera, tracker)
        if k % 100 == 0 and track is not None:
            true = ring_center(world.ring)
            print(f"{k * dt:5.2f} s  age {track.age:4d}     "
                  f"{track.world_position[0]:7.3f}  {true[0]:7.3f}  "
                  f"{track.world_velocity[0]:8.3f}  "
                  f"{world.ring.drive_velocity:7.3f}")

    OUT.mkdir(parents=True, exist_ok=True)
    stream = np.concatenate(all_events)
    accumulated = ev.accumulate_frame(stream, window=30_000, params=sensor)
    pgm = OUT / "event_frame.pgm"
    ev.write_frame_pgm(pgm, accumulated)
    print(f"\n{len(stream)} events total; accumulated frame -> {pgm}")


if __name__ == "__main__":
    main()
