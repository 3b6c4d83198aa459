#!/usr/bin/env python3
"""Generate console test fixtures from the reference end-to-end mission.

Runs the standard three-robot mission with the console snapshot stream
enabled and records the service-side mesh counts the stream must reproduce.
"""

import json
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
PKG_SRC = HERE.parent.parent / "src"
sys.path.insert(0, str(PKG_SRC))

from prospectsim.missionctl import sim as msim  # noqa: E402
from prospectsim.missionctl.policies import (  # noqa: E402
    FrontierExplore,
    ScienceRoundRobin,
    TargetQueue,
)
from prospectsim.missionctl.uibridge import UiStream  # noqa: E402


def main() -> int:
    out_dir = HERE.parent / "test" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    stream_path = out_dir / "src_mission_ui.jsonl"
    counts_path = out_dir / "src_mission_expected.json"

    scenario = msim.build_src_analog_scenario(42)
    policies = [
        FrontierExplore(robot="scout", decision_delay=10.0),
        TargetQueue(robot="hybrid", instruments=("CTX", "MIRA"), kinds=("boulder",),
                    decision_delay=20.0),
        ScienceRoundRobin(robot="scientist", decision_delay=30.0),
    ]
    ui = UiStream(stream_path)
    sim = msim.MissionSim(scenario, policies, msim.SimConfig(seed=3, loss_prob=0.01),
                          ui_sink=ui)
    while sim.now < scenario.mission_time_limit:
        sim.step()
    ui.emit(sim, sim.now)
    ui.close()

    counts_path.write_text(
        json.dumps(
            {
                "vertex_count": sim.mc.mesh.vertex_count,
                "triangle_count": sim.mc.mesh.triangle_count,
                "coverage": round(sim.mc.coverage(), 4),
                "snapshots": ui.version,
            },
            indent=1,
        )
    )
    print(f"wrote {stream_path} ({stream_path.stat().st_size} bytes)")
    print(f"expected counts: {counts_path.read_text()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
