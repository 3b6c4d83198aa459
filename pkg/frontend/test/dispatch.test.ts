import { describe, expect, it } from "vitest";

import { DispatchPanel, OwnershipError, SixDofMarker } from "../src/dispatch.js";
import type { Snapshot, UiCommand } from "../src/types.js";

class FakeTransport {
  sent: UiCommand[] = [];
  send(command: UiCommand): void {
    this.sent.push(command);
  }
}

function snapshotWith(pending: Snapshot["pending"], t: number): Snapshot {
  return {
    type: "snapshot",
    version: 1,
    t,
    fleet: {},
    los: false,
    link: {
      downlink_dropped_loss: 0,
      downlink_dropped_los: 0,
      downlink_delivered: 0,
      uplink_delivered: 0,
    },
    targets: [],
    pending,
    coverage: 0,
    mesh_delta: { vertices: [], triangles: [], vertex_count: 0, triangle_count: 0 },
  };
}

describe("DispatchPanel", () => {
  it("rejects commands for robots the station does not own", () => {
    const transport = new FakeTransport();
    const panel = new DispatchPanel(1, transport);
    panel.updateOwnership(["scout", "hybrid"]);
    expect(() => panel.dispatchNavigation("scientist", 0, 1, 2)).toThrow(OwnershipError);
    expect(panel.rejections.length).toBe(1);
    expect(transport.sent.length).toBe(0);
  });

  it("sends the adjusted 6-DoF pose, not the picked point", () => {
    const transport = new FakeTransport();
    const panel = new DispatchPanel(2, transport);
    panel.updateOwnership(["scientist"]);
    const marker = new SixDofMarker({ x: 10, y: 4, z: 0.2 });
    marker.translate(0.05, -0.02, 0.0).setHeading(0.1, 0, -1);
    panel.dispatchInSitu("scientist", 100.0, "rea_3", marker);
    expect(transport.sent.length).toBe(1);
    const task = transport.sent[0].task!;
    expect(task.task_kind).toBe("InSituMeasurement");
    expect(task.goal.slice(0, 3)).toEqual([10.05, 3.98, 0.2]);
    const n = Math.hypot(0.1, 0, -1);
    expect(task.goal[3]).toBeCloseTo(0.1 / n, 9);
    expect(task.goal[5]).toBeCloseTo(-1 / n, 9);
    expect(task.goal.length).toBe(6);
  });

  it("keeps a badge pending until a snapshot acknowledges it", () => {
    const transport = new FakeTransport();
    const panel = new DispatchPanel(2, transport);
    panel.updateOwnership(["scientist"]);
    const marker = new SixDofMarker({ x: 1, y: 2, z: 0 });
    const rid = panel.dispatchInSitu("scientist", 50.0, "rea_1", marker);

    panel.applySnapshot(
      snapshotWith(
        [{ request_id: rid, robot: "scientist", acked: false, result: null,
           sent_at: 50.0, kind: "InSituMeasurement" }],
        52.0,
      ),
    );
    expect(panel.ackLatency(rid)).toBeNull();

    panel.applySnapshot(
      snapshotWith(
        [{ request_id: rid, robot: "scientist", acked: true, result: null,
           sent_at: 50.0, kind: "InSituMeasurement" }],
        55.3,
      ),
    );
    const latency = panel.ackLatency(rid);
    expect(latency).not.toBeNull();
    expect(latency!).toBeGreaterThanOrEqual(5.0);
  });

  it("builds ownership handovers and priority edits", () => {
    const transport = new FakeTransport();
    const panel = new DispatchPanel(1, transport);
    panel.updateOwnership(["scout"]);
    panel.handover("scout", 2);
    panel.setPriority("boulder_2", 1);
    expect(transport.sent.map((c) => c.kind)).toEqual(["handover_robot", "set_priority"]);
  });
});
