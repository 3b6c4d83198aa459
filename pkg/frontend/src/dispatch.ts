/**
 * Command-side console logic: station ownership, the in-situ 6-DoF
 * adjustment step, and pending badges that clear when the robot's
 * acknowledgement shows up in the snapshot stream (one round trip later).
 */

import type { PendingView, Snapshot, TaskWire, UiCommand } from "./types.js";

export interface Transport {
  send(command: UiCommand): void;
}

export class OwnershipError extends Error {}

export interface SixDofPose {
  x: number;
  y: number;
  z: number;
  hx: number;
  hy: number;
  hz: number;
}

/** The interactive-marker flow: spawn at a picked point, adjust, confirm. */
export class SixDofMarker {
  pose: SixDofPose;

  constructor(picked: { x: number; y: number; z: number }) {
    // default heading: straight into the surface
    this.pose = { ...picked, hx: 0, hy: 0, hz: -1 };
  }

  translate(dx: number, dy: number, dz: number): this {
    this.pose.x += dx;
    this.pose.y += dy;
    this.pose.z += dz;
    return this;
  }

  setHeading(hx: number, hy: number, hz: number): this {
    const n = Math.hypot(hx, hy, hz);
    if (n < 1e-9) throw new Error("heading must be non-zero");
    this.pose.hx = hx / n;
    this.pose.hy = hy / n;
    this.pose.hz = hz / n;
    return this;
  }

  asGoal(): number[] {
    const p = this.pose;
    return [p.x, p.y, p.z, p.hx, p.hy, p.hz];
  }
}

export interface PendingBadge {
  requestId: string;
  robot: string;
  kind: string;
  dispatchedAt: number;
  ackedAt: number | null;
  result: string | null;
}

export class DispatchPanel {
  readonly station: number;
  private transport: Transport;
  private counter = 0;
  private badges = new Map<string, PendingBadge>();
  private owned = new Set<string>();
  readonly rejections: string[] = [];

  constructor(station: number, transport: Transport) {
    this.station = station;
    this.transport = transport;
  }

  updateOwnership(robots: string[]): void {
    this.owned = new Set(robots);
  }

  get pendingBadges(): PendingBadge[] {
    return [...this.badges.values()];
  }

  private nextRequestId(prefix: string): string {
    this.counter += 1;
    return `ui${this.station}-${prefix}-${String(this.counter).padStart(4, "0")}`;
  }

  private guardOwnership(robot: string): void {
    if (!this.owned.has(robot)) {
      const msg = `station ${this.station} does not command ${robot}`;
      this.rejections.push(msg);
      throw new OwnershipError(msg);
    }
  }

  dispatchNavigation(robot: string, clock: number, x: number, y: number): string {
    this.guardOwnership(robot);
    const task: TaskWire = {
      task_kind: "NavigationGoal",
      request_id: this.nextRequestId("nav"),
      goal: [x, y, 0],
    };
    return this.sendTask(robot, clock, task);
  }

  dispatchRemote(robot: string, clock: number, targetId: string,
                 point: [number, number, number], zoom: "low" | "high" = "high"): string {
    this.guardOwnership(robot);
    const task: TaskWire = {
      task_kind: "RemoteMeasurement",
      request_id: this.nextRequestId("rem"),
      goal: [...point],
      target_id: targetId,
      zoom,
    };
    return this.sendTask(robot, clock, task);
  }

  /** In-situ dispatch requires the confirmed 6-DoF marker pose. */
  dispatchInSitu(robot: string, clock: number, targetId: string, marker: SixDofMarker,
                 useMira = true, useMicro = true): string {
    this.guardOwnership(robot);
    const task: TaskWire = {
      task_kind: "InSituMeasurement",
      request_id: this.nextRequestId("ins"),
      goal: marker.asGoal(),
      target_id: targetId,
      use_mira: useMira,
      use_micro: useMicro,
    };
    return this.sendTask(robot, clock, task);
  }

  markTarget(clock: number, detection: Record<string, unknown>): void {
    this.transport.send({
      kind: "mark_target",
      station: this.station,
      request_id: this.nextRequestId("mark"),
      detection,
    });
  }

  setPriority(targetId: string, priority: number): void {
    this.transport.send({
      kind: "set_priority",
      station: this.station,
      request_id: this.nextRequestId("prio"),
      target_id: targetId,
      priority,
    });
  }

  handover(robot: string, toStation: number): void {
    this.transport.send({
      kind: "handover_robot",
      station: toStation,
      request_id: this.nextRequestId("hand"),
      robot,
    });
  }

  private sendTask(robot: string, clock: number, task: TaskWire): string {
    this.transport.send({
      kind: "dispatch_task",
      station: this.station,
      request_id: task.request_id,
      robot,
      task,
    });
    this.badges.set(task.request_id, {
      requestId: task.request_id,
      robot,
      kind: task.task_kind,
      dispatchedAt: clock,
      ackedAt: null,
      result: null,
    });
    return task.request_id;
  }

  /** Fold a snapshot's pending list into the local badges. */
  applySnapshot(snapshot: Snapshot): void {
    const byId = new Map<string, PendingView>(
      snapshot.pending.map((p) => [p.request_id, p]),
    );
    for (const badge of this.badges.values()) {
      const view = byId.get(badge.requestId);
      if (view === undefined) continue;
      if (view.acked && badge.ackedAt === null) {
        badge.ackedAt = snapshot.t;
      }
      badge.result = view.result;
    }
  }

  /** Seconds a request stayed pending before its acknowledgement arrived. */
  ackLatency(requestId: string): number | null {
    const badge = this.badges.get(requestId);
    if (!badge || badge.ackedAt === null) return null;
    return badge.ackedAt - badge.dispatchedAt;
  }
}
