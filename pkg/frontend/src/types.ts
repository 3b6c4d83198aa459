/** Wire types of the mission-control console bridge (schema version 1). */

export interface MeshDelta {
  vertices: [number, number, number][];
  triangles: [number, number, number][];
  vertex_count: number;
  triangle_count: number;
}

export interface FleetEntry {
  robot: string;
  x: number;
  y: number;
  heading: number;
  z: number;
  energy_used: number;
  distance: number;
  state: string;
  payload_mask: number;
  t: number;
}

export interface TargetView {
  id: string;
  kind: string;
  position: [number, number, number];
  priority: number;
  instruments: string[];
  best_match: string | null;
}

export interface PendingView {
  request_id: string;
  robot: string;
  acked: boolean;
  result: string | null;
  sent_at: number;
  kind: string;
}

export interface LinkView {
  downlink_dropped_loss: number;
  downlink_dropped_los: number;
  downlink_delivered: number;
  uplink_delivered: number;
}

export interface Snapshot {
  type: "snapshot";
  version: number;
  t: number;
  fleet: Record<string, FleetEntry>;
  los: boolean;
  link: LinkView;
  targets: TargetView[];
  pending: PendingView[];
  coverage: number;
  mesh_delta: MeshDelta;
}

export interface Hello {
  type: "hello";
  schema: number;
}

export type StreamMessage = Snapshot | Hello;

export type UiCommandKind =
  | "mark_target"
  | "set_priority"
  | "dispatch_task"
  | "handover_robot"
  | "request_mesh_region";

export interface TaskWire {
  task_kind:
    | "NavigationGoal"
    | "RemoteMeasurement"
    | "InSituMeasurement"
    | "Panorama"
    | "Stop";
  request_id: string;
  goal: number[];
  target_id?: string | null;
  zoom?: "low" | "high";
  use_mira?: boolean;
  use_micro?: boolean;
  priority?: number;
  params?: Record<string, unknown>;
}

export interface UiCommand {
  kind: UiCommandKind;
  station: number;
  request_id: string;
  robot?: string;
  task?: TaskWire;
  target_id?: string;
  priority?: number;
  detection?: Record<string, unknown>;
  region?: { x: number; y: number; radius: number };
}
