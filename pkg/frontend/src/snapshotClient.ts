/**
 * Ordered snapshot consumption with gap detection.
 *
 * Snapshots must apply strictly in version order; any gap (e.g. a dropped
 * socket buffer) poisons the incremental mesh, so the client flags a resync:
 * the owner reconnects and replays the stream from the start.
 */

import type { Snapshot, StreamMessage } from "./types.js";
import { MeshStore } from "./meshStore.js";

export type ResyncHandler = (reason: string) => void;

export class SnapshotClient {
  readonly mesh = new MeshStore();
  latest: Snapshot | null = null;
  schema: number | null = null;
  applied = 0;
  resyncRequested = false;

  private expected = 1;
  private onResync: ResyncHandler | null;

  constructor(onResync: ResyncHandler | null = null) {
    this.onResync = onResync;
  }

  /** Feed one parsed stream message; returns the snapshot when applied. */
  ingest(message: StreamMessage): Snapshot | null {
    if (message.type === "hello") {
      this.schema = message.schema;
      return null;
    }
    if (message.type !== "snapshot") {
      return null;
    }
    if (message.version !== this.expected) {
      this.resyncRequested = true;
      this.onResync?.(
        `version gap: expected ${this.expected}, received ${message.version}`,
      );
      return null;
    }
    this.expected += 1;
    this.mesh.apply(message.mesh_delta);
    this.latest = message;
    this.applied += 1;
    return message;
  }

  ingestLine(line: string): Snapshot | null {
    const trimmed = line.trim();
    if (!trimmed) return null;
    return this.ingest(JSON.parse(trimmed) as StreamMessage);
  }

  /** Full resync: drop local state and replay a complete stream. */
  resync(lines: Iterable<string>): void {
    this.mesh.reset();
    this.latest = null;
    this.applied = 0;
    this.expected = 1;
    this.resyncRequested = false;
    for (const line of lines) {
      this.ingestLine(line);
    }
  }
}
