/**
 * Console session: one socket to the mission-control bridge.
 *
 * Network handling stays on the socket callbacks; rendering consumers pull
 * immutable scene models. Commands go out as JSON lines; the pending badges
 * clear when an acknowledgement appears in a later snapshot (never before
 * one radio round trip).
 */

import * as net from "node:net";

import { DispatchPanel, type Transport } from "./dispatch.js";
import { Gallery } from "./gallery.js";
import { buildScene, type SceneModel } from "./render.js";
import { SnapshotClient } from "./snapshotClient.js";
import type { Snapshot, UiCommand } from "./types.js";

export interface ConsoleOptions {
  host: string;
  port: number;
  station: number;
  ownedRobots: string[];
  onSnapshot?: (snapshot: Snapshot) => void;
  onResync?: (reason: string) => void;
}

class SocketTransport implements Transport {
  constructor(private socket: net.Socket) {}

  send(command: UiCommand): void {
    this.socket.write(JSON.stringify(command) + "\n");
  }
}

export class ConsoleSession {
  readonly client: SnapshotClient;
  readonly gallery = new Gallery();
  readonly panel: DispatchPanel;
  private socket: net.Socket | null = null;
  private buffer = "";
  private options: ConsoleOptions;

  constructor(options: ConsoleOptions) {
    this.options = options;
    this.client = new SnapshotClient((reason) => options.onResync?.(reason));
    this.panel = new DispatchPanel(options.station, {
      send: (command) => this.sendRaw(command),
    });
    this.panel.updateOwnership(options.ownedRobots);
  }

  connect(): Promise<void> {
    return new Promise((resolve, reject) => {
      const socket = net.createConnection(
        { host: this.options.host, port: this.options.port },
        () => resolve(),
      );
      socket.on("error", reject);
      socket.on("data", (chunk) => this.onData(chunk));
      this.socket = socket;
      this.panelTransport = new SocketTransport(socket);
    });
  }

  private panelTransport: Transport | null = null;

  private sendRaw(command: UiCommand): void {
    if (this.panelTransport) {
      this.panelTransport.send(command);
    }
  }

  private onData(chunk: Buffer): void {
    this.buffer += chunk.toString("utf-8");
    let idx = this.buffer.indexOf("\n");
    while (idx >= 0) {
      const line = this.buffer.slice(0, idx);
      this.buffer = this.buffer.slice(idx + 1);
      const snapshot = this.client.ingestLine(line);
      if (snapshot) {
        this.gallery.update(snapshot);
        this.panel.applySnapshot(snapshot);
        this.options.onSnapshot?.(snapshot);
      }
      idx = this.buffer.indexOf("\n");
    }
  }

  scene(): SceneModel {
    return buildScene(this.client.mesh, this.client.latest);
  }

  close(): void {
    this.socket?.end();
  }
}
