/**
 * Incremental mesh map on the console side.
 *
 * Applies the per-snapshot deltas in order; vertex/triangle counts must track
 * the service exactly (that is the resync criterion). Holds flat typed-array
 * buffers ready for a WebGL uploader, plus an elevation color channel.
 */

import type { MeshDelta } from "./types.js";

export class MeshDeltaError extends Error {}

export class MeshStore {
  private positions: Float32Array = new Float32Array(0);
  private indices: Uint32Array = new Uint32Array(0);
  private nVertices = 0;
  private nTriangles = 0;
  private zMin = Number.POSITIVE_INFINITY;
  private zMax = Number.NEGATIVE_INFINITY;

  get vertexCount(): number {
    return this.nVertices;
  }

  get triangleCount(): number {
    return this.nTriangles;
  }

  /** xyz triplets of every vertex applied so far (trimmed view). */
  get vertexBuffer(): Float32Array {
    return this.positions.subarray(0, this.nVertices * 3);
  }

  get indexBuffer(): Uint32Array {
    return this.indices.subarray(0, this.nTriangles * 3);
  }

  get elevationRange(): [number, number] {
    return [this.zMin, this.zMax];
  }

  apply(delta: MeshDelta): void {
    const addV = delta.vertices.length;
    const addT = delta.triangles.length;
    this.ensureCapacity(this.nVertices + addV, this.nTriangles + addT);
    for (const [x, y, z] of delta.vertices) {
      const base = this.nVertices * 3;
      this.positions[base] = x;
      this.positions[base + 1] = y;
      this.positions[base + 2] = z;
      this.nVertices += 1;
      if (z < this.zMin) this.zMin = z;
      if (z > this.zMax) this.zMax = z;
    }
    for (const tri of delta.triangles) {
      for (const idx of tri) {
        if (idx < 0 || idx >= this.nVertices) {
          throw new MeshDeltaError(`triangle references vertex ${idx} of ${this.nVertices}`);
        }
      }
      const base = this.nTriangles * 3;
      this.indices[base] = tri[0];
      this.indices[base + 1] = tri[1];
      this.indices[base + 2] = tri[2];
      this.nTriangles += 1;
    }
    if (this.nVertices !== delta.vertex_count || this.nTriangles !== delta.triangle_count) {
      throw new MeshDeltaError(
        `mesh counts diverged: have ${this.nVertices}/${this.nTriangles}, ` +
          `stream says ${delta.vertex_count}/${delta.triangle_count}`,
      );
    }
  }

  /** Vertex color channel: elevation mapped onto a cold-to-warm ramp. */
  elevationColors(): Float32Array {
    const out = new Float32Array(this.nVertices * 3);
    const span = this.zMax - this.zMin || 1.0;
    for (let i = 0; i < this.nVertices; i++) {
      const z = this.positions[i * 3 + 2];
      const t = (z - this.zMin) / span;
      out[i * 3] = t;
      out[i * 3 + 1] = 0.35 + 0.25 * t;
      out[i * 3 + 2] = 1.0 - t;
    }
    return out;
  }

  reset(): void {
    this.positions = new Float32Array(0);
    this.indices = new Uint32Array(0);
    this.nVertices = 0;
    this.nTriangles = 0;
    this.zMin = Number.POSITIVE_INFINITY;
    this.zMax = Number.NEGATIVE_INFINITY;
  }

  private ensureCapacity(vertices: number, triangles: number): void {
    if (vertices * 3 > this.positions.length) {
      const grown = new Float32Array(Math.max(vertices * 3 * 2, 1024));
      grown.set(this.positions);
      this.positions = grown;
    }
    if (triangles * 3 > this.indices.length) {
      const grown = new Uint32Array(Math.max(triangles * 3 * 2, 1024));
      grown.set(this.indices);
      this.indices = grown;
    }
  }
}
