/**
 * Map view model: what the 3D layer draws each frame.
 *
 * Kept free of DOM/WebGL so it runs headless; a renderer consumes the typed
 * buffers from the mesh store plus the overlay lists built here. The SVG
 * top view is the lightweight built-in visualization (and doubles as the
 * test surface for overlay placement).
 */

import type { Snapshot } from "./types.js";
import { MeshStore } from "./meshStore.js";

export interface Overlay {
  kind: "robot" | "target" | "banner";
  id: string;
  x: number;
  y: number;
  heading?: number;
  label: string;
  emphasis?: boolean;
}

export interface SceneModel {
  vertexBuffer: Float32Array;
  indexBuffer: Uint32Array;
  colorBuffer: Float32Array | null;
  overlays: Overlay[];
  losBanner: boolean;
  coverage: number;
  clock: number;
}

export function buildScene(
  mesh: MeshStore,
  snapshot: Snapshot | null,
  elevationColoring = true,
): SceneModel {
  const overlays: Overlay[] = [];
  if (snapshot) {
    for (const [name, entry] of Object.entries(snapshot.fleet)) {
      overlays.push({
        kind: "robot",
        id: name,
        x: entry.x,
        y: entry.y,
        heading: entry.heading,
        label: `${name} [${entry.state}]`,
        emphasis: entry.state === "Failed",
      });
    }
    for (const target of snapshot.targets) {
      overlays.push({
        kind: "target",
        id: target.id,
        x: target.position[0],
        y: target.position[1],
        label: `${target.id} (${target.kind}, p${target.priority})`,
        emphasis: target.instruments.length === 0,
      });
    }
  }
  return {
    vertexBuffer: mesh.vertexBuffer,
    indexBuffer: mesh.indexBuffer,
    colorBuffer: elevationColoring ? mesh.elevationColors() : null,
    overlays,
    losBanner: snapshot?.los ?? false,
    coverage: snapshot?.coverage ?? 0,
    clock: snapshot?.t ?? 0,
  };
}

/** Minimal top-down SVG of the scene (triangles plus overlays). */
export function sceneToSvg(scene: SceneModel, width = 640, height = 640): string {
  const vb = scene.vertexBuffer;
  const ib = scene.indexBuffer;
  let xMin = Infinity;
  let xMax = -Infinity;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (let i = 0; i < vb.length; i += 3) {
    if (vb[i] < xMin) xMin = vb[i];
    if (vb[i] > xMax) xMax = vb[i];
    if (vb[i + 1] < yMin) yMin = vb[i + 1];
    if (vb[i + 1] > yMax) yMax = vb[i + 1];
  }
  for (const o of scene.overlays) {
    xMin = Math.min(xMin, o.x);
    xMax = Math.max(xMax, o.x);
    yMin = Math.min(yMin, o.y);
    yMax = Math.max(yMax, o.y);
  }
  if (!Number.isFinite(xMin)) {
    xMin = 0;
    yMin = 0;
    xMax = 1;
    yMax = 1;
  }
  const spanX = xMax - xMin || 1;
  const spanY = yMax - yMin || 1;
  const sx = (x: number) => ((x - xMin) / spanX) * (width - 20) + 10;
  const sy = (y: number) => height - (((y - yMin) / spanY) * (height - 20) + 10);

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}">`,
    `<rect width="100%" height="100%" fill="#10141a"/>`,
  ];
  const triLimit = Math.min(scene.indexBuffer.length / 3, 20000);
  for (let t = 0; t < triLimit; t++) {
    const a = ib[t * 3] * 3;
    const b = ib[t * 3 + 1] * 3;
    const c = ib[t * 3 + 2] * 3;
    parts.push(
      `<polygon points="${sx(vb[a]).toFixed(1)},${sy(vb[a + 1]).toFixed(1)} ` +
        `${sx(vb[b]).toFixed(1)},${sy(vb[b + 1]).toFixed(1)} ` +
        `${sx(vb[c]).toFixed(1)},${sy(vb[c + 1]).toFixed(1)}" ` +
        `fill="#2c4a63" stroke="#3f6b8f" stroke-width="0.3"/>`,
    );
  }
  for (const o of scene.overlays) {
    const color = o.kind === "robot" ? "#ffd24a" : o.emphasis ? "#ff5c5c" : "#6ee86e";
    parts.push(
      `<circle cx="${sx(o.x).toFixed(1)}" cy="${sy(o.y).toFixed(1)}" r="5" fill="${color}"/>`,
      `<text x="${(sx(o.x) + 7).toFixed(1)}" y="${sy(o.y).toFixed(1)}" ` +
        `fill="#dddddd" font-size="10">${o.label}</text>`,
    );
  }
  if (scene.losBanner) {
    parts.push(
      `<rect x="0" y="0" width="${width}" height="26" fill="#8c1d1d"/>`,
      `<text x="10" y="18" fill="#ffffff" font-size="14">LOSS OF SIGNAL - ` +
        `robots on autonomous routines</text>`,
    );
  }
  parts.push(
    `<text x="10" y="${height - 8}" fill="#9fb7c9" font-size="11">` +
      `t=${scene.clock.toFixed(0)}s coverage=${(scene.coverage * 100).toFixed(1)}%</text>`,
    "</svg>",
  );
  return parts.join("\n");
}
