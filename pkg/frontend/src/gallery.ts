/**
 * Science-data gallery model: per-target investigation rollup driven by the
 * target views in each snapshot (thumbnails and spectra render from the
 * product records the service attaches to the registry).
 */

import type { Snapshot, TargetView } from "./types.js";

export interface GalleryCard {
  targetId: string;
  kind: string;
  priority: number;
  instruments: string[];
  bestMatch: string | null;
  complete: boolean;
}

const FULL_SETS: Record<string, string[]> = {
  rea: ["MIRA", "MICRO"],
  boulder: ["CTX", "MIRA"],
};

export class Gallery {
  private cards = new Map<string, GalleryCard>();

  update(snapshot: Snapshot): void {
    for (const target of snapshot.targets) {
      this.cards.set(target.id, toCard(target));
    }
  }

  /** Cards sorted by priority, unfinished investigations first. */
  list(): GalleryCard[] {
    return [...this.cards.values()].sort((a, b) => {
      if (a.complete !== b.complete) return a.complete ? 1 : -1;
      if (a.priority !== b.priority) return a.priority - b.priority;
      return a.targetId.localeCompare(b.targetId);
    });
  }

  get investigatedCount(): number {
    return [...this.cards.values()].filter((c) => c.instruments.length > 0).length;
  }
}

function toCard(target: TargetView): GalleryCard {
  const want = FULL_SETS[target.kind] ?? [];
  const complete = want.length > 0 && want.every((w) => target.instruments.includes(w));
  return {
    targetId: target.id,
    kind: target.kind,
    priority: target.priority,
    instruments: [...target.instruments],
    bestMatch: target.best_match,
    complete,
  };
}
