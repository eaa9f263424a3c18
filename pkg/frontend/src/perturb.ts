// Seeded point perturbation for the steering loop.  This generates new
// *inputs* (like dragging does); all mathematics on those inputs stays on
// the server.

import type { ConfigJson, Pair } from "./types.js";

/** Small deterministic PRNG so perturbation steps are replayable. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface PerturbOptions {
  magnitude: number; // displacement scale relative to the config diameter
  seed: number;
}

function diameter(points: Pair[]): number {
  let best = 0;
  for (let i = 0; i < points.length; i++) {
    for (let j = i + 1; j < points.length; j++) {
      const dx = points[i][0] - points[j][0];
      const dy = points[i][1] - points[j][1];
      best = Math.max(best, Math.hypot(dx, dy));
    }
  }
  return best || 1;
}

/** Displace every configuration point by a small seeded random offset. */
export function perturbConfig(config: ConfigJson, opts: PerturbOptions): ConfigJson {
  const rand = mulberry32(opts.seed);
  const all = [...config.alpha, ...config.beta];
  const scale = opts.magnitude * diameter(all);
  const move = (p: Pair): Pair => {
    const angle = 2 * Math.PI * rand();
    const r = scale * rand();
    return [p[0] + r * Math.cos(angle), p[1] + r * Math.sin(angle)];
  };
  return {
    alpha: config.alpha.map(move),
    beta: config.beta.map(move),
  };
}
