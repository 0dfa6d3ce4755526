// Deterministic force layout. Seeding is derived from the vertex names, so
// the same quiver always lands in the same picture across sessions.

import type { QuiverJson } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function hashStrings(parts: string[]): number {
  let h = 2166136261;
  for (const part of parts) {
    for (let i = 0; i < part.length; i++) {
      h ^= part.charCodeAt(i);
      h = Math.imul(h, 16777619);
    }
    h ^= 0x9e3779b9;
  }
  return h >>> 0;
}

export function forceLayout(
  quiver: QuiverJson,
  width: number,
  height: number,
  iterations = 250,
): Point[] {
  const n = quiver.vertices.length;
  if (n === 0) return [];
  const rand = mulberry32(hashStrings(quiver.vertices));
  const radius = Math.min(width, height) * 0.35;
  const cx = width / 2;
  const cy = height / 2;
  const pos: Point[] = Array.from({ length: n }, (_, i) => ({
    x: cx + radius * Math.cos((2 * Math.PI * i) / n) + (rand() - 0.5) * 10,
    y: cy + radius * Math.sin((2 * Math.PI * i) / n) + (rand() - 0.5) * 10,
  }));
  if (n === 1) return [{ x: cx, y: cy }];

  const edges: [number, number][] = [];
  for (const [i, j, mult] of quiver.arrows) {
    if (i !== j && mult > 0) edges.push([i, j]);
  }
  const k = radius / Math.sqrt(n);
  const springLength = k * 2;
  for (let step = 0; step < iterations; step++) {
    const cool = 1 - step / iterations;
    const force: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i]!.x - pos[j]!.x;
        const dy = pos[i]!.y - pos[j]!.y;
        const dist = Math.max(Math.hypot(dx, dy), 0.01);
        const push = (k * k) / dist / dist;
        force[i]!.x += dx * push;
        force[i]!.y += dy * push;
        force[j]!.x -= dx * push;
        force[j]!.y -= dy * push;
      }
    }
    for (const [i, j] of edges) {
      const dx = pos[j]!.x - pos[i]!.x;
      const dy = pos[j]!.y - pos[i]!.y;
      const dist = Math.max(Math.hypot(dx, dy), 0.01);
      const pull = (dist - springLength) / dist / 8;
      force[i]!.x += dx * pull;
      force[i]!.y += dy * pull;
      force[j]!.x -= dx * pull;
      force[j]!.y -= dy * pull;
    }
    for (let i = 0; i < n; i++) {
      pos[i]!.x += force[i]!.x * cool;
      pos[i]!.y += force[i]!.y * cool;
      // gentle gravity toward the center keeps components on screen
      pos[i]!.x += (cx - pos[i]!.x) * 0.01 * cool;
      pos[i]!.y += (cy - pos[i]!.y) * 0.01 * cool;
    }
  }
  const margin = 30;
  for (const p of pos) {
    p.x = Math.min(Math.max(p.x, margin), width - margin);
    p.y = Math.min(Math.max(p.y, margin), height - margin);
  }
  return pos;
}
