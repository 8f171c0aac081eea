// Deterministic force layout that honors the rotation system: incident
// half-edges are pinned to angular slots in cyclic order around each vertex,
// so the drawing shows rho, not just adjacency.  Loops occupy two slots and
// render as petals between them.

import { GraphDoc, edgeName } from "./types.js";

export interface VertexPos {
  x: number;
  y: number;
}

export interface EdgePath {
  edge: [string, string];
  name: string;
  labeled: boolean;
  loop: boolean;
  from: VertexPos;
  to: VertexPos;
  control: VertexPos;        // quadratic control point respecting the slots
}

export interface Layout {
  vertices: Record<string, VertexPos>;
  edges: EdgePath[];
  slotAngle: Record<string, number>;  // half-edge -> angle at its vertex
}

function mulberry(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function vertexOf(doc: GraphDoc): Record<string, string> {
  const out: Record<string, string> = {};
  for (const [v, fan] of Object.entries(doc.cyclic_order)) {
    for (const h of fan) out[h] = v;
  }
  return out;
}

export function computeLayout(doc: GraphDoc, width: number, height: number,
                              iterations = 250): Layout {
  const names = doc.vertices.map((v) => v.id).sort();
  const rand = mulberry(names.length * 7919 + 11);
  const pos: Record<string, VertexPos> = {};
  for (const name of names) {
    pos[name] = {
      x: width * (0.25 + 0.5 * rand()),
      y: height * (0.25 + 0.5 * rand()),
    };
  }
  const owner = vertexOf(doc);
  const pairs: [string, string][] = [];
  for (const [a, b] of doc.edges) {
    if (owner[a] !== owner[b]) pairs.push([owner[a], owner[b]]);
  }

  const spring = Math.min(width, height) / Math.max(2.5, Math.sqrt(names.length) + 1);
  for (let step = 0; step < iterations; step++) {
    const temp = 0.1 * Math.min(width, height) * (1 - step / iterations);
    const force: Record<string, VertexPos> = {};
    for (const name of names) force[name] = { x: 0, y: 0 };
    for (let i = 0; i < names.length; i++) {
      for (let j = i + 1; j < names.length; j++) {
        const a = names[i], b = names[j];
        const dx = pos[a].x - pos[b].x, dy = pos[a].y - pos[b].y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const rep = (spring * spring) / d2;
        force[a].x += dx * rep; force[a].y += dy * rep;
        force[b].x -= dx * rep; force[b].y -= dy * rep;
      }
    }
    for (const [a, b] of pairs) {
      const dx = pos[a].x - pos[b].x, dy = pos[a].y - pos[b].y;
      const d = Math.sqrt(Math.max(dx * dx + dy * dy, 1e-4));
      const att = (d * d) / spring / d;
      force[a].x -= dx * att; force[a].y -= dy * att;
      force[b].x += dx * att; force[b].y += dy * att;
    }
    for (const name of names) {
      const f = force[name];
      const mag = Math.sqrt(f.x * f.x + f.y * f.y) || 1;
      const lim = Math.min(mag, temp);
      pos[name].x = Math.min(width - 30, Math.max(30, pos[name].x + (f.x / mag) * lim));
      pos[name].y = Math.min(height - 30, Math.max(30, pos[name].y + (f.y / mag) * lim));
    }
  }

  // angular slots: cyclic order mapped clockwise, phase chosen so the mean
  // slot points at the barycenter of the neighbors
  const slotAngle: Record<string, number> = {};
  for (const [v, fan] of Object.entries(doc.cyclic_order)) {
    let cx = 0, cy = 0, n = 0;
    for (const h of fan) {
      const mate = doc.edges.find(([a, b]) => a === h || b === h)!;
      const other = owner[mate[0] === h ? mate[1] : mate[0]];
      if (other !== v) { cx += pos[other].x; cy += pos[other].y; n += 1; }
    }
    const phase = n ? Math.atan2(cy / n - pos[v].y, cx / n - pos[v].x) : 0;
    fan.forEach((h, k) => {
      slotAngle[h] = phase + (2 * Math.PI * k) / fan.length;
    });
  }

  const labeledSet = new Set(doc.labeled.map(([a, b]) => edgeName([a, b])));
  const edges: EdgePath[] = doc.edges.map(([a, b]) => {
    const va = owner[a], vb = owner[b];
    const from = pos[va], to = pos[vb];
    const loop = va === vb;
    const r = spring * (loop ? 0.9 : 0.25);
    const midx = (from.x + to.x) / 2, midy = (from.y + to.y) / 2;
    const dir = (slotAngle[a] + (loop ? slotAngle[b] : slotAngle[a])) / 2;
    const control = loop
      ? { x: from.x + Math.cos(dir) * 2 * r, y: from.y + Math.sin(dir) * 2 * r }
      : { x: midx + Math.cos(slotAngle[a]) * r * 0.5 - Math.cos(slotAngle[b]) * r * 0.5,
          y: midy + Math.sin(slotAngle[a]) * r * 0.5 - Math.sin(slotAngle[b]) * r * 0.5 };
    const name = edgeName([a, b]);
    return { edge: [a, b], name, labeled: labeledSet.has(name), loop, from, to, control };
  });

  return { vertices: pos, edges, slotAngle };
}
