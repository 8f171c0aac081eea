import { describe, expect, it } from "vitest";

import { computeLayout } from "../src/layout.js";
import { projectiveLines } from "../src/panel.js";
import { BuildReport, GraphDoc } from "../src/types.js";
import { fixture } from "./recorded.js";

const initial = fixture<GraphDoc>("initial_graph.json");

describe("rotation-respecting layout", () => {
  it("is deterministic", () => {
    const a = computeLayout(initial, 800, 600);
    const b = computeLayout(initial, 800, 600);
    expect(a).toEqual(b);
  });

  it("places every vertex inside the frame", () => {
    const layout = computeLayout(initial, 800, 600);
    for (const pos of Object.values(layout.vertices)) {
      expect(pos.x).toBeGreaterThanOrEqual(30);
      expect(pos.x).toBeLessThanOrEqual(770);
      expect(pos.y).toBeGreaterThanOrEqual(30);
      expect(pos.y).toBeLessThanOrEqual(570);
    }
  });

  it("assigns angular slots in rotation order", () => {
    const layout = computeLayout(initial, 800, 600);
    for (const [vertex, fan] of Object.entries(initial.cyclic_order)) {
      const base = layout.slotAngle[fan[0]];
      fan.forEach((half, k) => {
        const expected = base + (2 * Math.PI * k) / fan.length;
        expect(layout.slotAngle[half]).toBeCloseTo(expected, 10);
      });
      expect(vertex in layout.vertices).toBe(true);
    }
  });

  it("marks labeled edges and loops", () => {
    const doc: GraphDoc = {
      fmt: 1,
      vertices: [{ id: "v", multiplicity: 1 }, { id: "t", multiplicity: 1 }],
      cyclic_order: { v: ["l1", "l2", "p"], t: ["pb"] },
      edges: [["l1", "l2"], ["p", "pb"]],
      labeled: [["p", "pb"]],
    };
    const layout = computeLayout(doc, 400, 400);
    const loop = layout.edges.find((e) => e.name === "l1")!;
    const pendant = layout.edges.find((e) => e.name === "p")!;
    expect(loop.loop).toBe(true);
    expect(pendant.labeled).toBe(true);
    expect(loop.labeled).toBe(false);
  });
});

describe("invariant panel formatting", () => {
  it("renders stacked layer text from the report verbatim", () => {
    const report = {
      dims: { P: { "1": 3 }, total: 3 },
      loewy: { "1": [["1"], ["2", "3"], ["1"]] },
      cartan: { vertices: ["1"], matrix: [[3]], det_abs: 3 },
      classifications: {},
      quiver: null,
      provenance: null,
    } as unknown as BuildReport;
    expect(projectiveLines(report)).toEqual(["P_1 (dim 3): 1 / {2,3} / 1"]);
  });
});
