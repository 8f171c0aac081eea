import { describe, expect, it } from "vitest";

import { reportRows } from "../src/panel.js";
import { SessionState, deepEqual } from "../src/session.js";
import { CompareResponse, GraphDoc, MoveSpec } from "../src/types.js";
import { RecordedService, fixture } from "./recorded.js";

const initial = fixture<GraphDoc>("initial_graph.json");
const script = fixture<MoveSpec[]>("script.json");
const sessionFinal = fixture<GraphDoc>("session_final_graph.json");
const cliFinal = fixture<GraphDoc>("cli_final_graph.json");
const cliCompare = fixture<CompareResponse>("cli_compare.json");

async function loadedSession() {
  const service = new RecordedService();
  const session = new SessionState(service);
  await session.load(initial);
  return { service, session };
}

describe("session state over the recorded service", () => {
  it("loads a graph and keeps the build report verbatim", async () => {
    const { session } = await loadedSession();
    expect(session.graph).toEqual(initial);
    expect(session.latestReport?.dims.total).toBe(32);
  });

  it("applies the three-move script and tracks history", async () => {
    const { session } = await loadedSession();
    for (const move of script) {
      await session.applyMove(move);
    }
    expect(session.moveCount).toBe(3);
    expect(session.graph).toEqual(sessionFinal);
  });

  it("exports exactly the script it applied", async () => {
    const { session } = await loadedSession();
    for (const move of script) {
      await session.applyMove(move);
    }
    expect(session.exportScript()).toEqual(script);
  });

  it("replaying the exported script through the CLI lands on the shown graph", async () => {
    const { session } = await loadedSession();
    for (const move of script) {
      await session.applyMove(move);
    }
    // cli_final_graph.json is the CLI's `kauer --script` output on the same
    // exported script; identical JSON, hence isomorphic graphs
    expect(session.graph).toEqual(cliFinal);
  });

  it("shows invariant panel values byte-identical to the CLI compare output", async () => {
    const { session } = await loadedSession();
    for (const move of script) {
      await session.applyMove(move);
    }
    const rows = Object.fromEntries(
      reportRows(session.latestReport!).map((r) => [r.label, r.value]));
    expect(rows["dimension"]).toBe(String(cliCompare.left.dimension));
    expect(rows["simples"]).toBe(String(cliCompare.left.simples));
    expect(rows["|det Cartan|"]).toBe(String(cliCompare.left.cartan_det_abs));
  });

  it("undo pops one snapshot at a time back to the initial graph", async () => {
    const { session } = await loadedSession();
    const snapshots: GraphDoc[] = [session.graph];
    for (const move of script) {
      await session.applyMove(move);
      snapshots.push(session.graph);
    }
    for (let k = snapshots.length - 2; k >= 0; k--) {
      expect(session.undo()).toBe(true);
      expect(session.graph).toEqual(snapshots[k]);
    }
    expect(session.undo()).toBe(false);
    expect(session.latestReport?.dims.total).toBe(32);
  });

  it("verifies replay determinism on demand", async () => {
    const { session } = await loadedSession();
    for (const move of script) {
      await session.applyMove(move);
    }
    expect(await session.verifyReplay()).toBe(true);
  });

  it("never mutates graphs locally: all transitions come from the service", async () => {
    const { service, session } = await loadedSession();
    for (const move of script) {
      await session.applyMove(move);
    }
    const applies = service.calls.filter((p) => p === "/kauer/apply").length;
    expect(applies).toBe(3);
  });

  it("rejects unrecorded (malformed) requests, guarding the wire contract", async () => {
    const { session } = await loadedSession();
    await expect(session.applyMove({ edge: "9", directions: ["succ", "succ"] }))
      .rejects.toThrow("unrecorded");
    expect(session.moveCount).toBe(0);
  });
});

describe("deep equality helper", () => {
  it("ignores key order but not values", () => {
    expect(deepEqual({ a: 1, b: [1, 2] }, { b: [1, 2], a: 1 })).toBe(true);
    expect(deepEqual({ a: 1 }, { a: 2 })).toBe(false);
    expect(deepEqual([1, 2], [2, 1])).toBe(false);
  });
});
