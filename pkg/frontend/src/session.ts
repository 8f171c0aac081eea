// Session state of one exploration: the current graph, the move history
// with snapshots for undo, and the latest build report.  The session never
// mutates a graph locally; every transition is the service's output, which
// keeps replays bit-for-bit reproducible.

import { BuildReport, GraphDoc, MoveSpec, Service } from "./types.js";

export interface HistoryEntry {
  move: MoveSpec;
  before: GraphDoc;
  after: GraphDoc;
  report: BuildReport;
}

export class SessionState {
  private initial: GraphDoc | null = null;
  private initialReport: BuildReport | null = null;
  private current: GraphDoc | null = null;
  private report: BuildReport | null = null;
  private history: HistoryEntry[] = [];

  constructor(private service: Service) {}

  get graph(): GraphDoc {
    if (!this.current) throw new Error("no graph loaded");
    return this.current;
  }

  get latestReport(): BuildReport | null {
    return this.report;
  }

  get moveCount(): number {
    return this.history.length;
  }

  async load(graph: GraphDoc): Promise<BuildReport> {
    await this.service.validate(graph);
    this.report = await this.service.build(graph);
    this.initialReport = this.report;
    this.initial = graph;
    this.current = graph;
    this.history = [];
    return this.report;
  }

  async applyMove(move: MoveSpec): Promise<BuildReport> {
    const before = this.graph;
    const response = await this.service.apply(before, move);
    this.history.push({ move, before, after: response.graph, report: response.report });
    this.current = response.graph;
    this.report = response.report;
    return response.report;
  }

  undo(): boolean {
    const entry = this.history.pop();
    if (!entry) return false;
    this.current = entry.before;
    const last = this.history[this.history.length - 1];
    this.report = last ? last.report : this.initialReport;
    return true;
  }

  exportScript(): { edge: string | [string, string]; directions: string[] }[] {
    return this.history.map((entry) => ({
      edge: entry.move.edge,
      directions: [...entry.move.directions],
    }));
  }

  // Replaying the exported script from the initial graph must land on the
  // graph currently shown; verified on demand through the service.
  async verifyReplay(): Promise<boolean> {
    if (!this.initial) return false;
    let graph = this.initial;
    for (const entry of this.history) {
      const response = await this.service.apply(graph, entry.move);
      graph = response.graph;
    }
    return deepEqual(graph, this.current);
  }
}

export function deepEqual(a: unknown, b: unknown): boolean {
  if (Object.is(a, b)) return true;
  if (typeof a !== typeof b || a === null || b === null) return false;
  if (Array.isArray(a) !== Array.isArray(b)) return false;
  if (typeof a !== "object") return false;
  const ka = Object.keys(a as object).sort();
  const kb = Object.keys(b as object).sort();
  if (ka.length !== kb.length || ka.some((k, i) => k !== kb[i])) return false;
  return ka.every((k) =>
    deepEqual((a as Record<string, unknown>)[k], (b as Record<string, unknown>)[k]));
}
