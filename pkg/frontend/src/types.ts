// Wire formats of the workbench service; field names mirror the canonical
// JSON schema (fmt 1) exactly.

export interface GraphDoc {
  fmt: number;
  vertices: { id: string; multiplicity: number }[];
  cyclic_order: Record<string, string[]>;
  edges: [string, string][];
  labeled: [string, string][];
}

export interface CartanDoc {
  vertices: string[];
  matrix: number[][];
  det_abs: number;
}

export interface BuildReport {
  dims: { P: Record<string, number>; total: number };
  loewy: Record<string, string[][]>;
  cartan: CartanDoc;
  classifications: Record<string, unknown>;
  quiver: unknown;
  provenance: unknown;
}

export type Direction = "pred" | "succ";

export interface MoveSpec {
  edge: string | [string, string];
  directions: [Direction, Direction];
}

export interface MoveDoc {
  edge: [string, string];
  directions: [Direction, Direction];
}

export interface ApplyResponse {
  graph: GraphDoc;
  report: BuildReport;
}

export interface CompareResponse {
  left: { dimension: number; simples: number; cartan_det_abs: number };
  right: { dimension: number; simples: number; cartan_det_abs: number };
  equal: boolean;
}

export interface ErrorDoc {
  error: string;
  message: string;
  details?: unknown;
}

// The explorer talks to the workbench exclusively through this surface;
// tests substitute a recorded double.
export interface Service {
  validate(graph: GraphDoc): Promise<unknown>;
  build(graph: GraphDoc): Promise<BuildReport>;
  admissible(graph: GraphDoc, edge: string): Promise<{ moves: MoveDoc[] }>;
  apply(graph: GraphDoc, move: MoveSpec): Promise<ApplyResponse>;
  compare(left: GraphDoc, right: GraphDoc): Promise<CompareResponse>;
}

export function edgeName(edge: [string, string]): string {
  return edge[0] < edge[1] ? edge[0] : edge[1];
}
