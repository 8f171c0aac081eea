import {
  ApplyResponse,
  BuildReport,
  CompareResponse,
  GraphDoc,
  MoveDoc,
  MoveSpec,
  Service,
} from "./types.js";

export class ServiceError extends Error {
  constructor(public status: number, public body: { error: string; message: string }) {
    super(`${body.error}: ${body.message}`);
  }
}

export class HttpService implements Service {
  constructor(private baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const doc = await response.json();
    if (!response.ok) {
      throw new ServiceError(response.status, doc);
    }
    return doc as T;
  }

  validate(graph: GraphDoc): Promise<unknown> {
    return this.post("/graph/validate", graph);
  }

  build(graph: GraphDoc): Promise<BuildReport> {
    return this.post("/algebra/build", graph);
  }

  admissible(graph: GraphDoc, edge: string): Promise<{ moves: MoveDoc[] }> {
    return this.post("/kauer/admissible", { graph, edge });
  }

  apply(graph: GraphDoc, move: MoveSpec): Promise<ApplyResponse> {
    return this.post("/kauer/apply", { graph, move });
  }

  compare(left: GraphDoc, right: GraphDoc): Promise<CompareResponse> {
    return this.post("/compare", { left, right });
  }
}
