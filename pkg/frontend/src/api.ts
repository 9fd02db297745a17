import type {
  CreateProjectResponse,
  ErrorBody,
  GetProjectResponse,
  JudgmentRow,
  OptimizeResponse,
  ProjectDoc,
  PutJudgmentsResponse,
  RankingResponse,
  ReplaceProjectResponse,
} from "./types";

export class ApiError extends Error {
  code: string;
  status: number;
  path: string | null;
  violations: ErrorBody["violations"];

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.name = "ApiError";
    this.status = status;
    this.code = body.code;
    this.path = body.path;
    this.violations = body.violations;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin typed client over the HTTP API. Every displayed number comes out of
 * these responses; the client itself never derives scores or scales.
 */
export class ApiClient {
  constructor(
    private base: string = "",
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchImpl(this.base + path, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ErrorBody);
    }
    return payload as T;
  }

  createProject(id?: string, project?: ProjectDoc): Promise<CreateProjectResponse> {
    const body: Record<string, unknown> = {};
    if (id !== undefined) body.id = id;
    if (project !== undefined) body.project = project;
    return this.request("POST", "/projects", body);
  }

  getProject(id: string): Promise<GetProjectResponse> {
    return this.request("GET", `/projects/${id}`);
  }

  replaceProject(id: string, version: number, project: ProjectDoc): Promise<ReplaceProjectResponse> {
    return this.request("PUT", `/projects/${id}`, { version, project });
  }

  putJudgments(
    id: string,
    matrixId: string,
    version: number,
    judgments: JudgmentRow[],
  ): Promise<PutJudgmentsResponse> {
    return this.request("PUT", `/projects/${id}/matrices/${matrixId}/judgments`, {
      version,
      judgments,
    });
  }

  optimize(id: string, candidateId: string, budget?: number): Promise<OptimizeResponse> {
    const body = budget === undefined ? {} : { budget };
    return this.request("POST", `/projects/${id}/candidates/${candidateId}/optimize`, body);
  }

  ranking(id: string, budget?: number): Promise<RankingResponse> {
    const query = budget === undefined ? "" : `?budget=${encodeURIComponent(budget)}`;
    return this.request("GET", `/projects/${id}/ranking${query}`);
  }
}
