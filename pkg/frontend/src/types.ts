// Payload shapes mirroring the server's JSON. The document itself is kept
// loosely typed: the client renders it but never computes with it.

export interface ProjectDoc {
  schema_version: number;
  stage: string;
  requirements: Array<{ id: string; label?: string; weight: number }>;
  candidates: Array<{ id: string; name?: string; tco_estimate?: number }>;
  satisfaction: Record<string, Record<string, number>>;
  thresholds: Record<string, { target_level: number; worst_acceptable: number }>;
  adaptation: {
    budgets: Record<string, number>;
    strategies: Record<string, Record<string, unknown[]>>;
  };
  matrices: Record<string, MatrixDoc>;
  cache: Record<string, unknown>;
  [key: string]: unknown;
}

export interface MatrixDoc {
  context: string;
  elements: string[];
  judgments: JudgmentRow[];
  good?: string | null;
  bad?: string | null;
}

export interface JudgmentRow {
  better: string;
  worse: string;
  lo: number;
  hi: number;
}

export interface ConsistencyPayload {
  consistent: boolean;
  conflicts: Array<[string, string]>;
}

export interface ScalePayload {
  context: string;
  value: Record<string, number>;
  raw: Record<string, number>;
}

export interface CreateProjectResponse {
  id: string;
  version: number;
  stage: string;
  project: ProjectDoc;
}

export type CacheState = "fresh" | "stale" | "absent";

export interface GetProjectResponse {
  id: string;
  version: number;
  stage: string;
  project: ProjectDoc;
  cache_status: {
    plans: Record<string, CacheState>;
    scales: Record<string, CacheState>;
    weights: CacheState;
    ranking: CacheState;
  };
}

export interface ReplaceProjectResponse {
  id: string;
  version: number;
  stage: string;
}

export interface PutJudgmentsResponse {
  id: string;
  version: number;
  consistency: ConsistencyPayload;
  scale: ScalePayload | null;
}

export interface OptimizeResponse {
  id: string;
  version: number;
  plan: {
    candidate_id: string;
    chosen: Record<string, string | null>;
    objective: number;
    total_cost: number;
  };
  performance: {
    functional_coverage: number;
    adaptation_risk: number;
    adaptation_cost: number;
    adaptation_degree: number;
  };
  persisted: boolean;
}

export interface RankingEntry {
  candidate_id: string;
  overall: number;
  values: Record<string, number>;
  provenance: Record<string, string>;
}

export interface RankingResponse {
  id: string;
  version: number;
  budget_override: number | null;
  ranking: {
    weights: Record<string, number>;
    entries: RankingEntry[];
  };
}

export interface ErrorBody {
  code: string;
  message: string;
  path: string | null;
  violations?: Array<{ code: string; path: string; message: string }>;
}
