import type { ConsistencyPayload, GetProjectResponse, ProjectDoc } from "./types";
import { ApiError } from "./api";

export type View =
  | { kind: "requirements" }
  | { kind: "gap" }
  | { kind: "judgments"; matrixId: string }
  | { kind: "weights" }
  | { kind: "ranking" };

/**
 * Client-side session state. The server owns every derived number; this
 * object only tracks what is on screen and which version the server last
 * accepted, so stale writes can be turned into reload prompts.
 */
export class ViewState {
  projectId: string | null = null;
  version = 0;
  doc: ProjectDoc | null = null;
  view: View = { kind: "requirements" };
  pendingPair: [string, string] | null = null;
  lastReport: ConsistencyPayload | null = null;
  whatIfBudget: number | null = null;
  conflictPrompt = false;

  loadProject(response: GetProjectResponse): void {
    this.projectId = response.id;
    this.version = response.version;
    this.doc = response.project;
    this.conflictPrompt = false;
  }

  /** Record a server-accepted mutation; the shown version must follow. */
  accept(version: number, doc?: ProjectDoc): void {
    this.version = version;
    if (doc) this.doc = doc;
  }

  /**
   * Route an API failure: version conflicts flip the reload prompt on and
   * report true; anything else is the caller's problem.
   */
  absorbConflict(error: unknown): boolean {
    if (error instanceof ApiError && error.code === "version-conflict") {
      this.conflictPrompt = true;
      return true;
    }
    return false;
  }
}
