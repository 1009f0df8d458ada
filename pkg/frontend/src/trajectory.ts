// Gate-sequence history with undo/redo and a replayable request log.
//
// Step 0 is the chosen initial state (decorated with service data by an
// identity step at session start); every later step records both the
// service response and the request that produced it, so the whole
// trajectory can be reproduced by replaying the log.

import type {
  ComplexPair,
  EntanglementReportJson,
  StepRequest,
  StepResponse,
  ToricPointJson,
} from "./api.js";

export interface TrajectoryStep {
  label: string;
  state: ComplexPair[];
  toricPoint: ToricPointJson;
  report: EntanglementReportJson | null;
  minDistance?: number;
  request?: StepRequest;
}

export const stepFromResponse = (
  label: string,
  response: StepResponse,
  request?: StepRequest,
): TrajectoryStep => ({
  label,
  state: response.new_state,
  toricPoint: response.toric_point,
  report: response.entanglement_report,
  minDistance: response.min_distance_to_separable,
  request,
});

export class Trajectory {
  private steps: TrajectoryStep[];
  private cursorIndex = 0;

  constructor(initial: TrajectoryStep) {
    this.steps = [initial];
  }

  get cursor(): number {
    return this.cursorIndex;
  }

  get length(): number {
    return this.steps.length;
  }

  get current(): TrajectoryStep {
    return this.steps[this.cursorIndex];
  }

  /** Steps up to and including the cursor (what the views show). */
  get visible(): TrajectoryStep[] {
    return this.steps.slice(0, this.cursorIndex + 1);
  }

  get canUndo(): boolean {
    return this.cursorIndex > 0;
  }

  get canRedo(): boolean {
    return this.cursorIndex < this.steps.length - 1;
  }

  /** Append after the cursor, discarding any redo tail. */
  push(step: TrajectoryStep): void {
    this.steps = this.steps.slice(0, this.cursorIndex + 1);
    this.steps.push(step);
    this.cursorIndex = this.steps.length - 1;
  }

  undo(): boolean {
    if (!this.canUndo) return false;
    this.cursorIndex -= 1;
    return true;
  }

  redo(): boolean {
    if (!this.canRedo) return false;
    this.cursorIndex += 1;
    return true;
  }

  /** Requests of the visible steps, in application order. */
  requestLog(): StepRequest[] {
    return this.visible
      .slice(1)
      .map((s) => s.request)
      .filter((r): r is StepRequest => r !== undefined);
  }

  snapshot(): unknown {
    return { cursor: this.cursorIndex, steps: this.steps };
  }
}

export interface ShareState {
  radix: number;
  initial: ComplexPair[];
  initialLabel: string;
  requests: StepRequest[];
}

/** URL-fragment encoding of the request log (plain URL-encoded JSON). */
export const encodeShare = (share: ShareState): string =>
  encodeURIComponent(JSON.stringify(share));

export const decodeShare = (fragment: string): ShareState =>
  JSON.parse(decodeURIComponent(fragment)) as ShareState;

/**
 * Rebuild a trajectory by replaying a request log through an executor
 * (normally AtlasClient.step).  Replaying the log of an existing
 * trajectory reproduces it byte for byte.
 */
export const replay = async (
  initial: TrajectoryStep,
  requests: StepRequest[],
  execute: (request: StepRequest) => Promise<StepResponse>,
): Promise<Trajectory> => {
  const trajectory = new Trajectory(initial);
  for (const request of requests) {
    const response = await execute(request);
    const label = request.gate_name ?? "custom";
    trajectory.push(stepFromResponse(label, response, request));
  }
  return trajectory;
};
