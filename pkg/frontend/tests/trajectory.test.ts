import { describe, expect, test } from "vitest";

import { basisState, type StepRequest, type StepResponse } from "../src/api.js";
import {
  Trajectory,
  decodeShare,
  encodeShare,
  replay,
  stepFromResponse,
  type TrajectoryStep,
} from "../src/trajectory.js";

const fakeResponse = (tag: number): StepResponse => ({
  new_state: [[tag, 0], [0, 0]],
  toric_point: { convex: [1, 0], phases: [0, 0], defined: [true, false], pivot: 0 },
  entanglement_report: null,
});

const initial: TrajectoryStep = stepFromResponse("|0>", fakeResponse(0));

const request = (tag: string): StepRequest => ({
  state: basisState(2, 0),
  gate_name: tag,
  notation: "math",
  tol_class: 1e-9,
});

describe("trajectory cursor", () => {
  test("starts at the initial step", () => {
    const t = new Trajectory(initial);
    expect(t.cursor).toBe(0);
    expect(t.current.label).toBe("|0>");
    expect(t.canUndo).toBe(false);
    expect(t.canRedo).toBe(false);
  });

  test("push advances, undo/redo move the cursor within bounds", () => {
    const t = new Trajectory(initial);
    t.push(stepFromResponse("X", fakeResponse(1), request("X")));
    t.push(stepFromResponse("H", fakeResponse(2), request("H")));
    expect(t.cursor).toBe(2);
    expect(t.undo()).toBe(true);
    expect(t.current.label).toBe("X");
    expect(t.undo()).toBe(true);
    expect(t.undo()).toBe(false);
    expect(t.redo()).toBe(true);
    expect(t.redo()).toBe(true);
    expect(t.redo()).toBe(false);
    expect(t.current.label).toBe("H");
  });

  test("push after undo discards the redo tail", () => {
    const t = new Trajectory(initial);
    t.push(stepFromResponse("X", fakeResponse(1), request("X")));
    t.push(stepFromResponse("H", fakeResponse(2), request("H")));
    t.undo();
    t.push(stepFromResponse("Z", fakeResponse(3), request("Z")));
    expect(t.visible.map((s) => s.label)).toEqual(["|0>", "X", "Z"]);
    expect(t.canRedo).toBe(false);
  });

  test("request log covers only visible steps", () => {
    const t = new Trajectory(initial);
    t.push(stepFromResponse("X", fakeResponse(1), request("X")));
    t.push(stepFromResponse("H", fakeResponse(2), request("H")));
    t.undo();
    expect(t.requestLog().map((r) => r.gate_name)).toEqual(["X"]);
  });
});

describe("replay", () => {
  test("replaying the request log reproduces the trajectory byte for byte", async () => {
    const responses: Record<string, StepResponse> = {
      X: fakeResponse(1),
      H: fakeResponse(2),
    };
    const execute = async (r: StepRequest) => responses[r.gate_name ?? ""];
    const original = new Trajectory(initial);
    original.push(stepFromResponse("X", responses.X, request("X")));
    original.push(stepFromResponse("H", responses.H, request("H")));
    const copy = await replay(initial, original.requestLog(), execute);
    expect(JSON.stringify(copy.snapshot())).toBe(JSON.stringify(original.snapshot()));
  });
});

describe("share encoding", () => {
  test("URL-encoded log round-trips", () => {
    const share = {
      radix: 2,
      initial: basisState(2, 0),
      initialLabel: "|0>",
      requests: [request("X"), request("H")],
    };
    const fragment = encodeShare(share);
    expect(fragment).not.toMatch(/[{}" ]/); // URL-safe
    expect(decodeShare(fragment)).toEqual(share);
  });
});
