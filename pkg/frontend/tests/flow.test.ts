// Scripted explorer flows against the recorded service exchanges.
//
// The first block is the acceptance flow: radix 4, |00>, apply the
// entangling composite, watch the badge flip to "maximal" with the
// fiber sitting over the (1/2, 0, 0, 1/2) segment endpoint, then undo
// back to "separable".

import { beforeEach, describe, expect, test } from "vitest";

import { AtlasClient } from "../src/api.js";
import { ExplorerSession } from "../src/session.js";
import { makeTransport, type RecordingTransport } from "./mock_transport.js";

let transport: RecordingTransport;
let session: ExplorerSession;

beforeEach(() => {
  transport = makeTransport();
  session = new ExplorerSession(new AtlasClient("http://service", transport.fetch));
});

describe("acceptance flow: |00> through the entangling composite", () => {
  test("badge flips separable -> maximal -> separable across apply/undo", async () => {
    await session.init(4, 0);
    let vm = session.viewModel();
    expect(vm.badge.text).toBe("separable");

    const applied = await session.applyGate("EPR_math");
    expect(applied).toBe(true);
    vm = session.viewModel();
    expect(vm.badge.text).toBe("maximal");
    expect(vm.badge.detail).toContain("distance to separable 0.785398");
    expect(vm.stepLabels).toEqual(["|0>", "EPR_math"]);

    // the fiber base is the (1/2, 0, 0, 1/2) endpoint of the
    // maximally-entangled segment
    expect(vm.fiberSvg).toContain("fiber over (0.500, 0.000, 0.000, 0.500)");

    expect(session.undo()).toBe(true);
    vm = session.viewModel();
    expect(vm.badge.text).toBe("separable");
    expect(vm.cursor).toBe(0);

    expect(session.redo()).toBe(true);
    expect(session.viewModel().badge.text).toBe("maximal");
  });

  test("every displayed quantity originates from a service response", async () => {
    await session.init(4, 0);
    await session.applyGate("EPR_math");
    const stepExchange = transport.requests.filter((r) => r.path === "/api/state/step");
    // one identity step for init, one for the applied gate; nothing else
    expect(stepExchange.length).toBe(2);
    const vm = session.viewModel();
    // the badge numbers are the response fields verbatim
    expect(vm.badge.detail).toContain("concurrence 1.000000");
  });
});

describe("error handling", () => {
  test("a rejected custom gate surfaces as a banner and leaves the trajectory alone", async () => {
    await session.init(4, 0);
    const ones = Array.from({ length: 4 }, () =>
      Array.from({ length: 4 }, () => [1, 0] as [number, number]),
    );
    const before = JSON.stringify(session.snapshot());
    const applied = await session.applyCustomGate(ones);
    expect(applied).toBe(false);
    const vm = session.viewModel();
    expect(vm.banner).toContain("not unitary");
    expect(JSON.stringify(session.snapshot())).toBe(before);
    session.dismissBanner();
    expect(session.viewModel().banner).toBeNull();
  });
});

describe("uniformizer comparison overlay", () => {
  test("the Fourier family overlays nine phase marks over the barycenter", async () => {
    await session.init(3, 0);
    expect(session.canCompare("QFT3")).toBe(true);
    expect(session.canCompare("I")).toBe(false);
    await session.compareUniformizers(["QFT3", "QFT3_012", "QFT3_021"]);
    const vm = session.viewModel();
    expect(vm.banner).toBeNull();
    // the nine family marks in the barycenter fiber
    expect((vm.fiberSvg.match(/<circle/g) ?? []).length).toBe(9);
    expect(vm.fiberSvg).toContain("fiber over (0.333, 0.333, 0.333)");
    expect(vm.fiberSvg).toContain("QFT3|0&gt;");
  });

  test("a non-uniformizer is refused", async () => {
    await session.init(3, 0);
    await session.compareUniformizers(["I", "SHIFT+1", "SHIFT+2"]);
    expect(session.viewModel().banner).toContain("not a radix-3 uniformizer");
  });
});

describe("share fragment", () => {
  test("restoring a shared log reproduces the trajectory byte for byte", async () => {
    await session.init(4, 0);
    await session.applyGate("EPR_math");
    const fragment = session.viewModel().shareFragment;

    const twin = new ExplorerSession(new AtlasClient("http://service", makeTransport().fetch));
    await twin.restore(fragment);
    expect(JSON.stringify(twin.snapshot())).toBe(JSON.stringify(session.snapshot()));
    expect(twin.viewModel().badge.text).toBe("maximal");
  });
});
