import { describe, expect, it } from "vitest";

import { Session, SessionBundle } from "../src/session.js";
import type { SolveReportJson } from "../src/types.js";

const circle = { K: 1, coeffs: [{ k: 1, re: 1, im: 0 }] };
const square = {
  alpha: [
    [-1, 0],
    [1, 0],
  ] as [number, number][],
  beta: [
    [0, -1],
    [0, 1],
  ] as [number, number][],
};

function fakeReport(count: number): SolveReportJson {
  return {
    inscriptions: Array.from({ length: count }, (_, i) => ({
      coeffs: [
        [0, 0],
        [1, i],
      ] as [number, number][],
      t_params: [0, 1],
      s_params: [2, 3],
      residual: 1e-12,
      constant: false,
      degenerate: false,
      image_points: [],
      circle_image: [],
    })),
    n_starts: 100,
    n_converged: count,
    n_constant_discarded: 0,
    truncated: false,
  };
}

function freshSession(): Session {
  const s = new Session();
  s.curve = structuredClone(circle);
  s.config = structuredClone(square);
  s.degree = 1;
  s.opts = { n_starts: 500, seed: 7 };
  return s;
}

describe("session history", () => {
  it("records solves and reports diffs", () => {
    const s = freshSession();
    s.record(s.inputs(), fakeReport(3), "first");
    expect(s.solutionCountDiff()).toBeNull();
    s.record(s.inputs(), fakeReport(5), "second");
    expect(s.solutionCountDiff()).toBe(2);
    expect(s.historyLength).toBe(2);
  });

  it("undo and redo restore entries exactly", () => {
    const s = freshSession();
    s.record(s.inputs(), fakeReport(1), "a");
    s.config = { ...square, alpha: [[-2, 0], [2, 0]] };
    s.record(s.inputs(), fakeReport(4), "b");

    const before = JSON.stringify([s.curve, s.config, s.lastReport]);
    expect(s.canUndo).toBe(true);
    s.undo();
    expect(s.lastReport?.inscriptions.length).toBe(1);
    expect(s.config?.alpha[0][0]).toBe(-1);

    expect(s.canRedo).toBe(true);
    s.redo();
    expect(JSON.stringify([s.curve, s.config, s.lastReport])).toBe(before);
  });

  it("recording after undo truncates the redo tail", () => {
    const s = freshSession();
    s.record(s.inputs(), fakeReport(1), "a");
    s.record(s.inputs(), fakeReport(2), "b");
    s.undo();
    s.record(s.inputs(), fakeReport(9), "c");
    expect(s.canRedo).toBe(false);
    expect(s.historyLength).toBe(2);
    expect(s.lastReport?.inscriptions.length).toBe(9);
  });

  it("history entries are snapshots, not references", () => {
    const s = freshSession();
    const inputs = s.inputs();
    s.record(inputs, fakeReport(1), "a");
    inputs.config.alpha[0][0] = 999;
    expect(s.currentEntry()?.inputs.config.alpha[0][0]).toBe(-1);
  });
});

describe("session bundles", () => {
  it("export round-trips through import", () => {
    const s = freshSession();
    s.record(s.inputs(), fakeReport(2), "a");
    const bundle = s.exportBundle();

    const t = new Session();
    t.importBundle(structuredClone(bundle) as SessionBundle);
    expect(t.curve).toEqual(s.curve);
    expect(t.config).toEqual(s.config);
    expect(t.opts).toEqual(s.opts);
    expect(t.lastReport).toEqual(s.lastReport);
  });

  it("export requires a completed solve", () => {
    const s = freshSession();
    expect(() => s.exportBundle()).toThrow();
  });

  it("bundles carry full reproduction options", () => {
    const s = freshSession();
    s.record(s.inputs(), fakeReport(2), "a");
    const bundle = s.exportBundle();
    expect(bundle.inputs.opts.seed).toBe(7);
    expect(bundle.inputs.opts.n_starts).toBe(500);
    expect(bundle.inputs.degree).toBe(1);
  });
});
