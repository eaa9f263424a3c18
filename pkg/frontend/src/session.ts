// Session state for the steering loop: current curve, current points,
// degree, last report, and a history of (input, report) pairs with full
// reproduction payloads.  Undo and redo restore entries exactly.

import type { ConfigJson, CurveJson, SolveOptionsJson, SolveReportJson } from "./types.js";

export interface SessionInputs {
  curve: CurveJson;
  config: ConfigJson;
  degree: number;
  opts: SolveOptionsJson;
}

export interface HistoryEntry {
  inputs: SessionInputs;
  report: SolveReportJson;
  label: string;
}

export interface SessionBundle {
  version: 1;
  inputs: SessionInputs;
  report: SolveReportJson;
}

const clone = <T>(value: T): T => JSON.parse(JSON.stringify(value)) as T;

export class Session {
  curve: CurveJson | null = null;
  config: ConfigJson | null = null;
  degree = 2;
  opts: SolveOptionsJson = { n_starts: 2000, seed: 0 };
  lastReport: SolveReportJson | null = null;

  private history: HistoryEntry[] = [];
  private cursor = -1; // index of the current entry

  get historyLength(): number {
    return this.history.length;
  }

  get canUndo(): boolean {
    return this.cursor > 0;
  }

  get canRedo(): boolean {
    return this.cursor >= 0 && this.cursor < this.history.length - 1;
  }

  currentEntry(): HistoryEntry | null {
    return this.cursor >= 0 ? this.history[this.cursor] : null;
  }

  /** Snapshot the current inputs for a solve request. */
  inputs(): SessionInputs {
    if (!this.curve || !this.config) {
      throw new Error("session needs both a curve and a configuration");
    }
    return clone({
      curve: this.curve,
      config: this.config,
      degree: this.degree,
      opts: this.opts,
    });
  }

  /** Record a solve outcome; truncates any redo tail. */
  record(inputs: SessionInputs, report: SolveReportJson, label: string): void {
    this.history = this.history.slice(0, this.cursor + 1);
    this.history.push({ inputs: clone(inputs), report: clone(report), label });
    this.cursor = this.history.length - 1;
    this.lastReport = clone(report);
  }

  private restore(entry: HistoryEntry): void {
    this.curve = clone(entry.inputs.curve);
    this.config = clone(entry.inputs.config);
    this.degree = entry.inputs.degree;
    this.opts = clone(entry.inputs.opts);
    this.lastReport = clone(entry.report);
  }

  undo(): HistoryEntry | null {
    if (!this.canUndo) return null;
    this.cursor -= 1;
    const entry = this.history[this.cursor];
    this.restore(entry);
    return entry;
  }

  redo(): HistoryEntry | null {
    if (!this.canRedo) return null;
    this.cursor += 1;
    const entry = this.history[this.cursor];
    this.restore(entry);
    return entry;
  }

  /** Difference in solution count against the previous history entry. */
  solutionCountDiff(): number | null {
    if (this.cursor < 1) return null;
    const prev = this.history[this.cursor - 1].report.inscriptions.length;
    const cur = this.history[this.cursor].report.inscriptions.length;
    return cur - prev;
  }

  /** Export the current state as a reproducible bundle. */
  exportBundle(): SessionBundle {
    if (!this.lastReport) {
      throw new Error("nothing to export: no solve has completed");
    }
    return clone({ version: 1 as const, inputs: this.inputs(), report: this.lastReport });
  }

  importBundle(bundle: SessionBundle): void {
    if (bundle.version !== 1) {
      throw new Error(`unsupported bundle version ${String(bundle.version)}`);
    }
    this.curve = clone(bundle.inputs.curve);
    this.config = clone(bundle.inputs.config);
    this.degree = bundle.inputs.degree;
    this.opts = clone(bundle.inputs.opts);
    this.record(bundle.inputs, bundle.report, "imported");
  }
}
