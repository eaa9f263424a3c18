// Application wiring: toolbar, canvas interactions, the solve loop, and the
// history timeline.  One in-flight solve at a time; new input cancels the
// pending render of a stale response.

import { ApiClient, ApiRequestError } from "./api.js";
import { Board, BoardState } from "./board.js";
import { perturbConfig } from "./perturb.js";
import { Session, SessionBundle } from "./session.js";
import type { ConfigJson, Pair } from "./types.js";

type Mode = "draw" | "drag";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function toast(message: string, isError = true): void {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.className = isError ? "toast error" : "toast info";
  box.style.opacity = "1";
  window.setTimeout(() => (box.style.opacity = "0"), 4000);
}

function main(): void {
  const canvas = el<HTMLCanvasElement>("board");
  const board = new Board(canvas);
  const api = new ApiClient("");
  const session = new Session();

  const state: BoardState = {
    curve: null,
    config: null,
    inscriptions: [],
    freehand: [],
    highlight: null,
    onlyConstants: false,
  };

  let mode: Mode = "drag";
  let dragging = -1;
  let solveToken = 0;
  let perturbSeed = 1;

  const status = el<HTMLSpanElement>("status");
  const historyList = el<HTMLUListElement>("history");

  function refreshHistory(): void {
    historyList.innerHTML = "";
    for (let i = 0; i < session.historyLength; i++) {
      const li = document.createElement("li");
      li.textContent = `#${i}`;
      historyList.appendChild(li);
    }
    const current = session.currentEntry();
    if (current) {
      const diff = session.solutionCountDiff();
      status.textContent =
        `${current.report.inscriptions.length} inscriptions, ` +
        `residuals <= ${Math.max(0, ...current.report.inscriptions.map((i) => i.residual)).toExponential(1)}` +
        (diff === null ? "" : ` (${diff >= 0 ? "+" : ""}${diff} vs previous)`);
    }
  }

  function render(): void {
    state.curve = session.curve;
    state.config = session.config;
    state.inscriptions = session.lastReport?.inscriptions ?? [];
    state.onlyConstants =
      session.lastReport !== null &&
      session.lastReport.inscriptions.length === 0 &&
      session.lastReport.n_constant_discarded > 0;
    board.render(state);
    refreshHistory();
  }

  async function runSolve(label: string): Promise<void> {
    if (!session.curve || !session.config) {
      toast("need both a curve and a point configuration");
      return;
    }
    const token = ++solveToken;
    status.textContent = "solving...";
    try {
      const inputs = session.inputs();
      const report = await api.solve({
        curve: inputs.curve,
        config: inputs.config,
        degree: inputs.degree,
        opts: inputs.opts,
      });
      if (token !== solveToken) return; // a newer solve superseded this one
      session.record(inputs, report, label);
      render();
      void updateReducibilityBadge(inputs.config);
    } catch (err) {
      if (err instanceof ApiRequestError) toast(`${err.code}: ${err.message}`);
      else toast(String(err));
      status.textContent = "error";
    }
  }

  async function updateReducibilityBadge(config: ConfigJson): Promise<void> {
    const badge = el<HTMLSpanElement>("badge");
    if (config.alpha.length + config.beta.length !== 6) {
      badge.textContent = "";
      return;
    }
    try {
      const result = await api.reduction(config);
      badge.textContent = result.reducible ? "cyclically reducible" : "";
    } catch {
      badge.textContent = "";
    }
  }

  async function finishFreehand(): Promise<void> {
    if (state.freehand.length < 8) {
      state.freehand = [];
      render();
      return;
    }
    try {
      const fitted = await api.fitCurve(state.freehand);
      session.curve = fitted.curve;
      state.highlight = null;
      toast(`curve fitted (turning number ${fitted.report.turning_number})`, false);
    } catch (err) {
      if (err instanceof ApiRequestError && err.code === "FitProducesInvalidCurve") {
        const detail = err.detail as { first_self_intersection?: Pair } | undefined;
        state.highlight = detail?.first_self_intersection ?? null;
        toast("that loop crosses itself; the crossing is highlighted");
      } else {
        toast(String(err));
      }
    }
    state.freehand = [];
    render();
  }

  canvas.addEventListener("mousedown", (ev) => {
    if (mode === "draw") {
      state.freehand = [board.planeFromEvent(ev)];
    } else {
      dragging = board.hitTest(state, ev);
    }
  });

  canvas.addEventListener("mousemove", (ev) => {
    if (mode === "draw" && state.freehand.length) {
      state.freehand.push(board.planeFromEvent(ev));
      board.render(state);
    } else if (mode === "drag" && dragging >= 0 && session.config) {
      const p = board.planeFromEvent(ev);
      const onCircle = el<HTMLInputElement>("on-circle").checked;
      const n = session.config.alpha.length;
      const target: Pair = onCircle
        ? (() => {
            const r = Math.hypot(p[0], p[1]) || 1;
            return [p[0] / r, p[1] / r] as Pair;
          })()
        : p;
      const cfg: ConfigJson = {
        alpha: [...session.config.alpha],
        beta: [...session.config.beta],
      };
      if (dragging < n) cfg.alpha[dragging] = target;
      else cfg.beta[dragging - n] = target;
      session.config = cfg;
      render();
    }
  });

  canvas.addEventListener("mouseup", () => {
    if (mode === "draw") void finishFreehand();
    dragging = -1;
  });

  el<HTMLButtonElement>("mode-draw").addEventListener("click", () => {
    mode = "draw";
    toast("draw a closed loop with the mouse", false);
  });
  el<HTMLButtonElement>("mode-drag").addEventListener("click", () => {
    mode = "drag";
  });

  el<HTMLButtonElement>("preset-pinwheel").addEventListener("click", async () => {
    const n = session.degree + 1;
    session.config = await api.pinwheel(n, Math.PI / n);
    render();
  });

  el<HTMLButtonElement>("preset-colinear").addEventListener("click", () => {
    const n = session.degree + 1;
    const xs = Array.from({ length: 2 * n }, (_, i) => i - (2 * n - 1) / 2);
    session.config = {
      alpha: xs.filter((_, i) => i % 2 === 0).map((x) => [x / n, 0] as Pair),
      beta: xs.filter((_, i) => i % 2 === 1).map((x) => [x / n, 0] as Pair),
    };
    render();
  });

  el<HTMLSelectElement>("degree").addEventListener("change", (ev) => {
    session.degree = parseInt((ev.target as HTMLSelectElement).value, 10);
  });

  el<HTMLButtonElement>("solve").addEventListener("click", () => void runSolve("solve"));

  el<HTMLButtonElement>("perturb").addEventListener("click", () => {
    if (!session.config) return;
    session.config = perturbConfig(session.config, {
      magnitude: 0.02,
      seed: perturbSeed++,
    });
    render();
    void runSolve(`perturb ${perturbSeed - 1}`);
  });

  el<HTMLButtonElement>("undo").addEventListener("click", () => {
    session.undo();
    render();
  });
  el<HTMLButtonElement>("redo").addEventListener("click", () => {
    session.redo();
    render();
  });

  el<HTMLButtonElement>("export").addEventListener("click", () => {
    try {
      const bundle = session.exportBundle();
      const blob = new Blob([JSON.stringify(bundle, null, 2)], { type: "application/json" });
      const a = document.createElement("a");
      a.href = URL.createObjectURL(blob);
      a.download = "inscription-session.json";
      a.click();
      URL.revokeObjectURL(a.href);
    } catch (err) {
      toast(String(err));
    }
  });

  el<HTMLInputElement>("import").addEventListener("change", async (ev) => {
    const file = (ev.target as HTMLInputElement).files?.[0];
    if (!file) return;
    try {
      session.importBundle(JSON.parse(await file.text()) as SessionBundle);
      render();
    } catch (err) {
      toast(`bundle import failed: ${String(err)}`);
    }
  });

  void api
    .health()
    .then((h) => toast(`connected to service ${h.version}`, false))
    .catch(() => toast("compute service unreachable; start it with: inscribe serve"));

  render();
}

document.addEventListener("DOMContentLoaded", main);
