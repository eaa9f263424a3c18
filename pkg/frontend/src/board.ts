// Canvas board: renders the curve, the draggable points, and solution
// overlays; converts between screen and plane coordinates.

import type { ConfigJson, CurveJson, InscriptionJson, Pair } from "./types.js";

export interface Viewport {
  cx: number; // plane coordinates of the canvas center
  cy: number;
  scale: number; // pixels per plane unit
}

export function defaultViewport(width: number, height: number): Viewport {
  return { cx: 0, cy: 0, scale: Math.min(width, height) / 4.5 };
}

export function toScreen(v: Viewport, w: number, h: number, p: Pair): Pair {
  return [w / 2 + (p[0] - v.cx) * v.scale, h / 2 - (p[1] - v.cy) * v.scale];
}

export function toPlane(v: Viewport, w: number, h: number, p: Pair): Pair {
  return [(p[0] - w / 2) / v.scale + v.cx, -(p[1] - h / 2) / v.scale + v.cy];
}

/** Sample the Fourier curve for rendering only (display geometry, not results). */
export function curvePolyline(curve: CurveJson, samples = 256): Pair[] {
  const pts: Pair[] = [];
  for (let i = 0; i < samples; i++) {
    const t = (2 * Math.PI * i) / samples;
    let x = 0;
    let y = 0;
    for (const { k, re, im } of curve.coeffs) {
      const c = Math.cos(k * t);
      const s = Math.sin(k * t);
      x += re * c - im * s;
      y += re * s + im * c;
    }
    pts.push([x, y]);
  }
  return pts;
}

export interface BoardState {
  curve: CurveJson | null;
  config: ConfigJson | null;
  inscriptions: InscriptionJson[];
  freehand: Pair[]; // in-progress drawn polyline, plane coordinates
  highlight: Pair | null; // self-intersection marker from a failed fit
  onlyConstants: boolean;
}

export class Board {
  viewport: Viewport;
  private ctx: CanvasRenderingContext2D;

  constructor(private canvas: HTMLCanvasElement) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
    this.viewport = defaultViewport(canvas.width, canvas.height);
  }

  planeFromEvent(ev: MouseEvent): Pair {
    const rect = this.canvas.getBoundingClientRect();
    return toPlane(this.viewport, this.canvas.width, this.canvas.height, [
      ev.clientX - rect.left,
      ev.clientY - rect.top,
    ]);
  }

  /** Index of the config point within grab range of the event, or -1. */
  hitTest(state: BoardState, ev: MouseEvent, radiusPx = 10): number {
    if (!state.config) return -1;
    const rect = this.canvas.getBoundingClientRect();
    const mx = ev.clientX - rect.left;
    const my = ev.clientY - rect.top;
    const pts = [...state.config.alpha, ...state.config.beta];
    for (let i = 0; i < pts.length; i++) {
      const [sx, sy] = toScreen(this.viewport, this.canvas.width, this.canvas.height, pts[i]);
      if (Math.hypot(sx - mx, sy - my) <= radiusPx) return i;
    }
    return -1;
  }

  private poly(points: Pair[], stroke: string, width: number, close: boolean): void {
    if (points.length < 2) return;
    const { ctx } = this;
    ctx.strokeStyle = stroke;
    ctx.lineWidth = width;
    ctx.beginPath();
    const w = this.canvas.width;
    const h = this.canvas.height;
    const [x0, y0] = toScreen(this.viewport, w, h, points[0]);
    ctx.moveTo(x0, y0);
    for (const p of points.slice(1)) {
      const [x, y] = toScreen(this.viewport, w, h, p);
      ctx.lineTo(x, y);
    }
    if (close) ctx.closePath();
    ctx.stroke();
  }

  private dot(p: Pair, fill: string, r = 5): void {
    const [x, y] = toScreen(this.viewport, this.canvas.width, this.canvas.height, p);
    this.ctx.fillStyle = fill;
    this.ctx.beginPath();
    this.ctx.arc(x, y, r, 0, 2 * Math.PI);
    this.ctx.fill();
  }

  render(state: BoardState): void {
    const { ctx, canvas } = this;
    ctx.clearRect(0, 0, canvas.width, canvas.height);

    if (state.curve) this.poly(curvePolyline(state.curve), "#1f4e79", 2, true);
    if (state.freehand.length > 1) this.poly(state.freehand, "#999", 1, false);

    for (const ins of state.inscriptions) {
      this.poly(ins.circle_image, "#d5b8e8", 1, true);
    }
    for (const ins of state.inscriptions) {
      for (const w of ins.image_points) this.dot(w, "#8e44ad", 3);
    }

    if (state.config) {
      for (const p of state.config.alpha) this.dot(p, "#c0392b");
      for (const p of state.config.beta) this.dot(p, "#27ae60");
    }

    if (state.highlight) {
      const [x, y] = toScreen(this.viewport, canvas.width, canvas.height, state.highlight);
      ctx.strokeStyle = "#e67e22";
      ctx.lineWidth = 2;
      ctx.beginPath();
      ctx.arc(x, y, 12, 0, 2 * Math.PI);
      ctx.stroke();
    }

    if (state.onlyConstants) {
      ctx.fillStyle = "#555";
      ctx.font = "13px sans-serif";
      ctx.fillText("only the constant family solves here", 12, canvas.height - 12);
    }
  }
}
