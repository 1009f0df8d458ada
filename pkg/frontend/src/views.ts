// Client-side SVG rendering of the simplex and fiber panels.
//
// Pure string builders over service JSON: geometry constants mirror the
// server renderer (same triangle, tetrahedron and axonometric
// projection), so the client view lines up with server-side exports.
// No quantum quantities are computed here; only display coordinates.

import type { EntanglementReportJson, ToricPointJson } from "./api.js";

const TWO_PI = 2 * Math.PI;
const AXO_X = -0.18;
const AXO_Y = 0.32;
const TOL_ZERO = 1e-9;

type Vec2 = [number, number];

const TRI: Vec2[] = [
  [0, 0],
  [1, 0],
  [0.5, Math.sqrt(3) / 2],
];
const TETRA: [number, number, number][] = [
  [0, 0, 0],
  [1, 0, 0],
  [0.5, Math.sqrt(3) / 2, 0],
  [0.5, Math.sqrt(3) / 6, Math.sqrt(6) / 3],
];

const KET_LABELS: Record<number, string[]> = {
  2: ["|0>", "|1>"],
  3: ["|0>", "|1>", "|2>"],
  4: ["|00>", "|01>", "|10>", "|11>"],
};

const axo = (p: [number, number, number]): Vec2 => [p[0] + AXO_X * p[2], p[1] + AXO_Y * p[2]];

export const simplexVertices = (radix: number): Vec2[] => {
  if (radix === 2) return [[0, 0], [1, 0]];
  if (radix === 3) return TRI;
  return TETRA.map(axo);
};

export const embedSimplex = (radix: number, coords: number[]): Vec2 => {
  const verts = simplexVertices(radix);
  let x = 0;
  let y = 0;
  for (let i = 0; i < radix; i++) {
    x += coords[i] * verts[i][0];
    y += coords[i] * verts[i][1];
  }
  return [x, y];
};

/** Non-pivot phase axes of the fiber over a convex base point. */
export const fiberFreeAxes = (convex: number[]): number[] => {
  const defined = convex
    .map((p, i) => (p > TOL_ZERO ? i : -1))
    .filter((i) => i >= 0);
  return defined.slice(1);
};

const fmt = (x: number): string => (Object.is(x, -0) ? "0.000" : x.toFixed(3));

interface Canvas {
  w: number;
  h: number;
  lo: Vec2;
  scale: number;
  off: Vec2;
}

const canvasFor = (points: Vec2[], w: number, h: number, margin = 36): Canvas => {
  let loX = Infinity;
  let loY = Infinity;
  let hiX = -Infinity;
  let hiY = -Infinity;
  for (const [x, y] of points) {
    loX = Math.min(loX, x);
    loY = Math.min(loY, y);
    hiX = Math.max(hiX, x);
    hiY = Math.max(hiY, y);
  }
  const spanX = Math.max(hiX - loX, 1e-9);
  const spanY = Math.max(hiY - loY, 1e-9);
  const scale = Math.min((w - 2 * margin) / spanX, (h - 2 * margin) / spanY);
  return {
    w,
    h,
    lo: [loX, loY],
    scale,
    off: [(w - scale * spanX) / 2, (h - scale * spanY) / 2],
  };
};

const px = (c: Canvas, p: Vec2): Vec2 => [
  (p[0] - c.lo[0]) * c.scale + c.off[0],
  c.h - ((p[1] - c.lo[1]) * c.scale + c.off[1]),
];

const line = (c: Canvas, a: Vec2, b: Vec2, stroke = "#404040", width = 1.2, dash = ""): string => {
  const [x1, y1] = px(c, a);
  const [x2, y2] = px(c, b);
  const extra = dash ? ` stroke-dasharray="${dash}"` : "";
  return `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" stroke-width="${width}"${extra} />`;
};

const circle = (c: Canvas, p: Vec2, r: number, fill: string): string => {
  const [cx, cy] = px(c, p);
  return `<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="${r}" fill="${fill}" stroke="#1a1a1a" stroke-width="1" />`;
};

const text = (c: Canvas, p: Vec2, content: string, dx = 0, dy = 0): string => {
  const [x, y] = px(c, p);
  const safe = content.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
  return `<text x="${fmt(x + dx)}" y="${fmt(y + dy)}" font-family="Helvetica, Arial, sans-serif" font-size="12" fill="#1a1a1a">${safe}</text>`;
};

const svgDoc = (w: number, h: number, body: string[]): string =>
  [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${w}" height="${h}" viewBox="0 0 ${w} ${h}">`,
    `<rect x="0" y="0" width="${w}" height="${h}" fill="#ffffff" />`,
    ...body,
    "</svg>",
  ].join("\n");

export interface FiberMark {
  phases: number[];
  color: string;
  label?: string;
}

/**
 * Simplex panel: outline, the polyline of visited convex coordinates,
 * and a highlighted mark at the current one.
 */
export const renderSimplexPanel = (
  radix: number,
  visitedConvex: number[][],
  width = 360,
  height = 320,
): string => {
  const verts = simplexVertices(radix);
  const canvas = canvasFor(verts, width, height);
  const body: string[] = [];
  for (let i = 0; i < radix; i++) {
    for (let j = i + 1; j < radix; j++) {
      body.push(line(canvas, verts[i], verts[j], "#303030", 1.4));
    }
  }
  const centroid: Vec2 = [
    verts.reduce((s, v) => s + v[0], 0) / radix,
    verts.reduce((s, v) => s + v[1], 0) / radix,
  ];
  verts.forEach((v, i) => {
    const ax = v[0] - centroid[0];
    const ay = v[1] - centroid[1];
    const n = Math.max(Math.hypot(ax, ay), 1e-9);
    body.push(text(canvas, v, KET_LABELS[radix][i], (14 * ax) / n - 10, (-14 * ay) / n + 4));
  });
  const embedded = visitedConvex.map((p) => embedSimplex(radix, p));
  for (let k = 1; k < embedded.length; k++) {
    body.push(line(canvas, embedded[k - 1], embedded[k], "#7090c0", 1.3));
  }
  embedded.forEach((p, k) => {
    const isCurrent = k === embedded.length - 1;
    body.push(circle(canvas, p, isCurrent ? 5 : 3, isCurrent ? "#b03030" : "#7090c0"));
  });
  return svgDoc(width, height, body);
};

/**
 * Fiber panel: the cut-open fundamental domain over the current base
 * point (interval, unit square, or axonometric cube) with phase marks.
 */
export const renderFiberPanel = (
  toricPoint: ToricPointJson,
  overlays: FiberMark[] = [],
  width = 360,
  height = 320,
  includeCurrent = true,
): string => {
  const axes = fiberFreeAxes(toricPoint.convex);
  const n = axes.length;
  const frame: Vec2[] = [
    [1, 0],
    [0, 1],
    [AXO_X, AXO_Y],
  ].slice(0, n) as Vec2[];
  const corners: Vec2[] = [];
  for (let subset = 0; subset < 1 << n; subset++) {
    let x = 0;
    let y = 0;
    for (let i = 0; i < n; i++) {
      if (subset & (1 << i)) {
        x += frame[i][0];
        y += frame[i][1];
      }
    }
    corners.push([x, y]);
  }
  const marks: FiberMark[] = includeCurrent
    ? [
        { phases: axes.map((i) => toricPoint.phases[i]), color: "#b03030", label: "now" },
        ...overlays,
      ]
    : [...overlays];
  const embedMark = (phases: number[]): Vec2 => {
    let x = 0;
    let y = 0;
    phases.forEach((theta, i) => {
      x += (theta / TWO_PI) * frame[i][0];
      y += (theta / TWO_PI) * frame[i][1];
    });
    return [x, y];
  };
  const canvas = canvasFor(corners.length > 1 ? corners : [[0, 0], [1, 1]], width, height);
  const body: string[] = [];
  if (n === 0) {
    body.push(text(canvas, [0, 0], "point fiber (exceptional orbit)", 8, 4));
  } else if (n === 1) {
    body.push(line(canvas, [0, 0], frame[0], "#303030", 1.4));
  } else if (n === 2) {
    const [e1, e2] = frame;
    const quad: Vec2[] = [[0, 0], e1, [e1[0] + e2[0], e1[1] + e2[1]], e2];
    for (let k = 0; k < 4; k++) body.push(line(canvas, quad[k], quad[(k + 1) % 4], "#303030", 1.4));
  } else {
    const [e1, e2, e3] = frame;
    const add = (a: Vec2, b: Vec2): Vec2 => [a[0] + b[0], a[1] + b[1]];
    const bottom: Vec2[] = [[0, 0], e1, add(e1, e2), e2];
    for (let k = 0; k < 4; k++) {
      body.push(line(canvas, bottom[k], bottom[(k + 1) % 4], "#303030", 1.2, k >= 2 ? "4,3" : ""));
      body.push(line(canvas, add(bottom[k], e3), add(bottom[(k + 1) % 4], e3), "#303030", 1.2));
      body.push(line(canvas, bottom[k], add(bottom[k], e3), "#303030", 1.2, k >= 2 ? "4,3" : ""));
    }
  }
  for (const mark of marks) {
    const p = embedMark(mark.phases);
    body.push(circle(canvas, p, 4, mark.color));
    if (mark.label) body.push(text(canvas, p, mark.label, 7, -7));
  }
  const base = toricPoint.convex.map((v) => v.toFixed(3)).join(", ");
  body.push(`<text x="10" y="${height - 8}" font-family="Helvetica, Arial, sans-serif" font-size="11" fill="#555555">fiber over (${base})</text>`);
  return svgDoc(width, height, body);
};

export interface BadgeView {
  text: string;
  color: string;
  detail: string;
}

/** Entanglement badge contents, straight from the service report. */
export const badgeFor = (
  report: EntanglementReportJson | null,
  minDistance?: number,
): BadgeView => {
  if (!report) return { text: "n/a", color: "#888888", detail: "" };
  const colors: Record<string, string> = {
    separable: "#2e7d32",
    partial: "#f9a825",
    maximal: "#c62828",
  };
  const detailParts = [`concurrence ${report.concurrence.toFixed(6)}`];
  if (minDistance !== undefined) {
    detailParts.push(`distance to separable ${minDistance.toFixed(6)}`);
  }
  return {
    text: report.class,
    color: colors[report.class] ?? "#888888",
    detail: detailParts.join(" · "),
  };
};
