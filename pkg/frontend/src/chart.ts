import type { Reading } from "./types.js";

export interface TrendPoint {
  ts: number;
  value: number;
}

export interface TrendOptions {
  gas: string;
  selected?: number | null;
  width?: number;
  height?: number;
  padding?: number;
}

/** Concentration series for one gas; readings where the channel was
 * faulted carry no value and are skipped. */
export function gasSeries(points: Reading[], gas: string): TrendPoint[] {
  const series: TrendPoint[] = [];
  for (const reading of points) {
    const value = reading.ppm[gas];
    if (value !== undefined) {
      series.push({ ts: reading.ts, value });
    }
  }
  return series;
}

function coord(n: number): string {
  return n.toFixed(2);
}

/**
 * Inline SVG for one gas trend. Every sample is a circle carrying
 * data-gas/data-index, so a click handler can map it back to the exact
 * stored value; the selected point is enlarged.
 */
export function renderTrendSvg(points: TrendPoint[], options: TrendOptions): string {
  const width = options.width ?? 560;
  const height = options.height ?? 150;
  const padding = options.padding ?? 14;
  const selected = options.selected ?? null;

  if (points.length === 0) {
    return `<svg class="trend" viewBox="0 0 ${width} ${height}" role="img"></svg>`;
  }

  const t0 = points[0].ts;
  const t1 = points[points.length - 1].ts;
  const tSpan = t1 - t0 || 1;
  let vMin = Infinity;
  let vMax = -Infinity;
  for (const p of points) {
    vMin = Math.min(vMin, p.value);
    vMax = Math.max(vMax, p.value);
  }
  const vSpan = vMax - vMin || 1;

  const x = (ts: number) => padding + ((ts - t0) / tSpan) * (width - 2 * padding);
  const y = (v: number) => height - padding - ((v - vMin) / vSpan) * (height - 2 * padding);

  const path = points
    .map((p, i) => `${i === 0 ? "M" : "L"}${coord(x(p.ts))} ${coord(y(p.value))}`)
    .join(" ");

  const circles = points
    .map((p, i) => {
      const isSelected = i === selected;
      const cls = isSelected ? "trend-point selected" : "trend-point";
      const r = isSelected ? 6 : 4;
      return (
        `<circle class="${cls}" data-gas="${options.gas}" data-index="${i}" ` +
        `cx="${coord(x(p.ts))}" cy="${coord(y(p.value))}" r="${r}"></circle>`
      );
    })
    .join("");

  return (
    `<svg class="trend" viewBox="0 0 ${width} ${height}" role="img">` +
    `<path class="trend-line" d="${path}"></path>${circles}</svg>`
  );
}
