/** Geodesic plots: polyline points for either model, taken directly from
 * the sampled coordinates in the payload. */

import type { GeodesicJson } from "../types";

export interface PlotModel {
  model: "half_plane" | "disk";
  points: [number, number][];
  endpoints: [[number, number], [number, number]];
}

export function plotModel(payload: GeodesicJson): PlotModel {
  return {
    model: payload.model,
    points: payload.samples,
    endpoints: payload.endpoints,
  };
}

export function toSvgPath(points: [number, number][], scale: number, cx: number, cy: number): string {
  return points
    .map(([x, y], i) => `${i === 0 ? "M" : "L"}${cx + x * scale},${cy - y * scale}`)
    .join(" ");
}
