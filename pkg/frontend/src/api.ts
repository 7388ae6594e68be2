/** Thin fetch wrappers over the JSON service endpoints. */

import type { CarkJson, GeodesicJson, SolveJson, SpineJson, SunburstJson } from "./types";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function get<T>(base: string, path: string, params: Record<string, string>): Promise<T> {
  const url = new URL(path, base);
  for (const [key, value] of Object.entries(params)) {
    if (value !== "") {
      url.searchParams.set(key, value);
    }
  }
  const response = await fetch(url);
  if (!response.ok) {
    const body = await response.json().catch(() => ({ code: "unknown", message: "" }));
    throw new ApiError(response.status, body.code, body.message);
  }
  return response.json() as Promise<T>;
}

export interface Api {
  sunburst(depth: number, center: string): Promise<SunburstJson>;
  cark(form: string, depth: number): Promise<CarkJson>;
  spine(form: string): Promise<SpineJson>;
  geodesic(form: string, model: string, samples: number): Promise<GeodesicJson>;
  solve(form: string, n: string): Promise<SolveJson>;
}

export function makeApi(base: string): Api {
  return {
    sunburst: (depth, center) =>
      get(base, "/sunburst", { depth: String(depth), center }),
    cark: (form, depth) => get(base, "/cark", { form, depth: String(depth) }),
    spine: (form) => get(base, "/spine", { form }),
    geodesic: (form, model, samples) =>
      get(base, "/geodesic", { form, model, samples: String(samples) }),
    solve: (form, n) => get(base, "/solve", { form, n }),
  };
}
