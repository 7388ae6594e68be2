/** Wire types mirroring the JSON service schemas.
 *
 * Integer data arrives as decimal strings and is never parsed or
 * recomputed here: the explorer is a pure presentation layer and every
 * displayed number must come verbatim from a service payload.
 */

export interface FormJson {
  a: string;
  b: string;
  c: string;
}

export interface ElementJson {
  p: string;
  q: string;
  r: string;
  s: string;
}

export interface SunburstCellJson {
  word: string;
  annulus: number;
  a0: number;
  a1: number;
  parent: number | null;
}

export interface SunburstJson {
  cells: SunburstCellJson[];
  depth: number;
  center: string;
}

export interface CarkNodeJson {
  id: string;
  kind: "circ" | "bullet";
}

export interface CarkEdgeJson {
  id: string;
  from: string;
  to: string;
  form: FormJson;
  on_spine: boolean;
  depth: number;
  marked: boolean;
}

export interface CarkJson {
  nodes: CarkNodeJson[];
  edges: CarkEdgeJson[];
  signature: string;
}

export interface SpineJson {
  forms: FormJson[];
  signature: string;
}

export interface GeodesicJson {
  model: "half_plane" | "disk";
  center: [number, number] | null;
  radius: number | null;
  endpoints: [[number, number], [number, number]];
  samples: [number, number][];
}

export interface SolveJson {
  solutions: [string, string][];
  automorph?: ElementJson | null;
  path_letters?: string;
}

export interface ErrorJson {
  code: string;
  message: string;
}
