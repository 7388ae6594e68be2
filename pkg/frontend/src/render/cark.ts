/** Cark graph render model: node shapes, edge styling, and hover labels.
 * Form coefficients are joined as strings, never parsed. */

import type { CarkEdgeJson, CarkJson, FormJson } from "../types";

export interface EdgeModel {
  id: string;
  from: string;
  to: string;
  label: string;
  color: string;
  onSpine: boolean;
  depth: number;
}

export interface NodeModel {
  id: string;
  shape: "circle" | "disc";
}

export function formLabel(form: FormJson): string {
  return `(${form.a},${form.b},${form.c})`;
}

export function edgeColor(edge: CarkEdgeJson): string {
  if (edge.marked) {
    return "red";
  }
  return edge.on_spine ? "black" : "gray";
}

export function edgeModels(graph: CarkJson): EdgeModel[] {
  return graph.edges.map((edge) => ({
    id: edge.id,
    from: edge.from,
    to: edge.to,
    label: formLabel(edge.form),
    color: edgeColor(edge),
    onSpine: edge.on_spine,
    depth: edge.depth,
  }));
}

export function nodeModels(graph: CarkJson): NodeModel[] {
  return graph.nodes.map((node) => ({
    id: node.id,
    shape: node.kind === "circ" ? "circle" : "disc",
  }));
}

/** The spine cycle drawn as the central loop. */
export function spineEdgeIds(graph: CarkJson): string[] {
  return graph.edges.filter((e) => e.on_spine).map((e) => e.id);
}

export function markedEdge(graph: CarkJson): CarkEdgeJson | undefined {
  return graph.edges.find((e) => e.marked);
}
