/** Sunburst (slit disk) render model: labels, sector geometry in screen
 * units, and the hover chain to the center.  Cell words pass through
 * verbatim; the only numbers computed here are screen coordinates. */

import type { SunburstCellJson, SunburstJson } from "../types";

export interface SectorModel {
  label: string;
  annulus: number;
  startAngle: number;
  endAngle: number;
  innerRadius: number;
  outerRadius: number;
  cellIndex: number;
}

const BASE_RADIUS = 40;
const RING_THICKNESS = 36;

export function sectorModels(layout: SunburstJson): SectorModel[] {
  return layout.cells.map((cell, i) => ({
    label: cell.word,
    annulus: cell.annulus,
    startAngle: cell.a0,
    endAngle: cell.a1,
    innerRadius: BASE_RADIUS + cell.annulus * RING_THICKNESS,
    outerRadius: BASE_RADIUS + (cell.annulus + 1) * RING_THICKNESS,
    cellIndex: i,
  }));
}

/** Labels in layout order, exactly as the service sent them. */
export function cellLabels(layout: SunburstJson): string[] {
  return layout.cells.map((cell) => cell.word);
}

/** The hover chain: the cell and its ancestors down to annulus 0, the path
 * drawn as the blue line to the center. */
export function hoverChain(layout: SunburstJson, cellIndex: number): string[] {
  const chain: string[] = [];
  let current: SunburstCellJson | null = layout.cells[cellIndex];
  let index: number | null = cellIndex;
  while (current !== null) {
    chain.push(current.word);
    index = current.parent;
    current = index === null ? null : layout.cells[index];
  }
  return chain;
}

export function highlightedIndices(layout: SunburstJson, cellIndex: number): number[] {
  const indices: number[] = [];
  let index: number | null = cellIndex;
  while (index !== null) {
    indices.push(index);
    index = layout.cells[index].parent;
  }
  return indices;
}
