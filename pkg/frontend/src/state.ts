/** Pure view-state transitions.
 *
 * Every navigation produces a request descriptor tagged with a sequence
 * number; responses are applied only when their sequence number matches the
 * latest request, so a slow earlier response can never clobber a newer view.
 */

import type { CarkJson, SunburstJson } from "./types";

export interface ViewState {
  center: string;
  depth: number;
  sunburst: SunburstJson | null;
  cark: CarkJson | null;
  hovered: number | null;
  seq: number;
}

export interface SunburstRequest {
  kind: "sunburst";
  depth: number;
  center: string;
  seq: number;
}

export const initialState: ViewState = {
  center: "",
  depth: 8,
  sunburst: null,
  cark: null,
  hovered: null,
  seq: 0,
};

export function requestLayout(state: ViewState): [ViewState, SunburstRequest] {
  const seq = state.seq + 1;
  return [
    { ...state, seq },
    { kind: "sunburst", depth: state.depth, center: state.center, seq },
  ];
}

/** Move-to-Center: the clicked cell's displayed word (already the product
 * center * position, computed by the service) becomes the new center
 * verbatim; the UI does no word arithmetic. */
export function moveToCenter(state: ViewState, cellIndex: number): [ViewState, SunburstRequest] {
  const layout = state.sunburst;
  if (layout === null) {
    return requestLayout(state);
  }
  const next = { ...state, center: layout.cells[cellIndex].word, hovered: null };
  return requestLayout(next);
}

/** Apply a layout response; stale sequence numbers are dropped. */
export function applyLayout(
  state: ViewState,
  request: SunburstRequest,
  payload: SunburstJson,
): ViewState {
  if (request.seq !== state.seq) {
    return state;
  }
  return { ...state, sunburst: payload };
}

export function hoverCell(state: ViewState, cellIndex: number | null): ViewState {
  return { ...state, hovered: cellIndex };
}
