/** Browser entry point: wires the service API to the render models with a
 * minimal SVG DOM. */

import { makeApi } from "./api";
import { sectorModels, highlightedIndices } from "./render/sunburst";
import { edgeModels } from "./render/cark";
import { plotModel, toSvgPath } from "./render/geodesic";
import { applyLayout, initialState, moveToCenter, requestLayout, type ViewState } from "./state";

const SVG_NS = "http://www.w3.org/2000/svg";
const api = makeApi(window.location.origin);
let state: ViewState = { ...initialState, depth: 8 };

function polar(cx: number, cy: number, r: number, angle: number): [number, number] {
  return [cx + r * Math.cos(angle), cy - r * Math.sin(angle)];
}

function sectorPath(cx: number, cy: number, s: { startAngle: number; endAngle: number; innerRadius: number; outerRadius: number }): string {
  const [x0, y0] = polar(cx, cy, s.innerRadius, s.startAngle);
  const [x1, y1] = polar(cx, cy, s.outerRadius, s.startAngle);
  const [x2, y2] = polar(cx, cy, s.outerRadius, s.endAngle);
  const [x3, y3] = polar(cx, cy, s.innerRadius, s.endAngle);
  const large = s.endAngle - s.startAngle > Math.PI ? 1 : 0;
  return (
    `M${x0},${y0} L${x1},${y1} ` +
    `A${s.outerRadius},${s.outerRadius} 0 ${large} 0 ${x2},${y2} ` +
    `L${x3},${y3} ` +
    `A${s.innerRadius},${s.innerRadius} 0 ${large} 1 ${x0},${y0} Z`
  );
}

function drawSunburst(svg: SVGSVGElement): void {
  if (state.sunburst === null) {
    return;
  }
  svg.replaceChildren();
  const cx = 400;
  const cy = 400;
  const highlighted = state.hovered === null ? new Set<number>() : new Set(highlightedIndices(state.sunburst, state.hovered));
  for (const sector of sectorModels(state.sunburst)) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", sectorPath(cx, cy, sector));
    path.setAttribute("fill", highlighted.has(sector.cellIndex) ? "#9cf" : "#eee");
    path.setAttribute("stroke", "#333");
    path.addEventListener("mouseenter", () => {
      state = { ...state, hovered: sector.cellIndex };
      drawSunburst(svg);
    });
    path.addEventListener("click", () => void navigate(sector.cellIndex, svg));
    svg.appendChild(path);
    const mid = (sector.startAngle + sector.endAngle) / 2;
    const [tx, ty] = polar(cx, cy, (sector.innerRadius + sector.outerRadius) / 2, mid);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(tx));
    text.setAttribute("y", String(ty));
    text.setAttribute("text-anchor", "middle");
    text.textContent = sector.label === "" ? "I" : sector.label;
    svg.appendChild(text);
  }
}

async function navigate(cellIndex: number, svg: SVGSVGElement): Promise<void> {
  const [next, request] = moveToCenter(state, cellIndex);
  state = next;
  const payload = await api.sunburst(request.depth, request.center);
  state = applyLayout(state, request, payload);
  drawSunburst(svg);
}

async function drawCark(svg: SVGSVGElement, form: string, depth: number): Promise<void> {
  const graph = await api.cark(form, depth);
  svg.replaceChildren();
  const edges = edgeModels(graph);
  const n = edges.filter((e) => e.onSpine).length;
  edges.forEach((edge, i) => {
    const line = document.createElementNS(SVG_NS, "line");
    const angle0 = (2 * Math.PI * i) / Math.max(n, 1);
    const angle1 = (2 * Math.PI * (i + 1)) / Math.max(n, 1);
    const [x0, y0] = polar(400, 400, edge.onSpine ? 150 : 230, angle0);
    const [x1, y1] = polar(400, 400, edge.onSpine ? 150 : 230, angle1);
    line.setAttribute("x1", String(x0));
    line.setAttribute("y1", String(y0));
    line.setAttribute("x2", String(x1));
    line.setAttribute("y2", String(y1));
    line.setAttribute("stroke", edge.color);
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = edge.label;
    line.appendChild(title);
    svg.appendChild(line);
  });
}

async function drawGeodesic(svg: SVGSVGElement, form: string, model: string): Promise<void> {
  const payload = await api.geodesic(form, model, 128);
  const plot = plotModel(payload);
  const path = document.createElementNS(SVG_NS, "path");
  path.setAttribute("d", toSvgPath(plot.points, 150, 400, model === "disk" ? 400 : 700));
  path.setAttribute("stroke", "blue");
  path.setAttribute("fill", "none");
  svg.appendChild(path);
}

async function start(): Promise<void> {
  const svg = document.getElementById("view") as unknown as SVGSVGElement;
  const [next, request] = requestLayout(state);
  state = next;
  const payload = await api.sunburst(request.depth, request.center);
  state = applyLayout(state, request, payload);
  drawSunburst(svg);
  const formInput = document.getElementById("form") as HTMLInputElement;
  document.getElementById("show-cark")?.addEventListener("click", () => {
    void drawCark(svg, formInput.value, 2);
  });
  document.getElementById("show-geodesic")?.addEventListener("click", () => {
    void drawGeodesic(svg, formInput.value, "disk");
  });
}

if (typeof document !== "undefined" && document.getElementById("view") !== null) {
  void start();
}
