/** Golden tests: every label the explorer renders must byte-match the
 * service JSON fixtures generated by the backend CLI. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { cellLabels, hoverChain, sectorModels } from "../src/render/sunburst";
import { edgeColor, edgeModels, formLabel, markedEdge, spineEdgeIds } from "../src/render/cark";
import { plotModel } from "../src/render/geodesic";
import { applyLayout, initialState, moveToCenter, requestLayout } from "../src/state";
import type { CarkJson, GeodesicJson, SunburstJson } from "../src/types";

const here = dirname(fileURLToPath(import.meta.url));

function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf8")) as T;
}

const layout = fixture<SunburstJson>("sunburst_depth3.json");
const recentered = fixture<SunburstJson>("sunburst_depth3_center_LS.json");
const cark = fixture<CarkJson>("cark_-14_2_1_depth1.json");
const disk = fixture<GeodesicJson>("geodesic_1_0_-2_disk.json");
const half = fixture<GeodesicJson>("geodesic_1_0_-2_h.json");

describe("sunburst rendering", () => {
  it("renders every cell label verbatim from the fixture", () => {
    const labels = cellLabels(layout);
    expect(labels).toEqual(layout.cells.map((c) => c.word));
    expect(labels.slice(0, 6)).toEqual(["", "L", "LL", "S", "LS", "LLS"]);
    const sectors = sectorModels(layout);
    sectors.forEach((s, i) => {
      expect(s.label).toBe(layout.cells[i].word);
      expect(s.startAngle).toBe(layout.cells[i].a0);
      expect(s.endAngle).toBe(layout.cells[i].a1);
    });
  });

  it("hover on LSL highlights the chain [LSL, LS, L]", () => {
    const index = layout.cells.findIndex((c) => c.word === "LSL");
    expect(index).toBeGreaterThanOrEqual(0);
    expect(hoverChain(layout, index)).toEqual(["LSL", "LS", "L"]);
  });
});

describe("move to center", () => {
  it("requests the clicked cell's displayed word as the new center", () => {
    let state = { ...initialState, depth: 3 };
    const [afterFirst, firstRequest] = requestLayout(state);
    state = applyLayout(afterFirst, firstRequest, layout);
    const index = layout.cells.findIndex((c) => c.word === "LS");
    const [next, request] = moveToCenter(state, index);
    expect(request.center).toBe("LS");
    expect(request.depth).toBe(3);
    const settled = applyLayout(next, request, recentered);
    expect(cellLabels(settled.sunburst!)).toEqual(recentered.cells.map((c) => c.word));
    expect(settled.sunburst!.center).toBe("LS");
  });

  it("drops stale responses by sequence number", () => {
    let state = { ...initialState, depth: 3 };
    const [afterFirst, staleRequest] = requestLayout(state);
    const [afterSecond, freshRequest] = requestLayout(afterFirst);
    let settled = applyLayout(afterSecond, freshRequest, recentered);
    settled = applyLayout(settled, staleRequest, layout);
    expect(settled.sunburst).toBe(recentered);
  });
});

describe("cark rendering", () => {
  it("labels every edge with the service form, verbatim", () => {
    const models = edgeModels(cark);
    models.forEach((m, i) => {
      const f = cark.edges[i].form;
      expect(m.label).toBe(`(${f.a},${f.b},${f.c})`);
    });
  });

  it("marks the (-14,2,1) spine edge red", () => {
    const marked = markedEdge(cark);
    expect(marked).toBeDefined();
    expect(marked!.form).toEqual({ a: "-14", b: "2", c: "1" });
    expect(marked!.on_spine).toBe(true);
    expect(edgeColor(marked!)).toBe("red");
  });

  it("draws the 14-edge spine cycle of the discriminant-60 class", () => {
    expect(spineEdgeIds(cark)).toHaveLength(14);
  });

  it("hovering any edge shows the core's form for that edge", () => {
    for (const edge of cark.edges) {
      expect(formLabel(edge.form)).toBe(`(${edge.form.a},${edge.form.b},${edge.form.c})`);
    }
  });
});

describe("geodesic rendering", () => {
  it("disk endpoints land on the unit circle", () => {
    const plot = plotModel(disk);
    expect(plot.model).toBe("disk");
    for (const [x, y] of plot.endpoints) {
      expect(Math.abs(Math.hypot(x, y) - 1)).toBeLessThan(1e-9);
    }
  });

  it("half-plane samples stay in the upper half plane", () => {
    const plot = plotModel(half);
    expect(plot.points.length).toBe(64);
    for (const [, y] of plot.points) {
      expect(y).toBeGreaterThanOrEqual(-1e-12);
    }
  });

  it("passes sample coordinates through untouched", () => {
    const plot = plotModel(disk);
    expect(plot.points).toBe(disk.samples);
  });
});
