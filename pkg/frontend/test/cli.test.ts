import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterAll, describe, expect, it } from "vitest";

import { main } from "../src/cli.js";

const tmp = fs.mkdtempSync(path.join(os.tmpdir(), "cli-test-"));
afterAll(() => fs.rmSync(tmp, { recursive: true, force: true }));

const SNAP = [
  "time,cell_index,x,u,psi,w,p",
  "0.0,0,-1.0,1.0,0.1,0.2,0.3",
  "0.0,1,1.0,2.0,0.1,0.2,0.3",
].join("\n");

function setup(name: string, spec: object): string {
  const dir = fs.mkdtempSync(path.join(tmp, name + "-"));
  fs.writeFileSync(path.join(dir, "snapshots.csv"), SNAP);
  const specPath = path.join(dir, "fig.json");
  fs.writeFileSync(specPath, JSON.stringify(spec));
  return specPath;
}

describe("command line entry point", () => {
  it("writes the SVG next to the spec by default", () => {
    const specPath = setup("ok", {
      kind: "snapshot",
      inputs: { snapshots: "snapshots.csv" },
      output: "fig.svg",
    });
    expect(main([specPath])).toBe(0);
    const svg = fs.readFileSync(
      path.join(path.dirname(specPath), "fig.svg"),
      "utf8",
    );
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("</svg>");
  });

  it("honors --out", () => {
    const specPath = setup("out", {
      kind: "snapshot",
      inputs: { snapshots: "snapshots.csv" },
      output: "fig.svg",
    });
    const outDir = path.join(tmp, "rendered");
    expect(main([specPath, "--out", outDir])).toBe(0);
    expect(fs.existsSync(path.join(outDir, "fig.svg"))).toBe(true);
  });

  it("exits 2 on a spec validation error", () => {
    const specPath = setup("badspec", {
      kind: "snapshot",
      inputs: {},
      output: "fig.svg",
    });
    expect(main([specPath])).toBe(2);
  });

  it("exits 2 when the CSV does not match the schema", () => {
    const dir = fs.mkdtempSync(path.join(tmp, "badcsv-"));
    fs.writeFileSync(path.join(dir, "snapshots.csv"), "time,x\n0,0");
    const specPath = path.join(dir, "fig.json");
    fs.writeFileSync(
      specPath,
      JSON.stringify({
        kind: "snapshot",
        inputs: { snapshots: "snapshots.csv" },
        output: "fig.svg",
      }),
    );
    expect(main([specPath])).toBe(2);
    expect(fs.existsSync(path.join(dir, "fig.svg"))).toBe(false);
  });
});
