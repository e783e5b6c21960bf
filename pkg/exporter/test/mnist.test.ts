import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { loadMnist } from "../src/data.js";
import { trainAndExport } from "../src/train.js";
import { verifyRoundtrip } from "../src/verify.js";

describe("mnist-mlp6 export", () => {
  it("loads the bundled IDX files", () => {
    const { train, test } = loadMnist();
    expect(train.count).toBe(60000);
    expect(test.count).toBe(10000);
    expect(train.dim).toBe(784);
    expect(Math.max(...train.x.subarray(0, 784))).toBeLessThanOrEqual(1.0);
    expect(test.y[0]).toBe(7);   // well-known first test label
  });

  it("reaches >= 95% test accuracy and verifies round-trip within 0.1 points",
     { timeout: 600_000 }, () => {
    const dir = mkdtempSync(join(tmpdir(), "mnist-"));
    // full test split: the manifest accuracy and the roundtrip recomputation
    // must describe the same sample set for the 0.1-point comparison
    const result = trainAndExport("mnist-mlp6", { outDir: dir, seed: 1234 });
    expect(result.testAccuracy).toBeGreaterThanOrEqual(0.95);
    const report = verifyRoundtrip(join(dir, "model"), join(dir, "data", "test"),
                                   0.001);
    expect(report.ok).toBe(true);
    expect(report.predictionMismatches).toBe(0);
    expect(Math.abs(report.accuracy - result.testAccuracy)).toBeLessThanOrEqual(0.001);
  });
});
