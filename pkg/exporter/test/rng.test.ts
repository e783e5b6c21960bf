import { describe, expect, it } from "vitest";

import { Rng } from "../src/rng.js";

describe("rng", () => {
  it("is deterministic for a fixed seed", () => {
    const a = new Rng(42);
    const b = new Rng(42);
    for (let i = 0; i < 1000; i++) expect(a.next()).toBe(b.next());
    expect(new Rng(42).gaussian()).toBe(new Rng(42).gaussian());
  });

  it("produces uniforms in [0,1) with a sane mean", () => {
    const rng = new Rng(7);
    let sum = 0;
    for (let i = 0; i < 20000; i++) {
      const v = rng.next();
      expect(v).toBeGreaterThanOrEqual(0);
      expect(v).toBeLessThan(1);
      sum += v;
    }
    expect(sum / 20000).toBeCloseTo(0.5, 1);
  });

  it("gaussian has roughly unit variance", () => {
    const rng = new Rng(9);
    let s = 0;
    let s2 = 0;
    const n = 20000;
    for (let i = 0; i < n; i++) {
      const v = rng.gaussian();
      s += v;
      s2 += v * v;
    }
    expect(s / n).toBeCloseTo(0, 1);
    expect(s2 / n - (s / n) ** 2).toBeCloseTo(1, 1);
  });

  it("shuffle permutes without losing elements", () => {
    const idx = new Int32Array(100);
    for (let i = 0; i < 100; i++) idx[i] = i;
    new Rng(3).shuffle(idx);
    expect(new Set(idx).size).toBe(100);
    expect(Array.from(idx)).not.toEqual([...Array(100).keys()]);
  });
});
